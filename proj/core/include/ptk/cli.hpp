#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptk::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitPass = 0;          // pass / true
inline constexpr int kExitFail = 1;          // fail / false / unknown
inline constexpr int kExitUsage = 2;         // usage or parse error
inline constexpr int kExitPrecondition = 3;  // semantic precondition failure

// Runs the command line (without argv[0]); writes results to out and
// diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptk::cli
