#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ptk {

// One failing instance of a verification suite, with the offending input and
// the expected/actual verdicts serialized as text.
struct Failure {
  std::string input;
  std::string expected;
  std::string actual;
};

// Structured pass/fail record emitted by every checker and verifier suite.
struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::uint64_t instances = 0;
  std::uint64_t passes = 0;
  std::vector<Failure> failures;
  std::uint64_t ms = 0;
  // Free-form remarks (skipped counts, sizes); text output only, never JSON.
  std::vector<std::string> notes;

  bool pass() const { return failures.empty(); }

  void check(bool ok, const std::string& input, const std::string& expected,
             const std::string& actual) {
    ++instances;
    if (ok)
      ++passes;
    else
      failures.push_back({input, expected, actual});
  }

  // JSON object {suite, seed, instances, passes, failures, ms}. Timing is
  // only emitted when with_timing is set so that identically-seeded runs
  // serialize to identical bytes; without it "ms" is 0.
  std::string to_json(bool with_timing = false) const;

  // Human-readable one-block summary (always includes real timing).
  std::string to_text() const;
};

std::string reports_to_json(const std::vector<Report>& reports, bool with_timing = false);

}  // namespace ptk
