#include <doctest.h>

#include <fstream>
#include <sstream>

#include "ptk/cli.hpp"
#include "ptk/godel.hpp"
#include "ptk/prop.hpp"
#include "ptk/syntax.hpp"

using namespace ptk;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval subcommand") {
  auto r = run_cli({"eval", "(S(0) + S(0) = S(S(0)))"});
  CHECK(r.code == 0);
  CHECK(r.out == "tr0: true\n");

  r = run_cli({"eval", "~(0 = 0)"});
  CHECK(r.code == 1);
  CHECK(r.out == "tr0: false\n");

  r = run_cli({"eval", "((S(0) + S(S(0))) * S(S(0)))"});
  CHECK(r.code == 0);
  CHECK(r.out == "val: 6\n");

  r = run_cli({"eval", "E v0 (v0 = 0)", "--bound", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "std_truth: true\n");

  r = run_cli({"eval", "E v0 (S(v0) = 0)", "--bound", "5"});
  CHECK(r.code == 1);
  CHECK(r.out == "std_truth: unknown\n");

  // Open term: precondition failure.
  r = run_cli({"eval", "(v0 + S(0))"});
  CHECK(r.code == 3);

  // Garbage: parse error.
  r = run_cli({"eval", "(v0 ="});
  CHECK(r.code == 2);
}

TEST_CASE("construct subcommand") {
  auto r = run_cli({"construct", "stopping", "--c", "1"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "(((0 = 0) & (0 = S(0))) | (~(0 = 0) & ((S(0) = S(0)) & (S(0) = S(S(0))))))\n");

  r = run_cli({"construct", "unique", "--c", "1"});
  CHECK(r.code == 0);
  CHECK(parse_formula(r.out) ==
        Formula::disj(Formula::conj(Formula::eq(numeral(0), numeral(0)),
                                    Formula::neg(Formula::eq(numeral(1), numeral(1)))),
                      Formula::conj(Formula::eq(numeral(1), numeral(1)),
                                    Formula::neg(Formula::eq(numeral(0), numeral(0))))));

  // Theta output reparses.
  r = run_cli({"construct", "theta", "--c", "10"});
  CHECK(r.code == 0);
  CHECK_NOTHROW(parse_formula(r.out));

  // Godel code output is a decimal number.
  r = run_cli({"construct", "bigor", "--c", "0", "--godel"});
  CHECK(r.code == 0);
  CHECK(Nat(r.out.substr(0, r.out.size() - 1)) ==
        godel_encode(Formula::eq(numeral(0), numeral(0))).value);

  r = run_cli({"construct", "iota", "--a", "1", "--n", "1"});
  CHECK(r.code == 0);
  CHECK_NOTHROW(parse_formula(r.out));

  r = run_cli({"construct", "wat", "--c", "1"});
  CHECK(r.code == 2);
}

TEST_CASE("check subcommand: tautology") {
  auto taut = run_cli({"check", "((0 = 0) | ~(0 = 0))"});
  CHECK(taut.code == 0);
  CHECK(taut.out == "tautology: true\n");

  auto not_taut = run_cli({"check", "((0 = 0) | (S(0) = 0))"});
  CHECK(not_taut.code == 1);
  CHECK(not_taut.out.find("tautology: false") == 0);
  CHECK(not_taut.out.find("countermodel:") != std::string::npos);

  auto open = run_cli({"check", "(v0 = 0)"});
  CHECK(open.code == 3);
}

TEST_CASE("check subcommand: entails") {
  std::string premises_path = "/tmp/ptk_test_premises.txt";
  {
    std::ofstream f(premises_path);
    f << "(0 = 0)\n";
    f << "# a comment line\n";
    f << "~(S(0) = 0)\n";
  }
  auto yes = run_cli({"check", "(0 = 0)", "--mode", "entails", "--premises", premises_path});
  CHECK(yes.code == 0);
  auto no = run_cli({"check", "(S(0) = 0)", "--mode", "entails", "--premises", premises_path});
  CHECK(no.code == 1);
}

TEST_CASE("check subcommand: export-dimacs") {
  auto r = run_cli({"check", "((0 = 0) & ~(0 = 0))", "--mode", "export-dimacs"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("p cnf ", 0) == 0);
  CnfFormula cnf = parse_dimacs(r.out);
  CHECK_FALSE(dpll_sat(cnf).has_value());  // p & ~p is unsatisfiable

  // Negated export of a tautology is unsatisfiable as well.
  auto neg = run_cli({"check", "((0 = 0) | ~(0 = 0))", "--mode", "export-dimacs", "--negate"});
  CHECK_FALSE(dpll_sat(parse_dimacs(neg.out)).has_value());
}

TEST_CASE("verify subcommand") {
  auto r = run_cli({"verify", "thm32", "--n", "40", "--c", "10", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);

  auto unknown = run_cli({"verify", "bogus"});
  CHECK(unknown.code == 2);

  auto json = run_cli({"verify", "acdc", "--n", "40"});
  CHECK(json.code == 0);
  CHECK(json.out.find("\"suite\": \"acdc\"") != std::string::npos);
  CHECK(json.out.find("\"ms\": 0") != std::string::npos);

  auto timed = run_cli({"verify", "acdc", "--n", "40", "--timing"});
  CHECK(timed.code == 0);
}

TEST_CASE("verify all is byte-identical across runs") {
  std::vector<std::string> args{"verify",  "all", "--seed", "42",
                                "--n",     "30",  "--c",    "0"};
  auto a = run_cli(args);
  auto b = run_cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("help exits cleanly") {
  auto r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}
