#include <doctest.h>

#include "ptk/eval.hpp"
#include "ptk/verifier.hpp"

using namespace ptk;

TEST_CASE("every suite passes on a reduced spec") {
  CorpusSpec spec;
  spec.seed = 7;
  for (const auto& name : suite_names()) {
    CorpusSpec s = spec;
    if (name == "thm32" || name == "tr0" || name == "acdc" || name == "engines")
      s.instances = 60;
    if (name == "theta") s.c_max = 600;
    if (name == "thm32") s.c_max = 12;
    Report r = run_suite(name, s);
    INFO(name, ": ", r.failures.empty() ? "" : r.failures.front().input);
    CHECK(r.pass());
    CHECK(r.instances > 0);
    CHECK(r.suite == name);
  }
}

TEST_CASE("suites are deterministic given the seed") {
  CorpusSpec spec;
  spec.seed = 99;
  spec.instances = 40;
  for (const std::string name : {"thm32", "acdc", "tr0", "engines", "cor34"}) {
    Report a = run_suite(name, spec);
    Report b = run_suite(name, spec);
    CHECK(a.instances == b.instances);
    CHECK(a.passes == b.passes);
    CHECK(a.failures.size() == b.failures.size());
    CHECK(a.to_json(false) == b.to_json(false));
  }
}

TEST_CASE("unknown suite is rejected") {
  CHECK_THROWS_AS(run_suite("nope", CorpusSpec{}), std::invalid_argument);
  CHECK(is_suite_name("theta"));
  CHECK_FALSE(is_suite_name("nope"));
}

TEST_CASE("run_all covers every suite, with and without concurrency") {
  CorpusSpec spec;
  spec.seed = 5;
  spec.instances = 30;
  spec.c_max = 0;
  CorpusSpec small = spec;
  small.c_max = 0;
  auto sequential = run_all(small, 1);
  CHECK(sequential.size() == suite_names().size());
  for (std::size_t i = 0; i < sequential.size(); ++i)
    CHECK(sequential[i].suite == suite_names()[i]);

  auto parallel = run_all(small, 4);
  REQUIRE(parallel.size() == sequential.size());
  for (std::size_t i = 0; i < parallel.size(); ++i) {
    CHECK(parallel[i].suite == sequential[i].suite);
    CHECK(parallel[i].instances == sequential[i].instances);
    CHECK(parallel[i].passes == sequential[i].passes);
  }
}

TEST_CASE("saturation suite flags a family missing subformulas") {
  CorpusSpec spec;
  spec.family = {Formula::neg(Formula::eq(Term::zero(), Term::zero()))};
  spec.domain = Domain::range(0, 1);
  Report r = verify_saturation(spec);
  CHECK_FALSE(r.pass());
}

TEST_CASE("default family is subformula closed and has thirty formulas") {
  auto family = default_family();
  CHECK(family.size() == 30);
  std::unordered_set<Formula, FormulaHash> in_family(family.begin(), family.end());
  for (const auto& f : family) {
    switch (f.kind()) {
      case Formula::Kind::Not:
        CHECK(in_family.count(f.sub()));
        break;
      case Formula::Kind::Or:
      case Formula::Kind::And:
        CHECK(in_family.count(f.left()));
        CHECK(in_family.count(f.right()));
        break;
      case Formula::Kind::Exists:
      case Formula::Kind::Forall:
        CHECK(in_family.count(f.body()));
        break;
      default:
        break;
    }
  }
}

TEST_CASE("theta suite verdicts stay exact on a small prefix") {
  CorpusSpec spec;
  spec.c_max = 100;
  Report r = verify_theta(spec);
  CHECK(r.pass());
  // 0..100 has 101 codes plus the free-variable check, minus the skipped
  // quantified decodes recorded in the notes.
  CHECK(r.instances >= 100);
}

TEST_CASE("report serialization shapes") {
  Report r;
  r.suite = "demo";
  r.seed = 3;
  r.check(true, "a", "b", "b");
  r.check(false, "x", "y", "z");
  r.ms = 123;
  std::string stable = r.to_json(false);
  CHECK(stable.find("\"ms\": 0") != std::string::npos);
  CHECK(stable.find("\"suite\": \"demo\"") != std::string::npos);
  CHECK(stable.find("\"input\": \"x\"") != std::string::npos);
  std::string timed = r.to_json(true);
  CHECK(timed.find("\"ms\": 123") != std::string::npos);
  CHECK(r.to_text().find("FAIL") == 0);
}
