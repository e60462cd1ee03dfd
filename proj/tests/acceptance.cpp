// Acceptance suite: runs every headline check at its full size and prints
// one verdict line per criterion. Sizes and tolerances are fixed here, not
// configurable.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <sstream>

#include "ptk/cli.hpp"
#include "ptk/constructions.hpp"
#include "ptk/eval.hpp"
#include "ptk/prop.hpp"
#include "ptk/verifier.hpp"

using namespace ptk;

namespace {

bool announce(int number, const char* title, bool pass) {
  std::printf("[%s] criterion %2d: %s\n", pass ? "PASS" : "FAIL", number, title);
  std::fflush(stdout);
  return pass;
}

void dump_failures(const Report& r) {
  for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i)
    std::printf("        failure: %s | expected %s | got %s\n", r.failures[i].input.c_str(),
                r.failures[i].expected.c_str(), r.failures[i].actual.c_str());
}

}  // namespace

TEST_CASE("criterion 1: stopping disjunction vs case distinction, exhaustive c <= 5") {
  CorpusSpec spec;
  spec.seed = 42;
  spec.c_max = 5;
  Report r = verify_prop33(spec);
  bool ok = r.pass() && r.ms < 5000;
  if (!ok) dump_failures(r);
  CHECK(announce(1, "prop33 exhaustive, all-equal, < 5 s", ok));
  CHECK(r.pass());
  CHECK(r.ms < 5000);
}

TEST_CASE("criterion 2: unique-bridge tautology, tables c <= 5 and DPLL samples") {
  CorpusSpec spec;
  spec.seed = 42;
  spec.c_max = 64;
  spec.instances = 20;
  Report r = verify_cor34(spec);
  bool ok = r.pass() && r.ms < 30000;
  if (!ok) dump_failures(r);
  CHECK(announce(2, "cor34 tautologies incl. 20 DPLL samples in [6,64], < 30 s", ok));
  CHECK(r.pass());
  CHECK(r.ms < 30000);
}

TEST_CASE("criterion 3: planted least-true-index instances") {
  CorpusSpec spec;
  spec.seed = 42;
  spec.instances = 500;
  spec.c_max = 50;
  Report r = verify_thm32(spec);
  bool ok = r.pass() && r.instances >= 500;
  if (!ok) dump_failures(r);
  CHECK(announce(3, "thm32 desk analog, 500 planted instances, zero failures", ok));
  CHECK(r.pass());
}

TEST_CASE("criterion 4: compositional clauses and extensionality of tr0") {
  CorpusSpec spec;
  spec.seed = 42;
  spec.instances = 1000;
  Report r = verify_tr0_axioms(spec);
  bool ok = r.pass() && r.instances >= 1000;
  if (!ok) dump_failures(r);
  CHECK(announce(4, "tr0 axioms on 1000 random sentences, zero failures", ok));
  CHECK(r.pass());
}

TEST_CASE("criterion 5: case-distinction equivalence with out-of-range values") {
  CorpusSpec spec;
  spec.seed = 42;
  spec.instances = 200;
  Report r = verify_acdc(spec);
  std::size_t out_of_range = 0;
  for (const auto& note : r.notes) {
    std::istringstream is(note.substr(note.rfind(' ')));
    is >> out_of_range;
  }
  bool ok = r.pass() && out_of_range >= 20;
  if (!ok) dump_failures(r);
  CHECK(announce(5, "acdc on 200 instances incl. >= 20 out-of-range, zero failures", ok));
  CHECK(r.pass());
  CHECK(out_of_range >= 20);
}

TEST_CASE("criterion 6: proof-obligation tautologies and mutated duals") {
  bool all_ok = true;
  Rng rng(42);
  for (std::size_t c : {1u, 3u, 6u}) {
    Term t = Term::succ(Term::zero());
    SentenceSeq alphas, phis;
    Term num = Term::zero();
    for (std::size_t i = 0; i <= c; ++i) {
      alphas.push_back(Formula::eq(t, num));
      num = Term::succ(num);
      phis.push_back(Formula::eq(Term::mul(numeral(i), numeral(i)), Term::zero()));
    }
    std::size_t a = rng.below(c + 1);
    Formula acdc = acdc_lhs(t, phis);

    auto taut = [](const Formula& f) { return is_tautology(skeleton(f).formula); };

    Formula intro = Formula::imp(Formula::conj(alphas[a], phis[a]), acdc);
    std::vector<Formula> negs;
    for (const auto& al : alphas) negs.push_back(Formula::neg(al));
    Formula refut = Formula::imp(big_and_left(negs), Formula::neg(acdc));
    Permutation sigma = Permutation::swap_first(c + 1, c);
    SentenceSeq pa = permute_seq(alphas, sigma), pp = permute_seq(phis, sigma);
    std::vector<Formula> cases;
    for (std::size_t i = 0; i <= c; ++i) cases.push_back(Formula::conj(pa[i], pp[i]));
    Formula permuted = Formula::iff(acdc, big_or_left(cases));
    Formula bridge =
        Formula::imp(unique(alphas), Formula::iff(acdc, stopping_disjunction(alphas, phis, 0)));

    all_ok = all_ok && taut(intro) && taut(refut) && taut(permuted) && taut(bridge);

    // Mutated duals must fail.
    Formula intro_mut = Formula::imp(Formula::conj(alphas[a], phis[(a + 1) % (c + 1)]), acdc);
    std::vector<Formula> negs_short(negs.begin() + 1, negs.end());
    Formula refut_mut = Formula::imp(big_and_left(negs_short), Formula::neg(acdc));
    SentenceSeq pp_bad = pp;
    std::swap(pp_bad.front(), pp_bad.back());
    std::vector<Formula> cases_bad;
    for (std::size_t i = 0; i <= c; ++i) cases_bad.push_back(Formula::conj(pa[i], pp_bad[i]));
    Formula perm_mut = Formula::iff(acdc, big_or_left(cases_bad));
    Formula bridge_mut = Formula::iff(acdc, stopping_disjunction(alphas, phis, 0));

    all_ok = all_ok && !taut(intro_mut) && !taut(refut_mut) && !taut(perm_mut) &&
             !taut(bridge_mut);
  }
  CHECK(announce(6, "introduction/refutation/permutation/bridge tautologies + failing mutants",
                 all_ok));
  CHECK(all_ok);
}

TEST_CASE("criterion 7: theta sweep over codes up to 5000") {
  CorpusSpec spec;
  spec.seed = 42;
  spec.c_max = 5000;
  Report r = verify_theta(spec);
  bool skipped_reported = false;
  for (const auto& note : r.notes)
    skipped_reported = skipped_reported || note.find("skipped quantified") != std::string::npos;
  bool ok = r.pass() && skipped_reported;
  if (!ok) dump_failures(r);
  CHECK(announce(7, "theta agreement and non-code falsity for i <= 5000", ok));
  CHECK(r.pass());
  CHECK(skipped_reported);
}

TEST_CASE("criterion 8: saturation on the 30-formula family over {0..7}") {
  CorpusSpec spec;
  spec.seed = 42;
  Report r = verify_saturation(spec);  // default family and domain
  bool ok = r.pass() && r.ms < 60000;
  if (!ok) dump_failures(r);
  CHECK(announce(8, "saturation comp/ext/agreement/oracle on 30 formulas, < 60 s", ok));
  CHECK(r.pass());
  CHECK(r.ms < 60000);
}

TEST_CASE("criterion 9: trivialisation worked example and reconstruction") {
  const VarId v0{0}, v1{1}, v2{2}, v3{3};
  Term inner = Term::add(Term::mul(Term::var(v1), Term::succ(Term::zero())),
                         Term::mul(Term::zero(), Term::var(v2)));
  Formula phi = Formula::exists(
      v0, Formula::forall(
              v3, Formula::eq(Term::add(Term::var(v0), inner),
                              Term::add(Term::mul(Term::var(v0), Term::var(v3)),
                                        Term::zero()))));
  Template t = trivialise(phi);
  Formula expected = Formula::exists(
      v0, Formula::forall(
              v3, Formula::eq(Term::add(Term::var(v0), Term::var(v1)),
                              Term::add(Term::mul(Term::var(v0), Term::var(v3)),
                                        Term::var(v2)))));
  bool example_ok = t.skeleton() == expected && t.params().size() == 2 &&
                    t.params()[0] == inner && t.params()[1] == Term::zero() &&
                    t.reconstruct() == phi;

  Rng rng(42);
  std::size_t failures = 0;
  for (int i = 0; i < 10000; ++i) {
    Formula f = gen_formula(rng, 4, 3);
    if (!(trivialise(f).reconstruct() == f)) ++failures;
  }
  bool ok = example_ok && failures == 0;
  CHECK(announce(9, "trivialisation example exact + 10^4 reconstructions", ok));
  CHECK(example_ok);
  CHECK(failures == 0);
}

TEST_CASE("criterion 10: translation templates and size recurrence") {
  CorpusSpec spec;
  spec.seed = 42;
  spec.c_max = 3;
  spec.instances = 3;
  Report r = verify_iota(spec);
  bool ok = r.pass();
  if (!ok) dump_failures(r);
  CHECK(announce(10, "iota structural equality and size recurrence, a,n <= 3", ok));
  CHECK(r.pass());
}

TEST_CASE("criterion 11: engine agreement across tt, dpll and dimacs") {
  CorpusSpec spec;
  spec.seed = 42;
  spec.instances = 200;
  Report r = verify_engines(spec);
  bool ok = r.pass() && r.instances >= 200;
  if (!ok) dump_failures(r);
  CHECK(announce(11, "three-engine agreement on 200 formulas <= 16 atoms", ok));
  CHECK(r.pass());
}

TEST_CASE("criterion 12: byte-identical reports across seeded runs") {
  std::vector<std::string> args{"verify", "all", "--seed", "42"};
  std::ostringstream out1, err1, out2, err2;
  int c1 = cli::run(args, out1, err1);
  int c2 = cli::run(args, out2, err2);
  bool ok = c1 == 0 && c2 == 0 && out1.str() == out2.str() && !out1.str().empty();
  CHECK(announce(12, "verify all --seed 42 twice: identical JSON bytes", ok));
  CHECK(c1 == 0);
  CHECK(out1.str() == out2.str());
}
