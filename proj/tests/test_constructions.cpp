#include <doctest.h>

#include "ptk/constructions.hpp"
#include "ptk/eval.hpp"
#include "ptk/godel.hpp"
#include "ptk/prop.hpp"
#include "ptk/verifier.hpp"

using namespace ptk;

namespace {

SentenceSeq atoms_a(std::size_t n) {
  SentenceSeq out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Formula::eq(numeral(i), numeral(i)));
  return out;
}

SentenceSeq atoms_b(std::size_t n) {
  SentenceSeq out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(Formula::eq(numeral(i), Term::succ(numeral(i))));
  return out;
}

}  // namespace

TEST_CASE("big_or_left / big_and_left") {
  SentenceSeq a = atoms_a(3);
  CHECK(big_or_left({a[0]}) == a[0]);
  CHECK(big_or_left(a) == Formula::disj(Formula::disj(a[0], a[1]), a[2]));
  CHECK(big_and_left(a) == Formula::conj(Formula::conj(a[0], a[1]), a[2]));
  CHECK_THROWS_AS(big_or_left({}), std::invalid_argument);
  CHECK_THROWS_AS(big_and_left({}), std::invalid_argument);

  // Left spine of depth n-1.
  SentenceSeq big = atoms_a(1000);
  Formula spine = big_or_left(big);
  std::size_t depth = 0;
  Formula cur = spine;
  while (cur.kind() == Formula::Kind::Or) {
    ++depth;
    cur = cur.left();
  }
  CHECK(depth == 999);
  CHECK(cur == big[0]);
}

TEST_CASE("stopping_disjunction shapes") {
  SentenceSeq a1 = atoms_a(1), b1 = atoms_b(1);
  CHECK(stopping_disjunction(a1, b1, 0) == Formula::conj(a1[0], b1[0]));

  SentenceSeq a2 = atoms_a(2), b2 = atoms_b(2);
  CHECK(stopping_disjunction(a2, b2, 0) ==
        Formula::disj(Formula::conj(a2[0], b2[0]),
                      Formula::conj(Formula::neg(a2[0]), Formula::conj(a2[1], b2[1]))));

  SentenceSeq a3 = atoms_a(3), b3 = atoms_b(3);
  CHECK(stopping_disjunction(a3, b3, 1) ==
        Formula::disj(Formula::conj(a3[1], b3[1]),
                      Formula::conj(Formula::neg(a3[1]), Formula::conj(a3[2], b3[2]))));

  CHECK_THROWS_AS(stopping_disjunction(a2, b3, 0), std::invalid_argument);
  CHECK_THROWS_AS(stopping_disjunction(a2, b2, 2), std::invalid_argument);
}

TEST_CASE("stopping_disjunction unfolds by one step") {
  for (std::size_t c : {1u, 3u, 7u, 12u}) {
    SentenceSeq a = atoms_a(c + 1), b = atoms_b(c + 1);
    for (std::size_t j = 0; j < c; ++j) {
      CHECK(stopping_disjunction(a, b, j) ==
            Formula::disj(Formula::conj(a[j], b[j]),
                          Formula::conj(Formula::neg(a[j]), stopping_disjunction(a, b, j + 1))));
    }
  }
}

TEST_CASE("unique") {
  SentenceSeq a1 = atoms_a(1);
  CHECK(unique(a1) == Formula::conj(a1[0], true_sentence()));

  SentenceSeq a2 = atoms_a(2);
  CHECK(unique(a2) == Formula::disj(Formula::conj(a2[0], Formula::neg(a2[1])),
                                    Formula::conj(a2[1], Formula::neg(a2[0]))));

  // A valuation with two alphas true falsifies Unique.
  SentenceSeq a4 = atoms_a(4);
  Skeleton sk = skeleton(unique(a4));
  Valuation v;
  for (std::size_t i = 0; i < 4; ++i) v[*sk.table->lookup(a4[i])] = i < 2;
  CHECK_FALSE(eval_valuation(sk.formula, v));
  // Exactly one true satisfies it.
  for (std::size_t i = 0; i < 4; ++i) v[*sk.table->lookup(a4[i])] = i == 2;
  CHECK(eval_valuation(sk.formula, v));
}

TEST_CASE("acdc_lhs") {
  SentenceSeq p1 = atoms_b(1);
  CHECK(acdc_lhs(Term::zero(), p1) ==
        Formula::conj(Formula::eq(Term::zero(), Term::zero()), p1[0]));

  Term t = Term::succ(Term::zero());
  SentenceSeq p3 = atoms_b(3);
  Formula expect = Formula::disj(
      Formula::disj(Formula::conj(Formula::eq(t, numeral(0)), p3[0]),
                    Formula::conj(Formula::eq(t, numeral(1)), p3[1])),
      Formula::conj(Formula::eq(t, numeral(2)), p3[2]));
  CHECK(acdc_lhs(t, p3) == expect);

  CHECK_THROWS_AS(acdc_lhs(Term::var(VarId{0}), p3), std::invalid_argument);
}

TEST_CASE("acdc_lhs semantics against brute force") {
  Rng rng(67);
  for (int n = 0; n < 150; ++n) {
    std::size_t c = rng.below(6);
    Nat tv = rng.below(c + 3);
    Term t = gen_term_with_value(rng, tv, 2);
    SentenceSeq phis;
    for (std::size_t i = 0; i <= c; ++i) phis.push_back(gen_qf_sentence(rng, 2));
    bool expected = false;
    for (std::size_t a = 0; a <= c; ++a) expected = expected || (tv == a && tr0(phis[a]));
    CHECK(tr0(acdc_lhs(t, phis)) == expected);
  }
}

TEST_CASE("corollary_formula is a tautology at small sizes") {
  for (std::size_t c : {0u, 1u, 5u}) {
    SentenceSeq a = atoms_a(c + 1), b = atoms_b(c + 1);
    CHECK(is_tautology_truth_table(skeleton(corollary_formula(a, b)).formula));
  }
}

TEST_CASE("theta_c") {
  // Below 21 nothing decodes to a sentence, so every disjunct is guarded by
  // the false sentence and Theta is quantifier-free.
  Theta th = theta_c(20);
  CHECK(free_vars(th.formula) == std::set<VarId>{th.var});
  for (unsigned i = 0; i <= 20; ++i)
    CHECK_FALSE(tr0(subst_closed(th.formula, th.var, numeral(i))));

  // Code 29 is (0 = 0); Theta at 29 must agree with it. Code 21 is a
  // quantified sentence, so evaluation must dodge it lazily.
  Theta th2 = theta_c(40);
  QfEvaluator ev;
  CHECK(ev.truth(th2.formula, {{th2.var, 29}}));
  CHECK_FALSE(ev.truth(th2.formula, {{th2.var, 30}}));
  CHECK_FALSE(ev.truth(th2.formula, {{th2.var, 5}}));
}

TEST_CASE("le_formula and lt_formula") {
  // 2 <= 5 with witness 3.
  CHECK(std_truth(le_formula(numeral(2), 5), 5) == Truth3::True);
  // 5 <= 2 has no witness at all; the bounded evaluator cannot certify, and
  // the exhaustive scan up to the bound refutes every candidate.
  CHECK(std_truth(le_formula(numeral(5), 2), 50) == Truth3::Unknown);
  for (Nat z = 0; z <= 2; ++z) CHECK(z + 5 != 2);
  // x <= x with witness 0.
  CHECK(std_truth(le_formula(numeral(4), 4), 0) == Truth3::True);

  CHECK(std_truth(lt_formula(numeral(2), numeral(6)), 6) == Truth3::True);
  CHECK(std_truth(lt_formula(numeral(6), numeral(6)), 20) == Truth3::Unknown);

  // The bound variable is fresh for the argument term.
  Formula le = le_formula(Term::var(VarId{0}), 3);
  CHECK(free_vars(le) == std::set<VarId>{VarId{0}});
  CHECK(bound_vars(le) == std::set<VarId>{VarId{1}});
}

TEST_CASE("permute_seq") {
  SentenceSeq fs = atoms_a(4);
  CHECK(permute_seq(fs, Permutation::identity(4)) == fs);
  SentenceSeq swapped = permute_seq(fs, Permutation::swap_first(4, 2));
  CHECK(swapped[0] == fs[2]);
  CHECK(swapped[2] == fs[0]);
  CHECK_THROWS_AS(permute_seq(fs, Permutation::identity(3)), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);

  // Reordering a big disjunction is a propositional equivalence.
  Formula equiv = Formula::iff(big_or_left(fs), big_or_left(swapped));
  CHECK(is_tautology(skeleton(equiv).formula));
}
