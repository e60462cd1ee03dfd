#include <doctest.h>

#include <unordered_set>

#include "ptk/eval.hpp"
#include "ptk/saturation.hpp"
#include "ptk/verifier.hpp"

using namespace ptk;

namespace {

const VarId v0{0}, v1{1};

Formula s_true() { return Formula::eq(Term::zero(), Term::zero()); }
Formula s_false() { return Formula::neg(s_true()); }

// Family closed under direct subformulas.
std::vector<Formula> close_family(std::vector<Formula> seeds) {
  std::vector<Formula> out;
  std::unordered_set<Formula, FormulaHash> seen;
  std::vector<Formula> work = std::move(seeds);
  while (!work.empty()) {
    Formula f = work.back();
    work.pop_back();
    if (!seen.insert(f).second) continue;
    out.push_back(f);
    switch (f.kind()) {
      case Formula::Kind::Not:
        work.push_back(f.sub());
        break;
      case Formula::Kind::Or:
      case Formula::Kind::And:
        work.push_back(f.left());
        work.push_back(f.right());
        break;
      case Formula::Kind::Exists:
      case Formula::Kind::Forall:
        work.push_back(f.body());
        break;
      default:
        break;
    }
  }
  return out;
}

std::vector<Formula> qf_true_seeds(const std::vector<Formula>& family) {
  std::vector<Formula> out;
  for (const auto& f : family)
    if (is_sentence(f) && is_quantifier_free(f) && tr0(f)) out.push_back(f);
  return out;
}

}  // namespace

TEST_CASE("similarity_classes") {
  auto one = similarity_classes({s_true(), Formula::eq(numeral(1), numeral(2))});
  CHECK(one.size() == 1);
  CHECK(one[0].members.size() == 2);

  auto two = similarity_classes({s_true(), s_false()});
  CHECK(two.size() == 2);

  auto single = similarity_classes({Formula::exists(v0, Formula::eq(Term::var(v0), numeral(3)))});
  CHECK(single.size() == 1);
}

TEST_CASE("class_order") {
  Formula p = s_true();
  auto classes = similarity_classes({p, Formula::neg(p)});
  ClassOrder order = class_order(classes);
  REQUIRE(classes.size() == 2);
  std::size_t ip = classes[0].skeleton.kind() == Formula::Kind::Eq ? 0 : 1;
  std::size_t in = 1 - ip;
  CHECK(order.leq(ip, in));
  CHECK_FALSE(order.leq(in, ip));
  CHECK(order.is_minimal(ip));
  CHECK_FALSE(order.is_minimal(in));

  // Unrelated atomic classes are incomparable; predecessors of one formula
  // do not leak to the other.
  Formula q = Formula::exists(v0, Formula::eq(Term::var(v0), Term::zero()));
  auto classes2 = similarity_classes({p, q});
  ClassOrder order2 = class_order(classes2);
  CHECK(order2.is_minimal(0));
  CHECK(order2.is_minimal(1));
  CHECK_FALSE(order2.leq(0, 1));
  CHECK_FALSE(order2.leq(1, 0));

  // A chain of negations is linearly ordered.
  Formula np = Formula::neg(p), nnp = Formula::neg(Formula::neg(p));
  auto classes3 = similarity_classes({p, np, nnp});
  ClassOrder order3 = class_order(classes3);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      CHECK((order3.leq(a, b) || order3.leq(b, a)));
}

TEST_CASE("assignments_over enumerates the full cube") {
  Domain d = Domain::range(0, 2);
  Formula f = Formula::eq(Term::var(v0), Term::var(v1));
  auto asn = assignments_over(f, d);
  CHECK(asn.size() == 9);
  Formula sentence = s_true();
  auto empty = assignments_over(sentence, d);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].empty());
}

TEST_CASE("build_s0 bullets") {
  Domain d = Domain::range(0, 4);

  // Equation bullet.
  Formula refl = Formula::eq(Term::var(v0), Term::var(v0));
  PartialSatPredicate s0 = build_s0({refl}, {}, {}, d);
  CHECK(s0.contains(refl, {{v0, 3}}));

  // Seed bullet via extensional equivalence; also reachable as an equation.
  Formula one_eq = Formula::eq(numeral(1), numeral(1));
  PartialSatPredicate s1 = build_s0({one_eq}, {s_true()}, {}, d);
  CHECK(s1.contains(one_eq, {}));

  // Genuine seed transfer: a non-equation seed lights up the whole
  // equivalence class at matching parameter values.
  Formula seed = Formula::neg(Formula::eq(Term::zero(), Term::succ(Term::zero())));
  Formula member = Formula::neg(Formula::eq(Term::var(v0), Term::succ(Term::var(v1))));
  PartialSatPredicate s2 = build_s0({member}, {seed}, {}, d);
  CHECK(s2.contains(member, {{v0, 0}, {v1, 0}}));
  CHECK_FALSE(s2.contains(member, {{v0, 1}, {v1, 0}}));

  // Previous-round pairs carry over through equivalence.
  PartialSatPredicate prev({member}, d);
  prev.insert(member, {{v0, 2}, {v1, 1}});
  Formula similar_member = Formula::neg(Formula::eq(Term::var(v1), Term::succ(Term::var(v0))));
  PartialSatPredicate s3 = build_s0({similar_member}, {}, prev, d);
  CHECK(s3.contains(similar_member, {{v1, 2}, {v0, 1}}));

  // A quantified formula in a minimal class with no seed stays empty.
  Formula lone = Formula::exists(v0, Formula::eq(Term::var(v0), Term::var(v0)));
  PartialSatPredicate s4 = build_s0({lone}, {}, {}, d);
  CHECK(s4.size() == 0);
}

TEST_CASE("saturate: two-formula hand simulation") {
  Domain d = Domain::range(0, 1);
  std::vector<Formula> family{s_true(), s_false()};
  PartialSatPredicate S = saturate(family, qf_true_seeds(family), {}, d);
  CHECK(S.contains(s_true(), {}));
  CHECK_FALSE(S.contains(s_false(), {}));
  CHECK(check_comp(S, family[0]).pass());
  CHECK(check_comp(S, family[1]).pass());
}

TEST_CASE("saturate: existential enters at stage one") {
  Domain d = Domain::range(0, 0);
  Formula body = Formula::eq(Term::var(v0), Term::var(v0));
  Formula ex = Formula::exists(v0, body);
  std::vector<std::size_t> stages;
  PartialSatPredicate S = saturate({body, ex}, {}, {}, d, &stages);
  CHECK(S.contains(body, {{v0, 0}}));
  CHECK(S.contains(ex, {}));
  REQUIRE(stages.size() >= 2);
  CHECK(stages.front() == 1);  // only the equation pair in S^0
  CHECK(stages.back() == 2);
}

TEST_CASE("saturate: empty family") {
  PartialSatPredicate S = saturate({}, {}, {}, Domain::range(0, 3));
  CHECK(S.size() == 0);
}

TEST_CASE("saturate: stages grow monotonically") {
  Rng rng(6);
  std::vector<Formula> seeds;
  for (int i = 0; i < 12; ++i) seeds.push_back(gen_qf_sentence(rng, 3));
  auto family = close_family(seeds);
  std::vector<std::size_t> stages;
  PartialSatPredicate S = saturate(family, qf_true_seeds(family), {}, Domain::range(0, 3),
                                   &stages);
  for (std::size_t i = 1; i < stages.size(); ++i) CHECK(stages[i] >= stages[i - 1]);
  CHECK(stages.back() == S.size());
}

TEST_CASE("saturate reproduces tr0 on closed quantifier-free families") {
  Rng rng(14);
  for (int round = 0; round < 10; ++round) {
    std::vector<Formula> seeds;
    for (int i = 0; i < 10; ++i) seeds.push_back(gen_qf_sentence(rng, 3));
    auto family = close_family(seeds);
    PartialSatPredicate S = saturate(family, qf_true_seeds(family), {}, Domain::range(0, 2));
    for (const auto& phi : family) {
      CHECK(S.contains(phi, {}) == tr0(phi));
    }
    for (const auto& phi : family) CHECK(check_comp(S, phi).pass());
    CHECK(check_extensionality(S).pass());
    CHECK(check_agreement(S, qf_true_seeds(family)).pass());
  }
}

TEST_CASE("checkers flag corruption") {
  Domain d = Domain::range(0, 2);
  Formula refl = Formula::eq(Term::var(v0), Term::var(v0));
  Formula nrefl = Formula::neg(refl);
  std::vector<Formula> family{refl, nrefl};
  PartialSatPredicate S = saturate(family, {}, {}, d);
  CHECK(check_comp(S, refl).pass());
  CHECK(check_comp(S, nrefl).pass());
  CHECK(check_extensionality(S).pass());

  // Drop one pair and the clause at exactly that pair must fail.
  PartialSatPredicate corrupted(family, d);
  Assignment victim{{v0, 1}};
  for (const auto& p : S.pairs())
    if (!(p == SatPair{refl, victim})) corrupted.insert(p.formula, p.assignment);
  Report comp = check_comp(corrupted, refl);
  CHECK_FALSE(comp.pass());
  REQUIRE(comp.failures.size() == 1);
  CHECK(comp.failures[0].input.find("v0->1") != std::string::npos);
  // The negation clause over the corrupted subformula class also breaks.
  CHECK_FALSE(check_comp(corrupted, nrefl).pass());

  // Agreement failure on a seed that never made it in.
  CHECK_FALSE(check_agreement(S, {s_false()}).pass());

  // Extensionality failure: a pair present while its equivalent twin with
  // equal values is absent.
  Formula twin = Formula::eq(Term::var(v1), Term::var(v1));
  PartialSatPredicate uneven({refl, twin}, d);
  uneven.insert(refl, {{v0, 0}});
  Report ext = check_extensionality(uneven);
  CHECK_FALSE(ext.pass());
}

TEST_CASE("family missing a subformula shows up in comp") {
  // ~(0=0) without (0=0) in the family: the class is minimal, nothing is
  // seeded, and the negation clause disagrees.
  std::vector<Formula> family{s_false()};
  PartialSatPredicate S = saturate(family, qf_true_seeds(family), {}, Domain::range(0, 1));
  Report comp = check_comp(S, s_false());
  CHECK_FALSE(comp.pass());
}
