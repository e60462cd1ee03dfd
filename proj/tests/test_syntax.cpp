#include <doctest.h>

#include "ptk/eval.hpp"
#include "ptk/syntax.hpp"
#include "ptk/verifier.hpp"

using namespace ptk;

namespace {

const VarId v0{0}, v1{1}, v2{2}, v3{3};

Term tvar(const VarId& v) { return Term::var(v); }

}  // namespace

TEST_CASE("parse: grammar examples") {
  Formula f = parse_formula("(S(0) + 0 = S(0))");
  Formula expect =
      Formula::eq(Term::add(Term::succ(Term::zero()), Term::zero()), Term::succ(Term::zero()));
  CHECK(f == expect);

  Formula g = parse_formula("E v0 (v0 = S(0))");
  CHECK(g == Formula::exists(v0, Formula::eq(tvar(v0), Term::succ(Term::zero()))));

  CHECK_THROWS_AS(parse_formula("(v0 ="), ParseError);
  CHECK_THROWS_AS(parse_term("S(S(0)"), ParseError);
  CHECK_THROWS_AS(parse("  "), ParseError);

  // Parse errors carry a byte offset.
  try {
    parse_formula("(0 = 0) trailing");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.offset >= 7);
  }
}

TEST_CASE("parse: whitespace insensitivity and either-entry") {
  CHECK(parse_formula("( 0 =   0 )") == parse_formula("(0=0)"));
  auto either = parse("(0 + S(0))");
  CHECK(std::holds_alternative<Term>(either));
  CHECK(val(std::get<Term>(either)) == 1);
  auto sentence = parse("~(0 = 0)");
  CHECK(std::holds_alternative<Formula>(sentence));
}

TEST_CASE("print/parse round trip on a random corpus") {
  Rng rng(1234);
  for (int i = 0; i < 1000; ++i) {
    Formula f = gen_formula(rng, 4, 3);
    CHECK(parse_formula(print(f)) == f);
  }
  for (int i = 0; i < 300; ++i) {
    Term t = gen_closed_term(rng, 4);
    CHECK(parse_term(print(t)) == t);
  }
}

TEST_CASE("free_vars") {
  CHECK(free_vars(Formula::eq(tvar(v0), tvar(v0))) == std::set<VarId>{v0});
  CHECK(free_vars(Formula::exists(v0, Formula::eq(tvar(v0), tvar(v1)))) == std::set<VarId>{v1});
  CHECK(free_vars(Formula::eq(numeral(5), numeral(5))).empty());
  CHECK(is_sentence(Formula::forall(v0, Formula::eq(tvar(v0), Term::zero()))));
}

TEST_CASE("numeral") {
  CHECK(numeral(0) == Term::zero());
  CHECK(numeral(3) == Term::succ(Term::succ(Term::succ(Term::zero()))));
  Term big = numeral(10000);
  CHECK(val(big) == 10000);
}

TEST_CASE("subst_closed") {
  Formula f = Formula::eq(tvar(v0), Term::zero());
  CHECK(subst_closed(f, v0, numeral(2)) == Formula::eq(numeral(2), Term::zero()));

  Formula g = Formula::exists(v0, Formula::eq(tvar(v0), tvar(v1)));
  CHECK(subst_closed(g, v1, numeral(1)) ==
        Formula::exists(v0, Formula::eq(tvar(v0), numeral(1))));

  // Binder shields its own variable.
  CHECK(subst_closed(g, v0, numeral(1)) == g);

  CHECK_THROWS_AS(subst_closed(f, v0, tvar(v2)), std::invalid_argument);
}

TEST_CASE("apply_assignment") {
  Formula f = Formula::eq(tvar(v0), numeral(2));
  CHECK(apply_assignment(f, {{v0, 2}}) == Formula::eq(numeral(2), numeral(2)));

  Formula sentence = Formula::eq(Term::zero(), Term::zero());
  CHECK(apply_assignment(sentence, {}) == sentence);

  Formula two_free = Formula::eq(tvar(v0), tvar(v1));
  CHECK_THROWS_AS(apply_assignment(two_free, {{v0, 0}}), std::invalid_argument);
  CHECK(is_sentence(apply_assignment(two_free, {{v0, 3}, {v1, 4}})));
}

TEST_CASE("trivialise: worked example") {
  // E x A y ( x + (z*S0 + 0*u) = x*y + 0 ) with x=v0, y=v3, z=v1, u=v2.
  Term inner = Term::add(Term::mul(tvar(v1), Term::succ(Term::zero())),
                         Term::mul(Term::zero(), tvar(v2)));
  Formula phi = Formula::exists(
      v0, Formula::forall(v3, Formula::eq(Term::add(tvar(v0), inner),
                                          Term::add(Term::mul(tvar(v0), tvar(v3)),
                                                    Term::zero()))));
  Template t = trivialise(phi);
  Formula expect_skeleton = Formula::exists(
      v0, Formula::forall(v3, Formula::eq(Term::add(tvar(v0), tvar(v1)),
                                          Term::add(Term::mul(tvar(v0), tvar(v3)),
                                                    tvar(v2)))));
  CHECK(t.skeleton() == expect_skeleton);
  REQUIRE(t.params().size() == 2);
  CHECK(t.params()[0] == inner);
  CHECK(t.params()[1] == Term::zero());
  CHECK(t.reconstruct() == phi);
}

TEST_CASE("trivialise: forced extractions") {
  // A repeated free variable is split into two parameters.
  Template t1 = trivialise(Formula::eq(tvar(v0), tvar(v0)));
  CHECK(t1.skeleton() == Formula::eq(tvar(v0), tvar(v1)));
  REQUIRE(t1.params().size() == 2);
  CHECK(t1.params()[0] == tvar(v0));
  CHECK(t1.params()[1] == tvar(v0));

  // Closed terms never survive in the skeleton.
  Template t2 = trivialise(Formula::eq(numeral(1), numeral(1)));
  CHECK(t2.skeleton() == Formula::eq(tvar(v0), tvar(v1)));
  CHECK(t2.params()[0] == numeral(1));
  CHECK(t2.params()[1] == numeral(1));
}

TEST_CASE("trivialise: skeleton invariants on random formulas") {
  Rng rng(77);
  for (int i = 0; i < 2000; ++i) {
    Formula f = gen_formula(rng, 4, 3);
    Template t = trivialise(f);
    CHECK(t.reconstruct() == f);

    // Idempotence: the skeleton is its own skeleton, parameters are the
    // parameter variables themselves.
    Template t2 = trivialise(t.skeleton());
    CHECK(t2.skeleton() == t.skeleton());
    REQUIRE(t2.params().size() == t.params().size());
    for (std::size_t k = 0; k < t2.params().size(); ++k) {
      CHECK(t2.params()[k].kind() == Term::Kind::Var);
      CHECK(t2.params()[k] == Term::var(t.param_vars()[k]));
    }

    // Parameter variables are pairwise distinct and avoid bound variables.
    auto bound = bound_vars(t.skeleton());
    std::set<VarId> seen;
    for (const auto& pv : t.param_vars()) {
      CHECK(seen.insert(pv).second);
      CHECK(bound.count(pv) == 0);
    }
  }
}

TEST_CASE("similar") {
  CHECK(similar(Formula::eq(numeral(1), numeral(1)), Formula::eq(numeral(7), numeral(0))));
  Rng rng(5);
  Formula f = gen_formula(rng, 3, 2);
  CHECK(similar(f, f));
  CHECK_FALSE(similar(Formula::eq(Term::zero(), Term::zero()),
                      Formula::exists(v0, Formula::eq(tvar(v0), Term::zero()))));
}

TEST_CASE("similar and ext_equiv are equivalence relations") {
  Rng rng(99);
  std::vector<Formula> pool;
  std::vector<Assignment> asn;
  for (int i = 0; i < 30; ++i) {
    Formula f = gen_formula(rng, 3, 2);
    Assignment a;
    for (const auto& v : free_vars(f)) a[v] = rng.below(5);
    pool.push_back(f);
    asn.push_back(a);
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    CHECK(similar(pool[i], pool[i]));
    CHECK(ext_equiv(pool[i], asn[i], pool[i], asn[i]));
    for (std::size_t j = 0; j < pool.size(); ++j) {
      CHECK(similar(pool[i], pool[j]) == similar(pool[j], pool[i]));
      CHECK(ext_equiv(pool[i], asn[i], pool[j], asn[j]) ==
            ext_equiv(pool[j], asn[j], pool[i], asn[i]));
      for (std::size_t k = 0; k < pool.size(); ++k) {
        if (similar(pool[i], pool[j]) && similar(pool[j], pool[k]))
          CHECK(similar(pool[i], pool[k]));
        if (ext_equiv(pool[i], asn[i], pool[j], asn[j]) &&
            ext_equiv(pool[j], asn[j], pool[k], asn[k]))
          CHECK(ext_equiv(pool[i], asn[i], pool[k], asn[k]));
      }
    }
  }
}

TEST_CASE("ext_equiv examples") {
  Formula f1 = Formula::eq(numeral(2), numeral(2));
  Formula f2 = Formula::eq(Term::add(numeral(1), numeral(1)),
                           Term::mul(numeral(2), Term::succ(Term::zero())));
  CHECK(ext_equiv(f1, {}, f2, {}));
  CHECK_FALSE(ext_equiv(f1, {}, Formula::neg(f1), {}));
  CHECK_THROWS_AS(ext_equiv(Formula::eq(tvar(v0), tvar(v0)), {}, f1, {}),
                  std::invalid_argument);

  // Equal values under different assignments.
  Formula open1 = Formula::eq(tvar(v0), numeral(3));
  Formula open2 = Formula::eq(tvar(v1), Term::succ(numeral(2)));
  CHECK(ext_equiv(open1, {{v0, 5}}, open2, {{v1, 5}}));
  CHECK_FALSE(ext_equiv(open1, {{v0, 5}}, open2, {{v1, 4}}));
}
