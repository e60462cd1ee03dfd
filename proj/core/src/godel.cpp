#include "ptk/godel.hpp"

namespace ptk {

namespace {

// Constructor tags. Term and formula tag spaces are independent since the
// sort is recovered from code parity first.
constexpr unsigned kTermVar = 0;
constexpr unsigned kTermZero = 1;
constexpr unsigned kTermSucc = 2;
constexpr unsigned kTermAdd = 3;
constexpr unsigned kTermMul = 4;
constexpr unsigned kFormEq = 0;
constexpr unsigned kFormNot = 1;
constexpr unsigned kFormOr = 2;
constexpr unsigned kFormAnd = 3;
constexpr unsigned kFormExists = 4;
constexpr unsigned kFormForall = 5;

}  // namespace

Nat cantor_pair(const Nat& a, const Nat& b) {
  Nat s = a + b;
  return s * (s + 1) / 2 + b;
}

std::pair<Nat, Nat> cantor_unpair(const Nat& z) {
  Nat disc = 8 * z + 1;
  Nat root = boost::multiprecision::sqrt(disc);
  Nat w = (root - 1) / 2;
  Nat b = z - w * (w + 1) / 2;
  Nat a = w - b;
  return {a, b};
}

Nat term_code(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return cantor_pair(kTermVar, t.var_id().index);
    case Term::Kind::Zero:
      return cantor_pair(kTermZero, 0);
    case Term::Kind::Succ:
      return cantor_pair(kTermSucc, term_code(t.child()));
    case Term::Kind::Add:
      return cantor_pair(kTermAdd, cantor_pair(term_code(t.left()), term_code(t.right())));
    case Term::Kind::Mul:
      return cantor_pair(kTermMul, cantor_pair(term_code(t.left()), term_code(t.right())));
  }
  return 0;
}

Nat formula_code(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return cantor_pair(kFormEq,
                         cantor_pair(term_code(f.term_left()), term_code(f.term_right())));
    case Formula::Kind::Not:
      return cantor_pair(kFormNot, formula_code(f.sub()));
    case Formula::Kind::Or:
      return cantor_pair(kFormOr, cantor_pair(formula_code(f.left()), formula_code(f.right())));
    case Formula::Kind::And:
      return cantor_pair(kFormAnd, cantor_pair(formula_code(f.left()), formula_code(f.right())));
    case Formula::Kind::Exists:
      return cantor_pair(kFormExists,
                         cantor_pair(f.quant_var().index, formula_code(f.body())));
    case Formula::Kind::Forall:
      return cantor_pair(kFormForall,
                         cantor_pair(f.quant_var().index, formula_code(f.body())));
  }
  return 0;
}

GodelCode godel_encode(const Term& t) { return GodelCode{term_code(t) * 2}; }

GodelCode godel_encode(const Formula& f) { return GodelCode{formula_code(f) * 2 + 1}; }

namespace {

std::optional<Term> decode_term(const Nat& code) {
  auto [tag, payload] = cantor_unpair(code);
  if (tag == kTermVar) return Term::var(VarId(payload));
  if (tag == kTermZero) {
    if (payload != 0) return std::nullopt;
    return Term::zero();
  }
  if (tag == kTermSucc) {
    auto sub = decode_term(payload);
    if (!sub) return std::nullopt;
    return Term::succ(*sub);
  }
  if (tag == kTermAdd || tag == kTermMul) {
    auto [l, r] = cantor_unpair(payload);
    auto lt = decode_term(l);
    auto rt = decode_term(r);
    if (!lt || !rt) return std::nullopt;
    return tag == kTermAdd ? Term::add(*lt, *rt) : Term::mul(*lt, *rt);
  }
  return std::nullopt;
}

std::optional<Formula> decode_formula(const Nat& code) {
  // Tags are compared as Nat; anything outside the tag range is a non-code.
  auto [tag, payload] = cantor_unpair(code);
  if (tag == kFormEq) {
    auto [l, r] = cantor_unpair(payload);
    auto lt = decode_term(l);
    auto rt = decode_term(r);
    if (!lt || !rt) return std::nullopt;
    return Formula::eq(*lt, *rt);
  }
  if (tag == kFormNot) {
    auto sub = decode_formula(payload);
    if (!sub) return std::nullopt;
    return Formula::neg(*sub);
  }
  if (tag == kFormOr || tag == kFormAnd) {
    auto [l, r] = cantor_unpair(payload);
    auto lf = decode_formula(l);
    auto rf = decode_formula(r);
    if (!lf || !rf) return std::nullopt;
    return tag == kFormOr ? Formula::disj(*lf, *rf) : Formula::conj(*lf, *rf);
  }
  if (tag == kFormExists || tag == kFormForall) {
    auto [v, body] = cantor_unpair(payload);
    auto bf = decode_formula(body);
    if (!bf) return std::nullopt;
    return tag == kFormExists ? Formula::exists(VarId(v), *bf) : Formula::forall(VarId(v), *bf);
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::variant<Formula, Term>> godel_decode(const GodelCode& c) {
  if (c.value % 2 == 0) {
    auto t = decode_term(c.value / 2);
    if (!t) return std::nullopt;
    return std::variant<Formula, Term>(std::in_place_index<1>, *t);
  }
  auto f = decode_formula((c.value - 1) / 2);
  if (!f) return std::nullopt;
  return std::variant<Formula, Term>(std::in_place_index<0>, *f);
}

}  // namespace ptk
