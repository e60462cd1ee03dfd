#include "ptk/eval.hpp"
#include "ptk/syntax.hpp"

namespace ptk {

Template::Template(Formula skeleton, std::vector<VarId> param_vars, std::vector<Term> params)
    : skeleton_(std::move(skeleton)),
      param_vars_(std::move(param_vars)),
      params_(std::move(params)) {
  if (param_vars_.size() != params_.size())
    throw std::invalid_argument("Template: parameter arity mismatch");
}

namespace {

using TermByVar = std::map<VarId, const Term*>;

Term subst_parallel(const Term& s, const TermByVar& map) {
  if (!s.has_var()) return s;
  switch (s.kind()) {
    case Term::Kind::Var: {
      auto it = map.find(s.var_id());
      return it == map.end() ? s : *it->second;
    }
    case Term::Kind::Zero:
      return s;
    case Term::Kind::Succ:
      return Term::succ(subst_parallel(s.child(), map));
    case Term::Kind::Add:
      return Term::add(subst_parallel(s.left(), map), subst_parallel(s.right(), map));
    case Term::Kind::Mul:
      return Term::mul(subst_parallel(s.left(), map), subst_parallel(s.right(), map));
  }
  return s;
}

Formula subst_parallel(const Formula& f, const TermByVar& map) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return Formula::eq(subst_parallel(f.term_left(), map),
                         subst_parallel(f.term_right(), map));
    case Formula::Kind::Not:
      return Formula::neg(subst_parallel(f.sub(), map));
    case Formula::Kind::Or:
      return Formula::disj(subst_parallel(f.left(), map), subst_parallel(f.right(), map));
    case Formula::Kind::And:
      return Formula::conj(subst_parallel(f.left(), map), subst_parallel(f.right(), map));
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      TermByVar inner = map;
      inner.erase(f.quant_var());
      Formula body = subst_parallel(f.body(), inner);
      return f.kind() == Formula::Kind::Exists ? Formula::exists(f.quant_var(), std::move(body))
                                               : Formula::forall(f.quant_var(), std::move(body));
    }
  }
  return f;
}

}  // namespace

Formula Template::instantiate(const std::vector<Term>& terms) const {
  if (terms.size() != param_vars_.size())
    throw std::invalid_argument("Template::instantiate: wrong number of terms");
  // Simultaneous substitution: a substituted term may mention variables that
  // double as later parameter variables, so feeding them in one at a time
  // would rewrite the terms already planted. Every parameter variable occurs
  // exactly once, at a position whose enclosing binders bind none of the
  // planted term's variables, so the parallel pass cannot capture.
  TermByVar map;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!map.emplace(param_vars_[i], &terms[i]).second)
      throw std::invalid_argument("Template::instantiate: duplicate parameter variable");
  }
  return subst_parallel(skeleton_, map);
}

namespace {

// Walks the formula left to right replacing every maximal subterm that
// mentions no in-scope bound variable by the next canonical fresh variable.
class Trivialiser {
 public:
  explicit Trivialiser(const Formula& f) {
    for (const auto& v : bound_vars(f)) taken_.insert(v.index);
  }

  // Left-to-right traversal order decides parameter numbering, so the
  // two-child cases sequence their recursions explicitly.
  Formula walk(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::Eq: {
        Term l = walk_term(f.term_left());
        Term r = walk_term(f.term_right());
        return Formula::eq(std::move(l), std::move(r));
      }
      case Formula::Kind::Not:
        return Formula::neg(walk(f.sub()));
      case Formula::Kind::Or: {
        Formula l = walk(f.left());
        Formula r = walk(f.right());
        return Formula::disj(std::move(l), std::move(r));
      }
      case Formula::Kind::And: {
        Formula l = walk(f.left());
        Formula r = walk(f.right());
        return Formula::conj(std::move(l), std::move(r));
      }
      case Formula::Kind::Exists:
      case Formula::Kind::Forall: {
        const VarId& v = f.quant_var();
        ++in_scope_[v];
        Formula body = walk(f.body());
        if (--in_scope_[v] == 0) in_scope_.erase(v);
        return f.kind() == Formula::Kind::Exists ? Formula::exists(v, std::move(body))
                                                 : Formula::forall(v, std::move(body));
      }
    }
    return f;
  }

  std::vector<VarId>&& param_vars() { return std::move(param_vars_); }
  std::vector<Term>&& params() { return std::move(params_); }

 private:
  bool mentions_in_scope(const Term& t) const {
    if (!t.has_var() || in_scope_.empty()) return false;
    switch (t.kind()) {
      case Term::Kind::Var:
        return in_scope_.count(t.var_id()) != 0;
      case Term::Kind::Zero:
        return false;
      case Term::Kind::Succ:
        return mentions_in_scope(t.child());
      case Term::Kind::Add:
      case Term::Kind::Mul:
        return mentions_in_scope(t.left()) || mentions_in_scope(t.right());
    }
    return false;
  }

  Term walk_term(const Term& t) {
    if (!mentions_in_scope(t)) {
      VarId fresh = next_fresh();
      param_vars_.push_back(fresh);
      params_.push_back(t);
      return Term::var(fresh);
    }
    switch (t.kind()) {
      case Term::Kind::Succ:
        return Term::succ(walk_term(t.child()));
      case Term::Kind::Add: {
        Term l = walk_term(t.left());
        Term r = walk_term(t.right());
        return Term::add(std::move(l), std::move(r));
      }
      case Term::Kind::Mul: {
        Term l = walk_term(t.left());
        Term r = walk_term(t.right());
        return Term::mul(std::move(l), std::move(r));
      }
      default:
        return t;  // a bound variable occurrence
    }
  }

  VarId next_fresh() {
    while (taken_.count(next_index_)) ++next_index_;
    VarId v{next_index_};
    ++next_index_;
    return v;
  }

  std::map<VarId, int> in_scope_;
  std::set<Nat> taken_;  // indices of bound variables; never reused for params
  Nat next_index_ = 0;
  std::vector<VarId> param_vars_;
  std::vector<Term> params_;
};

}  // namespace

Template trivialise(const Formula& f) {
  Trivialiser tr(f);
  Formula skeleton = tr.walk(f);
  return Template(std::move(skeleton), tr.param_vars(), tr.params());
}

bool similar(const Formula& f1, const Formula& f2) {
  return trivialise(f1).skeleton() == trivialise(f2).skeleton();
}

bool ext_equiv(const Formula& f1, const Assignment& a1, const Formula& f2,
               const Assignment& a2) {
  for (const auto& v : free_vars(f1))
    if (!a1.count(v))
      throw std::invalid_argument("ext_equiv: first assignment misses v" + nat_str(v.index));
  for (const auto& v : free_vars(f2))
    if (!a2.count(v))
      throw std::invalid_argument("ext_equiv: second assignment misses v" + nat_str(v.index));
  Template t1 = trivialise(f1);
  Template t2 = trivialise(f2);
  if (!(t1.skeleton() == t2.skeleton())) return false;
  for (std::size_t i = 0; i < t1.params().size(); ++i)
    if (term_eval(t1.params()[i], a1) != term_eval(t2.params()[i], a2)) return false;
  return true;
}

}  // namespace ptk
