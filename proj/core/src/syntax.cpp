#include "ptk/syntax.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace ptk {

namespace {

std::size_t term_hash(Term::Kind k, const Term::Node* n) {
  std::size_t h = static_cast<std::size_t>(k) * 0x9e3779b97f4a7c15ULL + 0x1234567;
  switch (k) {
    case Term::Kind::Var:
      hash_combine(h, hash_nat(n->var.index));
      break;
    case Term::Kind::Zero:
      break;
    case Term::Kind::Succ:
      hash_combine(h, n->a.hash());
      break;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      hash_combine(h, n->a.hash());
      hash_combine(h, n->b.hash());
      break;
  }
  return h;
}

std::size_t formula_hash(Formula::Kind k, const Formula::Node* n) {
  std::size_t h = static_cast<std::size_t>(k) * 0xc2b2ae3d27d4eb4fULL + 0x7654321;
  switch (k) {
    case Formula::Kind::Eq:
      hash_combine(h, n->tl.hash());
      hash_combine(h, n->tr.hash());
      break;
    case Formula::Kind::Not:
      hash_combine(h, n->fa.hash());
      break;
    case Formula::Kind::Or:
    case Formula::Kind::And:
      hash_combine(h, n->fa.hash());
      hash_combine(h, n->fb.hash());
      break;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      hash_combine(h, hash_nat(n->var.index));
      hash_combine(h, n->fa.hash());
      break;
  }
  return h;
}

}  // namespace

// ---------------------------------------------------------------------------
// Term construction and accessors
// ---------------------------------------------------------------------------

Term Term::var(VarId v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->var = std::move(v);
  n->has_var = true;
  n->hash = term_hash(Kind::Var, n.get());
  return Term(std::move(n));
}

Term Term::zero() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Zero;
  n->hash = term_hash(Kind::Zero, n.get());
  return Term(std::move(n));
}

Term Term::succ(Term t) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Succ;
  n->has_var = t.has_var();
  n->a = std::move(t);
  n->hash = term_hash(Kind::Succ, n.get());
  return Term(std::move(n));
}

Term Term::add(Term l, Term r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Add;
  n->has_var = l.has_var() || r.has_var();
  n->a = std::move(l);
  n->b = std::move(r);
  n->hash = term_hash(Kind::Add, n.get());
  return Term(std::move(n));
}

Term Term::mul(Term l, Term r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Mul;
  n->has_var = l.has_var() || r.has_var();
  n->a = std::move(l);
  n->b = std::move(r);
  n->hash = term_hash(Kind::Mul, n.get());
  return Term(std::move(n));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  // Explicit worklist: numeral chains can be deep enough to overflow the
  // call stack under plain recursion.
  std::vector<std::pair<const Term::Node*, const Term::Node*>> work;
  work.push_back({a.node_.get(), b.node_.get()});
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (x == y) continue;
    if (x->kind != y->kind || x->hash != y->hash) return false;
    switch (x->kind) {
      case Term::Kind::Var:
        if (x->var != y->var) return false;
        break;
      case Term::Kind::Zero:
        break;
      case Term::Kind::Succ:
        work.push_back({x->a.node_.get(), y->a.node_.get()});
        break;
      case Term::Kind::Add:
      case Term::Kind::Mul:
        work.push_back({x->a.node_.get(), y->a.node_.get()});
        work.push_back({x->b.node_.get(), y->b.node_.get()});
        break;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Formula construction and accessors
// ---------------------------------------------------------------------------

Formula Formula::eq(Term l, Term r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Eq;
  n->tl = std::move(l);
  n->tr = std::move(r);
  n->hash = formula_hash(Kind::Eq, n.get());
  return Formula(std::move(n));
}

Formula Formula::neg(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->fa = std::move(f);
  n->hash = formula_hash(Kind::Not, n.get());
  return Formula(std::move(n));
}

Formula Formula::disj(Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->fa = std::move(l);
  n->fb = std::move(r);
  n->hash = formula_hash(Kind::Or, n.get());
  return Formula(std::move(n));
}

Formula Formula::conj(Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->fa = std::move(l);
  n->fb = std::move(r);
  n->hash = formula_hash(Kind::And, n.get());
  return Formula(std::move(n));
}

Formula Formula::exists(VarId v, Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Exists;
  n->var = std::move(v);
  n->fa = std::move(f);
  n->hash = formula_hash(Kind::Exists, n.get());
  return Formula(std::move(n));
}

Formula Formula::forall(VarId v, Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Forall;
  n->var = std::move(v);
  n->fa = std::move(f);
  n->hash = formula_hash(Kind::Forall, n.get());
  return Formula(std::move(n));
}

Formula Formula::iff(Formula a, Formula b) {
  Formula forward = imp(a, b);
  Formula backward = imp(std::move(b), std::move(a));
  return conj(std::move(forward), std::move(backward));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  std::vector<std::pair<const Formula::Node*, const Formula::Node*>> work;
  work.push_back({a.node_.get(), b.node_.get()});
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (x == y) continue;
    if (x->kind != y->kind || x->hash != y->hash) return false;
    switch (x->kind) {
      case Formula::Kind::Eq:
        if (x->tl != y->tl || x->tr != y->tr) return false;
        break;
      case Formula::Kind::Not:
        work.push_back({x->fa.node_.get(), y->fa.node_.get()});
        break;
      case Formula::Kind::Or:
      case Formula::Kind::And:
        work.push_back({x->fa.node_.get(), y->fa.node_.get()});
        work.push_back({x->fb.node_.get(), y->fb.node_.get()});
        break;
      case Formula::Kind::Exists:
      case Formula::Kind::Forall:
        if (x->var != y->var) return false;
        work.push_back({x->fa.node_.get(), y->fa.node_.get()});
        break;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// numeral / free variables / substitution
// ---------------------------------------------------------------------------

Term numeral(const Nat& n) {
  Term t = Term::zero();
  for (Nat i = 0; i < n; ++i) t = Term::succ(std::move(t));
  return t;
}

namespace {

void collect_term_vars(const Term& t, std::set<VarId>& out) {
  if (!t.has_var()) return;
  switch (t.kind()) {
    case Term::Kind::Var:
      out.insert(t.var_id());
      break;
    case Term::Kind::Zero:
      break;
    case Term::Kind::Succ:
      collect_term_vars(t.child(), out);
      break;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      collect_term_vars(t.left(), out);
      collect_term_vars(t.right(), out);
      break;
  }
}

void collect_free(const Formula& f, std::set<VarId>& bound, std::set<VarId>& out) {
  switch (f.kind()) {
    case Formula::Kind::Eq: {
      std::set<VarId> tv;
      collect_term_vars(f.term_left(), tv);
      collect_term_vars(f.term_right(), tv);
      for (const auto& v : tv)
        if (!bound.count(v)) out.insert(v);
      break;
    }
    case Formula::Kind::Not:
      collect_free(f.sub(), bound, out);
      break;
    case Formula::Kind::Or:
    case Formula::Kind::And:
      collect_free(f.left(), bound, out);
      collect_free(f.right(), bound, out);
      break;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      bool fresh = bound.insert(f.quant_var()).second;
      collect_free(f.body(), bound, out);
      if (fresh) bound.erase(f.quant_var());
      break;
    }
  }
}

}  // namespace

std::set<VarId> free_vars(const Term& t) {
  std::set<VarId> out;
  collect_term_vars(t, out);
  return out;
}

std::set<VarId> free_vars(const Formula& f) {
  std::set<VarId> bound, out;
  collect_free(f, bound, out);
  return out;
}

std::set<VarId> bound_vars(const Formula& f) {
  std::set<VarId> out;
  switch (f.kind()) {
    case Formula::Kind::Eq:
      break;
    case Formula::Kind::Not:
      out = bound_vars(f.sub());
      break;
    case Formula::Kind::Or:
    case Formula::Kind::And: {
      out = bound_vars(f.left());
      auto r = bound_vars(f.right());
      out.insert(r.begin(), r.end());
      break;
    }
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      out = bound_vars(f.body());
      out.insert(f.quant_var());
      break;
  }
  return out;
}

bool is_closed(const Term& t) { return !t.has_var(); }

bool is_sentence(const Formula& f) { return free_vars(f).empty(); }

bool is_quantifier_free(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return true;
    case Formula::Kind::Not:
      return is_quantifier_free(f.sub());
    case Formula::Kind::Or:
    case Formula::Kind::And:
      return is_quantifier_free(f.left()) && is_quantifier_free(f.right());
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      return false;
  }
  return false;
}

namespace {

Term subst_term(const Term& s, const VarId& v, const Term& t) {
  if (!s.has_var()) return s;
  switch (s.kind()) {
    case Term::Kind::Var:
      return s.var_id() == v ? t : s;
    case Term::Kind::Zero:
      return s;
    case Term::Kind::Succ:
      return Term::succ(subst_term(s.child(), v, t));
    case Term::Kind::Add:
      return Term::add(subst_term(s.left(), v, t), subst_term(s.right(), v, t));
    case Term::Kind::Mul:
      return Term::mul(subst_term(s.left(), v, t), subst_term(s.right(), v, t));
  }
  return s;
}

Formula subst_formula(const Formula& f, const VarId& v, const Term& t) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return Formula::eq(subst_term(f.term_left(), v, t), subst_term(f.term_right(), v, t));
    case Formula::Kind::Not:
      return Formula::neg(subst_formula(f.sub(), v, t));
    case Formula::Kind::Or:
      return Formula::disj(subst_formula(f.left(), v, t), subst_formula(f.right(), v, t));
    case Formula::Kind::And:
      return Formula::conj(subst_formula(f.left(), v, t), subst_formula(f.right(), v, t));
    case Formula::Kind::Exists:
      if (f.quant_var() == v) return f;
      return Formula::exists(f.quant_var(), subst_formula(f.body(), v, t));
    case Formula::Kind::Forall:
      if (f.quant_var() == v) return f;
      return Formula::forall(f.quant_var(), subst_formula(f.body(), v, t));
  }
  return f;
}

}  // namespace

Term subst_closed(const Term& s, const VarId& v, const Term& t) {
  if (t.has_var()) throw std::invalid_argument("subst_closed: replacement term is not closed");
  return subst_term(s, v, t);
}

Formula subst_closed(const Formula& f, const VarId& v, const Term& t) {
  if (t.has_var()) throw std::invalid_argument("subst_closed: replacement term is not closed");
  return subst_formula(f, v, t);
}

Formula subst_free_unchecked(const Formula& f, const VarId& v, const Term& t) {
  return subst_formula(f, v, t);
}

Formula apply_assignment(const Formula& f, const Assignment& a) {
  auto fv = free_vars(f);
  for (const auto& v : fv) {
    if (!a.count(v))
      throw std::invalid_argument("apply_assignment: assignment misses v" + nat_str(v.index));
  }
  Formula out = f;
  for (const auto& v : fv) out = subst_formula(out, v, numeral(a.at(v)));
  return out;
}

// ---------------------------------------------------------------------------
// Printing (canonical, fully parenthesised; reparses to an equal tree)
// ---------------------------------------------------------------------------

namespace {

void print_term(std::ostream& os, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
      os << 'v' << t.var_id().index;
      break;
    case Term::Kind::Zero:
      os << '0';
      break;
    case Term::Kind::Succ: {
      // Successor chains (numerals) are printed iteratively; they can be far
      // deeper than the call stack allows.
      std::size_t wraps = 0;
      const Term* cur = &t;
      while (cur->kind() == Term::Kind::Succ) {
        os << "S(";
        ++wraps;
        cur = &cur->child();
      }
      print_term(os, *cur);
      for (std::size_t i = 0; i < wraps; ++i) os << ')';
      break;
    }
    case Term::Kind::Add:
      os << '(';
      print_term(os, t.left());
      os << " + ";
      print_term(os, t.right());
      os << ')';
      break;
    case Term::Kind::Mul:
      os << '(';
      print_term(os, t.left());
      os << " * ";
      print_term(os, t.right());
      os << ')';
      break;
  }
}

void print_formula(std::ostream& os, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      os << '(';
      print_term(os, f.term_left());
      os << " = ";
      print_term(os, f.term_right());
      os << ')';
      break;
    case Formula::Kind::Not:
      os << '~';
      print_formula(os, f.sub());
      break;
    case Formula::Kind::Or:
      os << '(';
      print_formula(os, f.left());
      os << " | ";
      print_formula(os, f.right());
      os << ')';
      break;
    case Formula::Kind::And:
      os << '(';
      print_formula(os, f.left());
      os << " & ";
      print_formula(os, f.right());
      os << ')';
      break;
    case Formula::Kind::Exists:
      os << "E v" << f.quant_var().index << ' ';
      print_formula(os, f.body());
      break;
    case Formula::Kind::Forall:
      os << "A v" << f.quant_var().index << ' ';
      print_formula(os, f.body());
      break;
  }
}

}  // namespace

std::string print(const Term& t) {
  std::ostringstream os;
  print_term(os, t);
  return os.str();
}

std::string print(const Formula& f) {
  std::ostringstream os;
  print_formula(os, f);
  return os.str();
}

}  // namespace ptk
