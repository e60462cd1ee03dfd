#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ptk/nat.hpp"

namespace ptk {

// First-order variable, identified by its numeric index (v0, v1, ...).
struct VarId {
  Nat index;

  VarId() : index(0) {}
  explicit VarId(Nat i) : index(std::move(i)) {}
  explicit VarId(unsigned long long i) : index(i) {}

  friend bool operator==(const VarId& a, const VarId& b) { return a.index == b.index; }
  friend bool operator!=(const VarId& a, const VarId& b) { return a.index != b.index; }
  friend bool operator<(const VarId& a, const VarId& b) { return a.index < b.index; }
};

struct VarIdHash {
  std::size_t operator()(const VarId& v) const { return hash_nat(v.index); }
};

// Finite map from variables to naturals. Used both for term evaluation
// and as the second component of satisfaction pairs.
using Assignment = std::map<VarId, Nat>;

// ---------------------------------------------------------------------------
// Terms of the language {0, S, +, *}.
//
// Terms are immutable trees shared via shared_ptr; copies are O(1) and all
// operations on them are pure, so values can be shared freely across threads.
// ---------------------------------------------------------------------------

class Term {
 public:
  enum class Kind { Var, Zero, Succ, Add, Mul };

  static Term var(VarId v);
  static Term zero();
  static Term succ(Term t);
  static Term add(Term l, Term r);
  static Term mul(Term l, Term r);

  Kind kind() const;
  const VarId& var_id() const;      // Kind::Var
  const Term& child() const;        // Kind::Succ
  const Term& left() const;         // Kind::Add / Kind::Mul
  const Term& right() const;        // Kind::Add / Kind::Mul

  bool has_var() const;
  std::size_t hash() const;

  // Structural equality, iterative (safe on very deep numeral chains).
  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

  const void* id() const;

  struct Node;

  Term() : node_(nullptr) {}  // empty slot inside Node; never user-visible
  bool empty() const { return node_ == nullptr; }

 private:
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  Kind kind = Kind::Zero;
  VarId var;           // Var
  Term a, b;           // Succ uses a; Add/Mul use a,b
  std::size_t hash = 0;
  bool has_var = false;
};

inline Term::Kind Term::kind() const { return node_->kind; }
inline const VarId& Term::var_id() const { return node_->var; }
inline const Term& Term::child() const { return node_->a; }
inline const Term& Term::left() const { return node_->a; }
inline const Term& Term::right() const { return node_->b; }
inline bool Term::has_var() const { return node_->has_var; }
inline std::size_t Term::hash() const { return node_->hash; }
inline const void* Term::id() const { return node_.get(); }

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

// ---------------------------------------------------------------------------
// Formulas over {=, ~, |, &, E, A}. Imp and Iff are sugar and expand to
// ~ and | (plus &) at construction time; they never appear as node kinds.
// ---------------------------------------------------------------------------

class Formula {
 public:
  enum class Kind { Eq, Not, Or, And, Exists, Forall };

  static Formula eq(Term l, Term r);
  static Formula neg(Formula f);
  static Formula disj(Formula l, Formula r);
  static Formula conj(Formula l, Formula r);
  static Formula exists(VarId v, Formula f);
  static Formula forall(VarId v, Formula f);
  static Formula imp(Formula a, Formula b) { return disj(neg(std::move(a)), std::move(b)); }
  static Formula iff(Formula a, Formula b);

  Kind kind() const;
  const Term& term_left() const;    // Eq
  const Term& term_right() const;   // Eq
  const Formula& sub() const;       // Not
  const Formula& left() const;      // Or / And
  const Formula& right() const;     // Or / And
  const VarId& quant_var() const;   // Exists / Forall
  const Formula& body() const;      // Exists / Forall

  std::size_t hash() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

  const void* id() const;

  struct Node;

  Formula() : node_(nullptr) {}
  bool empty() const { return node_ == nullptr; }

 private:
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Kind kind = Kind::Eq;
  Term tl, tr;        // Eq
  Formula fa, fb;     // Not uses fa; Or/And use fa,fb; quantifiers use fa
  VarId var;          // Exists / Forall
  std::size_t hash = 0;
};

inline Formula::Kind Formula::kind() const { return node_->kind; }
inline const Term& Formula::term_left() const { return node_->tl; }
inline const Term& Formula::term_right() const { return node_->tr; }
inline const Formula& Formula::sub() const { return node_->fa; }
inline const Formula& Formula::left() const { return node_->fa; }
inline const Formula& Formula::right() const { return node_->fb; }
inline const VarId& Formula::quant_var() const { return node_->var; }
inline const Formula& Formula::body() const { return node_->fa; }
inline std::size_t Formula::hash() const { return node_->hash; }
inline const void* Formula::id() const { return node_.get(); }

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// ---------------------------------------------------------------------------
// Basic syntactic operations
// ---------------------------------------------------------------------------

// Canonical numeral S(S(...S(0)...)) with n applications of S.
Term numeral(const Nat& n);

std::set<VarId> free_vars(const Term& t);
std::set<VarId> free_vars(const Formula& f);

// Variables occurring in a binder anywhere in f.
std::set<VarId> bound_vars(const Formula& f);

bool is_closed(const Term& t);
bool is_sentence(const Formula& f);
bool is_quantifier_free(const Formula& f);

// Replaces every free occurrence of v by the closed term t.
// Throws std::invalid_argument if t has free variables.
Formula subst_closed(const Formula& f, const VarId& v, const Term& t);
Term subst_closed(const Term& s, const VarId& v, const Term& t);

// The sentence f[a]: every free variable replaced by the numeral of its
// value under a. Throws std::invalid_argument if a does not cover FV(f).
Formula apply_assignment(const Formula& f, const Assignment& a);

// Grammar-exact text rendering; parse(print(x)) == x.
std::string print(const Term& t);
std::string print(const Formula& f);

struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(std::size_t off, const std::string& msg)
      : std::runtime_error(msg + " at byte " + std::to_string(off)), offset(off) {}
};

Term parse_term(std::string_view text);
Formula parse_formula(std::string_view text);
// Either-entry point: formulas take precedence, then terms.
std::variant<Formula, Term> parse(std::string_view text);

// ---------------------------------------------------------------------------
// Trivialisation: the canonical skeleton of a formula with every maximal
// subterm free of bound variables abstracted into a parameter variable.
// ---------------------------------------------------------------------------

class Template {
 public:
  Template(Formula skeleton, std::vector<VarId> param_vars, std::vector<Term> params);

  const Formula& skeleton() const { return skeleton_; }
  const std::vector<VarId>& param_vars() const { return param_vars_; }
  const std::vector<Term>& params() const { return params_; }

  // skeleton with param_vars replaced by the given terms; with params()
  // this reconstructs the original formula exactly.
  Formula instantiate(const std::vector<Term>& terms) const;
  Formula reconstruct() const { return instantiate(params_); }

 private:
  Formula skeleton_;
  std::vector<VarId> param_vars_;
  std::vector<Term> params_;
};

Template trivialise(const Formula& f);

// Same skeleton under trivialisation.
bool similar(const Formula& f1, const Formula& f2);

// Same skeleton and pointwise-equal parameter values under the respective
// assignments. Throws std::invalid_argument if an assignment does not cover
// the free variables of its formula.
bool ext_equiv(const Formula& f1, const Assignment& a1, const Formula& f2, const Assignment& a2);

// Substitution of an arbitrary (possibly open) term without a capture check.
// Callers must guarantee no capture can occur; trivialisation and the
// interpretation builder rely on freshness arguments for that.
Formula subst_free_unchecked(const Formula& f, const VarId& v, const Term& t);

}  // namespace ptk
