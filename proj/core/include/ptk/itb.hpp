#pragma once

#include <memory>
#include <vector>

#include "ptk/godel.hpp"
#include "ptk/syntax.hpp"

namespace ptk {

// Index-sort variable of the two-sorted language. Kept as a distinct type so
// that the sorts cannot be mixed up at construction time.
struct IndexVarId {
  Nat index;

  IndexVarId() : index(0) {}
  explicit IndexVarId(Nat i) : index(std::move(i)) {}
  explicit IndexVarId(unsigned long long i) : index(i) {}

  friend bool operator==(const IndexVarId& a, const IndexVarId& b) { return a.index == b.index; }
  friend bool operator!=(const IndexVarId& a, const IndexVarId& b) { return a.index != b.index; }
  friend bool operator<(const IndexVarId& a, const IndexVarId& b) { return a.index < b.index; }
};

// Two-sorted formulas: number-sort terms as in Term, atoms for equality,
// index order and the indexed truth predicate, connectives ~ | &, and
// quantifiers over either sort.
class ItbFormula {
 public:
  enum class Kind {
    Eq,         // number-sort equation
    IndexLess,  // beta < gamma on the index sort
    TruthAt,    // T(beta, t) with a number-sort argument
    Not,
    Or,
    And,
    NumExists,
    NumForall,
    IdxExists,
    IdxForall,
  };

  static ItbFormula eq(Term l, Term r);
  static ItbFormula index_less(IndexVarId a, IndexVarId b);
  static ItbFormula truth_at(IndexVarId a, Term t);
  static ItbFormula neg(ItbFormula f);
  static ItbFormula disj(ItbFormula l, ItbFormula r);
  static ItbFormula conj(ItbFormula l, ItbFormula r);
  static ItbFormula imp(ItbFormula a, ItbFormula b) {
    return disj(neg(std::move(a)), std::move(b));
  }
  static ItbFormula iff(ItbFormula a, ItbFormula b);
  static ItbFormula num_exists(VarId v, ItbFormula f);
  static ItbFormula num_forall(VarId v, ItbFormula f);
  static ItbFormula idx_exists(IndexVarId v, ItbFormula f);
  static ItbFormula idx_forall(IndexVarId v, ItbFormula f);

  // Arithmetical formulas are ITB formulas as they stand.
  static ItbFormula lift(const Formula& f);

  Kind kind() const;
  const Term& term_left() const;
  const Term& term_right() const;
  const IndexVarId& index_left() const;
  const IndexVarId& index_right() const;
  const IndexVarId& truth_index() const;
  const Term& truth_arg() const;
  const ItbFormula& sub() const;
  const ItbFormula& left() const;
  const ItbFormula& right() const;
  const VarId& num_var() const;
  const IndexVarId& idx_var() const;
  const ItbFormula& body() const;

  std::size_t hash() const;
  const void* id() const;

  friend bool operator==(const ItbFormula& a, const ItbFormula& b);
  friend bool operator!=(const ItbFormula& a, const ItbFormula& b) { return !(a == b); }

  struct Node;

  ItbFormula() : node_(nullptr) {}
  bool empty() const { return node_ == nullptr; }

 private:
  explicit ItbFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct ItbFormula::Node {
  Kind kind = Kind::Eq;
  Term tl, tr;
  IndexVarId ia, ib;
  VarId nv;
  ItbFormula fa, fb;
  std::size_t hash = 0;
};

inline ItbFormula::Kind ItbFormula::kind() const { return node_->kind; }
inline const Term& ItbFormula::term_left() const { return node_->tl; }
inline const Term& ItbFormula::term_right() const { return node_->tr; }
inline const IndexVarId& ItbFormula::index_left() const { return node_->ia; }
inline const IndexVarId& ItbFormula::index_right() const { return node_->ib; }
inline const IndexVarId& ItbFormula::truth_index() const { return node_->ia; }
inline const Term& ItbFormula::truth_arg() const { return node_->tl; }
inline const ItbFormula& ItbFormula::sub() const { return node_->fa; }
inline const ItbFormula& ItbFormula::left() const { return node_->fa; }
inline const ItbFormula& ItbFormula::right() const { return node_->fb; }
inline const VarId& ItbFormula::num_var() const { return node_->nv; }
inline const IndexVarId& ItbFormula::idx_var() const { return node_->ia; }
inline const ItbFormula& ItbFormula::body() const { return node_->fa; }
inline std::size_t ItbFormula::hash() const { return node_->hash; }
inline const void* ItbFormula::id() const { return node_.get(); }

std::string print(const ItbFormula& f);

bool is_itb_sentence(const ItbFormula& f);

// Coding of ITB formulas. Shared constructors reuse the arithmetical tags, so
// a purely arithmetical ITB formula codes exactly like its Formula twin; the
// ITB-only constructors use tags outside the arithmetical range and therefore
// never decode as arithmetical sentences.
Nat itb_formula_code(const ItbFormula& f);
GodelCode itb_godel_encode(const ItbFormula& f);

// psi^{< alpha}: every index-sort quantifier in f bounded by alpha. Number
// quantifiers are untouched. Throws std::invalid_argument if f binds alpha.
ItbFormula relativize(const ItbFormula& f, const IndexVarId& alpha);

// The biconditional  A alpha (T_alpha(code(phi)) <-> phi^{< alpha}).
ItbFormula itb_biconditional(const ItbFormula& phi, const IndexVarId& alpha);

struct IotaOptions {
  Nat level_cap = 4;        // maximum a; the construction grows like (n*a)^a
  std::size_t gamma_cap = 4;  // maximum number of biconditional sentences
};

// One-sorted translation of an ITB formula at level a:
//  - arithmetical atoms are unchanged,
//  - index variables become number variables above every variable in sight,
//  - index quantifiers are bounded by d_a(x) = (x <= a) & phi(x),
//  - beta < gamma becomes the arithmetical strict order,
//  - T(beta, t) unfolds into the nested case distinction over gamma_phis
//    with inner translations at levels j < a.
// phi must have exactly one free variable.
Formula iota_translate(const ItbFormula& f, const Nat& a, const Formula& phi,
                       const std::vector<ItbFormula>& gamma_phis, const IotaOptions& opts = {});

// Tree node count (terms and formula nodes), computed with sharing-aware
// memoisation so translated formulas can be measured without expansion.
Nat node_count(const Term& t);
Nat node_count(const Formula& f);

}  // namespace ptk
