#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ptk/syntax.hpp"

namespace ptk {

using AtomId = std::uint32_t;

// Bijection between atom ids and the sentences they stand for. Atom identity
// is structural equality of the sentence trees, with no normalisation.
class AtomTable {
 public:
  AtomId intern(const Formula& sentence);
  const Formula& sentence(AtomId id) const;
  std::optional<AtomId> lookup(const Formula& sentence) const;
  std::size_t size() const { return atoms_.size(); }

 private:
  std::vector<Formula> atoms_;
  std::unordered_map<Formula, AtomId, FormulaHash> index_;
};

// Propositional tree over atom ids with ~, |, & and boolean constants.
// Constants arise from constant folding and empty connectives; they are never
// produced by skeleton extraction.
class PropFormula {
 public:
  enum class Kind { Const, Atom, Not, Or, And };

  static PropFormula constant(bool b);
  static PropFormula atom(AtomId id);
  static PropFormula neg(PropFormula f);
  static PropFormula disj(PropFormula l, PropFormula r);
  static PropFormula conj(PropFormula l, PropFormula r);
  static PropFormula imp(PropFormula a, PropFormula b) {
    return disj(neg(std::move(a)), std::move(b));
  }
  static PropFormula iff(PropFormula a, PropFormula b);

  Kind kind() const;
  bool value() const;       // Const
  AtomId atom_id() const;   // Atom
  const PropFormula& sub() const;
  const PropFormula& left() const;
  const PropFormula& right() const;

  const void* id() const;

  struct Node;

  PropFormula() : node_(nullptr) {}
  bool empty() const { return node_ == nullptr; }

 private:
  explicit PropFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct PropFormula::Node {
  Kind kind = Kind::Const;
  bool value = false;
  AtomId atom = 0;
  PropFormula a, b;
};

inline PropFormula::Kind PropFormula::kind() const { return node_->kind; }
inline bool PropFormula::value() const { return node_->value; }
inline AtomId PropFormula::atom_id() const { return node_->atom; }
inline const PropFormula& PropFormula::sub() const { return node_->a; }
inline const PropFormula& PropFormula::left() const { return node_->a; }
inline const PropFormula& PropFormula::right() const { return node_->b; }
inline const void* PropFormula::id() const { return node_.get(); }

using Valuation = std::map<AtomId, bool>;

// Propositional skeleton of a sentence together with its atom table.
struct Skeleton {
  PropFormula formula;
  std::shared_ptr<AtomTable> table;
};

// Decomposes through ~, | and &; Eq/E/A-rooted subsentences become atoms.
// Throws std::invalid_argument on non-sentences.
Skeleton skeleton(const Formula& sentence);
PropFormula skeleton(const Formula& sentence, AtomTable& table);

// Distinct atoms of p, ascending.
std::vector<AtomId> atoms_of(const PropFormula& p);

// Classical evaluation; throws std::invalid_argument on a missing atom.
bool eval_valuation(const PropFormula& p, const Valuation& v);

// Exhaustive truth table; caller guarantees the atom count is sane.
bool is_tautology_truth_table(const PropFormula& p);

// DPLL on the Tseitin encoding of ~p.
bool is_tautology_dpll(const PropFormula& p);

// Truth table up to truth_table_cutoff atoms, DPLL beyond.
inline constexpr std::size_t kTruthTableCutoff = 20;
bool is_tautology(const PropFormula& p);

// Some valuation satisfying all of fs and falsifying p, if one exists.
// With empty fs this is a countermodel search for p.
std::optional<Valuation> find_countermodel(const std::vector<PropFormula>& fs,
                                           const PropFormula& p);

// Every valuation satisfying all premises satisfies p. Premises and
// conclusion must share one atom table when given as skeletons.
bool entails(const std::vector<PropFormula>& premises, const PropFormula& p);
bool entails(const std::vector<Skeleton>& premises, const Skeleton& p);

// CNF with Tseitin auxiliary variables; equisatisfiable with its source.
// Variables are 1-based; atoms keep the low indices in ascending AtomId
// order, auxiliaries follow.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
  std::vector<AtomId> atom_of_var;  // atom_of_var[i] is the atom of var i+1
};

CnfFormula to_cnf_tseitin(const PropFormula& p);

// DIMACS text, header "p cnf <vars> <clauses>", clauses 0-terminated.
std::string export_dimacs(const CnfFormula& c);
CnfFormula parse_dimacs(const std::string& text);

// Plain DPLL with unit propagation; returns a model if satisfiable.
std::optional<std::vector<bool>> dpll_sat(const CnfFormula& c);

}  // namespace ptk
