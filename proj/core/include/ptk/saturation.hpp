#pragma once

#include <cstddef>
#include <unordered_set>
#include <vector>

#include "ptk/report.hpp"
#include "ptk/syntax.hpp"

namespace ptk {

// Finite set of naturals standing in for the number sort; assignment values
// are drawn from it and the existential clause quantifies over it.
class Domain {
 public:
  Domain() = default;
  explicit Domain(std::vector<Nat> values);
  static Domain range(const Nat& lo, const Nat& hi);  // inclusive

  const std::vector<Nat>& values() const { return values_; }
  bool empty() const { return values_.empty(); }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<Nat> values_;  // sorted, unique
};

struct SatPair {
  Formula formula;
  Assignment assignment;  // domain exactly FV(formula)

  friend bool operator==(const SatPair& a, const SatPair& b) {
    return a.formula == b.formula && a.assignment == b.assignment;
  }
};

struct SatPairHash {
  std::size_t operator()(const SatPair& p) const;
};

std::string print(const Assignment& a);
std::string print(const SatPair& p);

// Partial satisfaction predicate: a set of (formula, assignment) pairs over
// a fixed family of formulas and a fixed finite domain.
class PartialSatPredicate {
 public:
  PartialSatPredicate() = default;
  PartialSatPredicate(std::vector<Formula> family, Domain domain);

  const std::vector<Formula>& family() const { return family_; }
  const Domain& domain() const { return domain_; }

  // Membership; the assignment is restricted to FV(formula) first.
  bool contains(const Formula& f, const Assignment& a) const;
  void insert(const Formula& f, const Assignment& a);
  std::size_t size() const { return pairs_.size(); }
  const std::unordered_set<SatPair, SatPairHash>& pairs() const { return pairs_; }

 private:
  std::vector<Formula> family_;
  Domain domain_;
  std::unordered_set<SatPair, SatPairHash> pairs_;
};

// Equivalence classes of the family under syntactic similarity.
struct SimilarityClass {
  Formula skeleton;
  std::vector<Formula> members;
  std::size_t connective_count = 0;  // connectives + quantifiers of the skeleton
};

std::vector<SimilarityClass> similarity_classes(const std::vector<Formula>& phis);

// The subformula-up-to-similarity order on classes: [phi] <= [psi] when some
// member of [psi] has a direct subformula whose skeleton is [phi]'s,
// transitively closed. Weak antisymmetry is checked via connective counts;
// a violation throws std::logic_error.
class ClassOrder {
 public:
  ClassOrder(const std::vector<SimilarityClass>& classes,
             std::vector<std::vector<bool>> leq);

  std::size_t size() const { return leq_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  bool is_minimal(std::size_t c) const;
  // Class indices in a processing order compatible with the order.
  const std::vector<std::size_t>& topo_order() const { return topo_; }

 private:
  std::vector<std::vector<bool>> leq_;
  std::vector<std::size_t> topo_;
};

ClassOrder class_order(const std::vector<SimilarityClass>& classes);

// All assignments FV(f) -> D, in lexicographic order of the sorted variables.
std::vector<Assignment> assignments_over(const Formula& f, const Domain& D);

// The base set S^0: pairs extensionally equivalent to a previous-round pair
// or to (phi', {}) for a seed truth phi', plus the equations that hold under
// term evaluation. Formulas of minimal classes pick up nothing else.
PartialSatPredicate build_s0(const std::vector<Formula>& phis,
                             const std::vector<Formula>& seed_truths,
                             const PartialSatPredicate& prev, const Domain& D);

// Runs the staged closure on top of S^0, one similarity class per stage in
// class order, so every negation clause reads a fully decided subformula
// class. Stage sizes (after S^0, then after each class pass) land in
// stage_sizes when given.
PartialSatPredicate saturate(const std::vector<Formula>& phis,
                             const std::vector<Formula>& seed_truths,
                             const PartialSatPredicate& prev, const Domain& D,
                             std::vector<std::size_t>* stage_sizes = nullptr);

// The compositional clause for phi's root connective, checked at every
// assignment over the domain.
Report check_comp(const PartialSatPredicate& S, const Formula& phi);

// Closure of the predicate under extensional equivalence across the whole
// family-times-assignments universe.
Report check_extensionality(const PartialSatPredicate& S);

// Every seed truth phi appears as (phi, {}).
Report check_agreement(const PartialSatPredicate& S, const std::vector<Formula>& seed_truths);

}  // namespace ptk
