#pragma once

#include <vector>

#include "ptk/report.hpp"
#include "ptk/syntax.hpp"

namespace ptk {

// Three-valued verdict of the bounded evaluator. Unknown only arises from
// quantifier bound exhaustion, never on quantifier-free input.
enum class Truth3 { True, False, Unknown };

const char* to_string(Truth3 t);

// Value of a closed term. Throws std::invalid_argument on open terms.
Nat val(const Term& t);

// Value of a term under an assignment covering its variables.
// Throws std::invalid_argument if a variable is missing.
Nat term_eval(const Term& t, const Assignment& a);

// Compositional truth for quantifier-free sentences: equations by value
// equality, ~/|/& classically. Throws std::invalid_argument if the input has
// quantifiers or free variables.
bool tr0(const Formula& s);

// Compositional truth of a quantifier-free formula under an assignment
// covering its free variables; tr0(s) == qf_truth(s, {}) for sentences.
bool qf_truth(const Formula& f, const Assignment& a);

// Bounded three-valued evaluation of an arbitrary sentence over the standard
// model. Quantifier-free sentences always decide and agree with tr0.
// E v f: True if some witness <= bound works, else Unknown.
// A v f: False if some counterexample <= bound works, else Unknown.
// Connectives combine by strong Kleene.
Truth3 std_truth(const Formula& s, const Nat& bound);

// Quantifier-free evaluator with a persistent closed-subterm value cache,
// for scans that revisit the same shared terms many times (the Theta sweep
// revisits every numeral once per probe).
class QfEvaluator {
 public:
  QfEvaluator();
  ~QfEvaluator();
  QfEvaluator(QfEvaluator&&) noexcept;
  QfEvaluator& operator=(QfEvaluator&&) noexcept;

  Nat term_value(const Term& t, const Assignment& a);
  bool truth(const Formula& f, const Assignment& a);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Options for the partial-compositional-truth-predicate checker. Quantified
// members are probed with numeral witnesses 0..witness_bound; the witness
// search is a desk-scale stand-in for the unbounded quantifier clause.
struct PartialTruthCheckOptions {
  Nat witness_bound = 8;
};

// Checks that truths, read as a truth predicate on the carrier
// truths-plus-probe, is partially compositional:
//   - carrier closure: direct-subformula instances of every member of truths
//     stay inside the carrier,
//   - the compositional clauses for =, ~, |, E (and their &/A duals) hold at
//     every carrier sentence,
//   - extensionally equivalent carrier sentences get the same verdict.
// Violations become report failures; the report passes iff there are none.
Report check_partial_truth_predicate(const std::vector<Formula>& truths,
                                     const std::vector<Formula>& probe,
                                     const PartialTruthCheckOptions& opts = {});

}  // namespace ptk
