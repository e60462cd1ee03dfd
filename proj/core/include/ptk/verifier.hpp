#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ptk/itb.hpp"
#include "ptk/report.hpp"
#include "ptk/saturation.hpp"
#include "ptk/syntax.hpp"

namespace ptk {

// Deterministic generator: same seed, same corpus, on every platform. Only
// raw mt19937_64 output is used; no library distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : gen_() % n; }
  bool flip() { return (gen_() & 1) != 0; }

 private:
  std::mt19937_64 gen_;
};

// Corpus generators shared by the verification suites and the test suites.
Term gen_closed_term(Rng& rng, int depth);
Term gen_term_with_value(Rng& rng, const Nat& value, int decorations);
Formula gen_qf_sentence(Rng& rng, int depth);
// Sentence forced to the given tr0 verdict by negating when needed.
Formula gen_qf_sentence_with_truth(Rng& rng, int depth, bool truth);
// Arbitrary formula over variables v0..v(nvars-1), quantifiers included.
Formula gen_formula(Rng& rng, int depth, unsigned nvars);

// Size parameters of a suite run. Zero means the suite default; the domain
// and family only matter for the saturation suite.
struct CorpusSpec {
  std::uint64_t seed = 42;
  std::size_t instances = 0;
  std::size_t c_max = 0;
  Nat bound = 0;
  Domain domain;
  std::vector<Formula> family;
};

// Exhaustive check that on every valuation with exactly one alpha true, the
// stopping disjunction, the plain case distinction and the beta at the true
// index evaluate alike. Includes a mutated formula that must disagree.
Report verify_prop33(const CorpusSpec& spec);

// Tautology of the Unique bridge at exhaustive small sizes and sampled DPLL
// sizes, plus the introduction, refutation and permutation obligations, each
// with a mutated non-tautology dual.
Report verify_cor34(const CorpusSpec& spec);

// Planted least-true-index instances: tr0 of the stopping disjunction equals
// tr0 of beta at the least true alpha index.
Report verify_thm32(const CorpusSpec& spec);

// Semantic case-distinction equivalence over the standard model, including
// instances whose case term value falls outside the range.
Report verify_acdc(const CorpusSpec& spec);

// Compositional equivalences of tr0 and value-matched extensionality on a
// random quantifier-free corpus.
Report verify_tr0_axioms(const CorpusSpec& spec);

// Theta sweep: decoded quantifier-free sentences agree with their Theta
// verdict, non-sentence codes come out false, quantified decodes are counted
// and skipped.
Report verify_theta(const CorpusSpec& spec);

// Full saturation run on a family: compositional clauses for every family
// formula, extensionality, seed agreement, the quantifier-free oracle
// equivalence, and a dropped-pair mutant that the checker must flag.
Report verify_saturation(const CorpusSpec& spec);

// Structural checks of the interpretation translation: atoms preserved,
// index quantifiers relativised through the domain formula, the truth
// predicate unfolded to the nested case distinction, tree size equal to the
// arithmetic recurrence, and a wrong-range mutant template that must differ.
Report verify_iota(const CorpusSpec& spec);

// Truth table vs DPLL vs exported-and-reparsed DIMACS verdicts on a random
// propositional corpus.
Report verify_engines(const CorpusSpec& spec);

// The built-in 30-formula subformula-closed saturation family.
std::vector<Formula> default_family();

// Default domain {0..7} for the saturation suite.
Domain default_domain();

// Default inputs of the interpretation translation: up to four small
// biconditional sentences and the one-free-variable domain formula.
std::vector<ItbFormula> default_iota_gamma(std::size_t n);
Formula default_iota_phi();

const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);
Report run_suite(const std::string& name, const CorpusSpec& spec);
std::vector<Report> run_all(const CorpusSpec& spec, std::size_t jobs = 1);

}  // namespace ptk
