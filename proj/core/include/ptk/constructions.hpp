#pragma once

#include <cstddef>
#include <vector>

#include "ptk/syntax.hpp"

namespace ptk {

// Ordered sequence of sentences; operations validate sentence-hood and
// whatever length constraints they need.
using SentenceSeq = std::vector<Formula>;

// Bijection on {0..c}, checked at construction.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> map);
  static Permutation identity(std::size_t size);
  static Permutation swap_first(std::size_t size, std::size_t a);  // sends 0 to a and a to 0

  std::size_t size() const { return map_.size(); }
  std::size_t operator()(std::size_t i) const { return map_.at(i); }

 private:
  std::vector<std::size_t> map_;
};

// The canonically true / false sentences used for empty big connectives.
Formula true_sentence();   // (0 = 0)
Formula false_sentence();  // ~(0 = 0)

// ((f0 | f1) | f2) | ... ; singleton lists return their only element.
// Throws std::invalid_argument on empty input.
Formula big_or_left(const SentenceSeq& fs);
Formula big_and_left(const SentenceSeq& fs);

// The backward recursion over [j, c]:
//   at i = c:          alpha_c & beta_c
//   at i < c:  (alpha_i & beta_i) | (~alpha_i & rest)
Formula stopping_disjunction(const SentenceSeq& alphas, const SentenceSeq& betas,
                             std::size_t j);

// OR_i (alpha_i & AND_{j != i} ~alpha_j); the empty inner conjunction at
// c = 0 is rendered as the true sentence.
Formula unique(const SentenceSeq& alphas);

// OR_i (t = numeral(i) & phi_i), left-grouped. t must be closed.
Formula acdc_lhs(const Term& t, const SentenceSeq& phis);

// Unique(alpha) -> (stopping_disjunction(alpha, beta, 0) <-> OR_i (alpha_i & beta_i))
Formula corollary_formula(const SentenceSeq& alphas, const SentenceSeq& betas);

// Theta_c(x) = OR_{i <= c} (x = numeral(i) & phi_i) where phi_i is the decode
// of i when that is a sentence and ~(0=0) otherwise. x is the lowest variable
// index not occurring in any phi_i.
struct Theta {
  Formula formula;
  VarId var;
};
Theta theta_c(const Nat& c);

// E z (z + x = numeral(a)) with z the lowest index not in vars(x).
Formula le_formula(const Term& x, const Nat& a);

// E z (z + S(s) = t) with z fresh: strict order s < t in {0,S,+,*}.
Formula lt_formula(const Term& s, const Term& t);

// Entry i of the result is fs[sigma(i)].
SentenceSeq permute_seq(const SentenceSeq& fs, const Permutation& sigma);

}  // namespace ptk
