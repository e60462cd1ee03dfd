#include "ptk/constructions.hpp"

#include <algorithm>

#include "ptk/godel.hpp"

namespace ptk {

Permutation::Permutation(std::vector<std::size_t> map) : map_(std::move(map)) {
  std::vector<bool> seen(map_.size(), false);
  for (std::size_t v : map_) {
    if (v >= map_.size() || seen[v])
      throw std::invalid_argument("Permutation: not a bijection on {0..c}");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t size) {
  std::vector<std::size_t> m(size);
  for (std::size_t i = 0; i < size; ++i) m[i] = i;
  return Permutation(std::move(m));
}

Permutation Permutation::swap_first(std::size_t size, std::size_t a) {
  auto p = identity(size);
  if (a >= size) throw std::invalid_argument("Permutation::swap_first: index out of range");
  std::swap(p.map_[0], p.map_[a]);
  return p;
}

Formula true_sentence() { return Formula::eq(Term::zero(), Term::zero()); }

Formula false_sentence() { return Formula::neg(true_sentence()); }

namespace {

void require_sentences(const SentenceSeq& fs, const char* who) {
  for (const auto& f : fs)
    if (!is_sentence(f))
      throw std::invalid_argument(std::string(who) + ": entry is not a sentence: " + print(f));
}

Formula fold_or(const std::vector<Formula>& fs) {
  Formula out = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) out = Formula::disj(std::move(out), fs[i]);
  return out;
}

Formula fold_and(const std::vector<Formula>& fs) {
  Formula out = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) out = Formula::conj(std::move(out), fs[i]);
  return out;
}

}  // namespace

Formula big_or_left(const SentenceSeq& fs) {
  if (fs.empty()) throw std::invalid_argument("big_or_left: empty sequence");
  require_sentences(fs, "big_or_left");
  return fold_or(fs);
}

Formula big_and_left(const SentenceSeq& fs) {
  if (fs.empty()) throw std::invalid_argument("big_and_left: empty sequence");
  require_sentences(fs, "big_and_left");
  return fold_and(fs);
}

Formula stopping_disjunction(const SentenceSeq& alphas, const SentenceSeq& betas,
                             std::size_t j) {
  if (alphas.size() != betas.size())
    throw std::invalid_argument("stopping_disjunction: length mismatch");
  if (alphas.empty() || j >= alphas.size())
    throw std::invalid_argument("stopping_disjunction: index out of range");
  require_sentences(alphas, "stopping_disjunction");
  require_sentences(betas, "stopping_disjunction");
  std::size_t c = alphas.size() - 1;
  Formula out = Formula::conj(alphas[c], betas[c]);
  for (std::size_t i = c; i-- > j;)
    out = Formula::disj(Formula::conj(alphas[i], betas[i]),
                        Formula::conj(Formula::neg(alphas[i]), std::move(out)));
  return out;
}

Formula unique(const SentenceSeq& alphas) {
  if (alphas.empty()) throw std::invalid_argument("unique: empty sequence");
  require_sentences(alphas, "unique");
  std::vector<Formula> disjuncts;
  disjuncts.reserve(alphas.size());
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    std::vector<Formula> others;
    for (std::size_t j = 0; j < alphas.size(); ++j)
      if (j != i) others.push_back(Formula::neg(alphas[j]));
    Formula inner = others.empty() ? true_sentence() : fold_and(others);
    disjuncts.push_back(Formula::conj(alphas[i], std::move(inner)));
  }
  return fold_or(disjuncts);
}

Formula acdc_lhs(const Term& t, const SentenceSeq& phis) {
  if (t.has_var()) throw std::invalid_argument("acdc_lhs: case term is open");
  if (phis.empty()) throw std::invalid_argument("acdc_lhs: empty sequence");
  require_sentences(phis, "acdc_lhs");
  std::vector<Formula> disjuncts;
  disjuncts.reserve(phis.size());
  Term num = Term::zero();
  for (std::size_t i = 0; i < phis.size(); ++i) {
    disjuncts.push_back(Formula::conj(Formula::eq(t, num), phis[i]));
    num = Term::succ(std::move(num));
  }
  return fold_or(disjuncts);
}

Formula corollary_formula(const SentenceSeq& alphas, const SentenceSeq& betas) {
  if (alphas.size() != betas.size())
    throw std::invalid_argument("corollary_formula: length mismatch");
  std::vector<Formula> cases;
  cases.reserve(alphas.size());
  for (std::size_t i = 0; i < alphas.size(); ++i)
    cases.push_back(Formula::conj(alphas[i], betas[i]));
  return Formula::imp(unique(alphas),
                      Formula::iff(stopping_disjunction(alphas, betas, 0), fold_or(cases)));
}

Theta theta_c(const Nat& c) {
  std::vector<Formula> phis;
  std::set<Nat> used;
  for (Nat i = 0; i <= c; ++i) {
    auto decoded = godel_decode(GodelCode{i});
    Formula phi = false_sentence();
    if (decoded && std::holds_alternative<Formula>(*decoded)) {
      const Formula& f = std::get<Formula>(*decoded);
      if (is_sentence(f)) phi = f;
    }
    for (const auto& v : free_vars(phi)) used.insert(v.index);
    for (const auto& v : bound_vars(phi)) used.insert(v.index);
    phis.push_back(std::move(phi));
  }
  Nat x_index = 0;
  while (used.count(x_index)) ++x_index;
  VarId x{x_index};

  // Numerals share one chain so Theta_c costs O(c) nodes, not O(c^2).
  Term num = Term::zero();
  std::vector<Formula> disjuncts;
  disjuncts.reserve(phis.size());
  for (std::size_t i = 0; i < phis.size(); ++i) {
    disjuncts.push_back(Formula::conj(Formula::eq(Term::var(x), num), phis[i]));
    num = Term::succ(std::move(num));
  }
  return Theta{fold_or(disjuncts), x};
}

Formula le_formula(const Term& x, const Nat& a) {
  std::set<Nat> used;
  for (const auto& v : free_vars(x)) used.insert(v.index);
  Nat z_index = 0;
  while (used.count(z_index)) ++z_index;
  VarId z{z_index};
  return Formula::exists(z, Formula::eq(Term::add(Term::var(z), x), numeral(a)));
}

Formula lt_formula(const Term& s, const Term& t) {
  std::set<Nat> used;
  for (const auto& v : free_vars(s)) used.insert(v.index);
  for (const auto& v : free_vars(t)) used.insert(v.index);
  Nat z_index = 0;
  while (used.count(z_index)) ++z_index;
  VarId z{z_index};
  return Formula::exists(z, Formula::eq(Term::add(Term::var(z), Term::succ(s)), t));
}

SentenceSeq permute_seq(const SentenceSeq& fs, const Permutation& sigma) {
  if (fs.size() != sigma.size())
    throw std::invalid_argument("permute_seq: size mismatch with permutation");
  SentenceSeq out;
  out.reserve(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) out.push_back(fs[sigma(i)]);
  return out;
}

}  // namespace ptk
