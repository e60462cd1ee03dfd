#include "ptk/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <sstream>

#include "ptk/constructions.hpp"
#include "ptk/eval.hpp"
#include "ptk/godel.hpp"
#include "ptk/itb.hpp"
#include "ptk/prop.hpp"

namespace ptk {

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::uint64_t ms() const {
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                          std::chrono::steady_clock::now() - start_)
                                          .count());
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string str(const Nat& n) { return nat_str(n); }

}  // namespace

// ---------------------------------------------------------------------------
// Corpus generators
// ---------------------------------------------------------------------------

Term gen_closed_term(Rng& rng, int depth) {
  if (depth <= 0) return numeral(rng.below(4));
  switch (rng.below(4)) {
    case 0:
      return numeral(rng.below(4));
    case 1:
      return Term::succ(gen_closed_term(rng, depth - 1));
    case 2:
      return Term::add(gen_closed_term(rng, depth - 1), gen_closed_term(rng, depth - 1));
    default:
      return Term::mul(gen_closed_term(rng, depth - 1), gen_closed_term(rng, depth - 1));
  }
}

Term gen_term_with_value(Rng& rng, const Nat& value, int decorations) {
  if (decorations <= 0) return numeral(value);
  switch (rng.below(4)) {
    case 0:
      return numeral(value);
    case 1:
      if (value > 0) return Term::succ(gen_term_with_value(rng, value - 1, decorations - 1));
      return Term::mul(numeral(rng.below(3)), Term::zero());
    case 2: {
      std::uint64_t v = value.convert_to<std::uint64_t>();
      Nat a = rng.below(v + 1);
      return Term::add(gen_term_with_value(rng, a, decorations - 1),
                       gen_term_with_value(rng, value - a, decorations - 1));
    }
    default:
      return Term::mul(gen_term_with_value(rng, value, decorations - 1),
                       Term::succ(Term::zero()));
  }
}

Formula gen_qf_sentence(Rng& rng, int depth) {
  if (depth <= 0 || rng.below(3) == 0)
    return Formula::eq(gen_closed_term(rng, 2), gen_closed_term(rng, 2));
  switch (rng.below(3)) {
    case 0:
      return Formula::neg(gen_qf_sentence(rng, depth - 1));
    case 1:
      return Formula::disj(gen_qf_sentence(rng, depth - 1), gen_qf_sentence(rng, depth - 1));
    default:
      return Formula::conj(gen_qf_sentence(rng, depth - 1), gen_qf_sentence(rng, depth - 1));
  }
}

Formula gen_qf_sentence_with_truth(Rng& rng, int depth, bool truth) {
  Formula f = gen_qf_sentence(rng, depth);
  return tr0(f) == truth ? f : Formula::neg(f);
}

namespace {

Term gen_open_term(Rng& rng, int depth, unsigned nvars) {
  if (depth <= 0) {
    if (nvars > 0 && rng.flip()) return Term::var(VarId(rng.below(nvars)));
    return numeral(rng.below(3));
  }
  switch (rng.below(5)) {
    case 0:
      if (nvars > 0) return Term::var(VarId(rng.below(nvars)));
      return numeral(rng.below(3));
    case 1:
      return numeral(rng.below(3));
    case 2:
      return Term::succ(gen_open_term(rng, depth - 1, nvars));
    case 3:
      return Term::add(gen_open_term(rng, depth - 1, nvars),
                       gen_open_term(rng, depth - 1, nvars));
    default:
      return Term::mul(gen_open_term(rng, depth - 1, nvars),
                       gen_open_term(rng, depth - 1, nvars));
  }
}

}  // namespace

Formula gen_formula(Rng& rng, int depth, unsigned nvars) {
  if (depth <= 0 || rng.below(4) == 0)
    return Formula::eq(gen_open_term(rng, 2, nvars), gen_open_term(rng, 2, nvars));
  switch (rng.below(5)) {
    case 0:
      return Formula::neg(gen_formula(rng, depth - 1, nvars));
    case 1:
      return Formula::disj(gen_formula(rng, depth - 1, nvars),
                           gen_formula(rng, depth - 1, nvars));
    case 2:
      return Formula::conj(gen_formula(rng, depth - 1, nvars),
                           gen_formula(rng, depth - 1, nvars));
    case 3:
      return Formula::exists(VarId(rng.below(nvars ? nvars : 1)),
                             gen_formula(rng, depth - 1, nvars));
    default:
      return Formula::forall(VarId(rng.below(nvars ? nvars : 1)),
                             gen_formula(rng, depth - 1, nvars));
  }
}

// ---------------------------------------------------------------------------
// prop33
// ---------------------------------------------------------------------------

namespace {

// Pairwise distinct atomic sentences to serve as propositional atoms.
Formula atom_sentence(std::size_t i) {
  return Formula::eq(numeral(i), numeral(i));
}

Formula atom_sentence_b(std::size_t i) {
  return Formula::eq(numeral(i), Term::succ(numeral(i)));
}

}  // namespace

Report verify_prop33(const CorpusSpec& spec) {
  Stopwatch sw;
  Report r;
  r.suite = "prop33";
  r.seed = spec.seed;
  std::size_t c_max = spec.c_max ? spec.c_max : 5;

  for (std::size_t c = 0; c <= c_max; ++c) {
    SentenceSeq alphas, betas;
    for (std::size_t i = 0; i <= c; ++i) {
      alphas.push_back(atom_sentence(i));
      betas.push_back(atom_sentence_b(i));
    }
    Formula stopping = stopping_disjunction(alphas, betas, 0);
    std::vector<Formula> cases;
    for (std::size_t i = 0; i <= c; ++i) cases.push_back(Formula::conj(alphas[i], betas[i]));
    Formula distinction = big_or_left(cases);

    AtomTable table;
    PropFormula sk_stop = skeleton(stopping, table);
    PropFormula sk_dist = skeleton(distinction, table);
    std::vector<AtomId> a_id, b_id;
    for (std::size_t i = 0; i <= c; ++i) {
      a_id.push_back(*table.lookup(alphas[i]));
      b_id.push_back(*table.lookup(betas[i]));
    }

    for (std::size_t k = 0; k <= c; ++k) {
      for (std::uint64_t mask = 0; mask < (1ULL << (c + 1)); ++mask) {
        Valuation v;
        for (std::size_t i = 0; i <= c; ++i) {
          v[a_id[i]] = i == k;
          v[b_id[i]] = (mask >> i) & 1;
        }
        bool e_stop = eval_valuation(sk_stop, v);
        bool e_dist = eval_valuation(sk_dist, v);
        bool e_beta = (mask >> k) & 1;
        std::ostringstream in;
        in << "c=" << c << " k=" << k << " betas=" << mask;
        r.check(e_stop == e_dist && e_dist == e_beta, in.str(),
                std::string("all three = ") + (e_beta ? "true" : "false"),
                std::string("stopping=") + (e_stop ? "t" : "f") + " distinction=" +
                    (e_dist ? "t" : "f"));
      }
    }
  }

  // Mutant: swapping the guard of the first branch must disagree somewhere.
  {
    std::size_t c = 2;
    SentenceSeq alphas, betas;
    for (std::size_t i = 0; i <= c; ++i) {
      alphas.push_back(atom_sentence(i));
      betas.push_back(atom_sentence_b(i));
    }
    Formula mutant =
        Formula::disj(Formula::conj(Formula::neg(alphas[0]), betas[0]),
                      Formula::conj(alphas[0], stopping_disjunction(alphas, betas, 1)));
    AtomTable table;
    PropFormula sk_mut = skeleton(mutant, table);
    std::vector<Formula> cases;
    for (std::size_t i = 0; i <= c; ++i) cases.push_back(Formula::conj(alphas[i], betas[i]));
    PropFormula sk_dist = skeleton(big_or_left(cases), table);
    bool disagreement = false;
    for (std::size_t k = 0; k <= c && !disagreement; ++k) {
      for (std::uint64_t mask = 0; mask < (1ULL << (c + 1)); ++mask) {
        Valuation v;
        for (std::size_t i = 0; i <= c; ++i) {
          v[*table.lookup(alphas[i])] = i == k;
          v[*table.lookup(betas[i])] = (mask >> i) & 1;
        }
        if (eval_valuation(sk_mut, v) != eval_valuation(sk_dist, v)) {
          disagreement = true;
          break;
        }
      }
    }
    r.check(disagreement, "mutant: swapped stopping guard", "disagrees on some valuation",
            disagreement ? "disagrees" : "agrees everywhere");
  }

  r.ms = sw.ms();
  return r;
}

// ---------------------------------------------------------------------------
// cor34 (+ the section-3 proof obligations)
// ---------------------------------------------------------------------------

namespace {

SentenceSeq distinct_phi_atoms(std::size_t count) {
  SentenceSeq out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(Formula::eq(Term::mul(numeral(i), numeral(i)), Term::zero()));
  return out;
}

SentenceSeq case_equations(const Term& t, std::size_t count) {
  SentenceSeq out;
  Term num = Term::zero();
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(Formula::eq(t, num));
    num = Term::succ(std::move(num));
  }
  return out;
}

Formula case_distinction(const SentenceSeq& alphas, const SentenceSeq& phis) {
  std::vector<Formula> cases;
  for (std::size_t i = 0; i < alphas.size(); ++i)
    cases.push_back(Formula::conj(alphas[i], phis[i]));
  return big_or_left(cases);
}

bool sk_tautology(const Formula& f) { return is_tautology(skeleton(f).formula); }

}  // namespace

Report verify_cor34(const CorpusSpec& spec) {
  Stopwatch sw;
  Report r;
  r.suite = "cor34";
  r.seed = spec.seed;
  Rng rng(spec.seed);
  std::size_t exhaustive_max = spec.c_max ? std::min<std::size_t>(spec.c_max, 5) : 5;
  std::size_t sample_count = spec.instances ? spec.instances : 20;
  std::size_t sample_max = spec.c_max ? spec.c_max : 64;

  for (std::size_t c = 0; c <= exhaustive_max; ++c) {
    SentenceSeq alphas, betas;
    for (std::size_t i = 0; i <= c; ++i) {
      alphas.push_back(atom_sentence(i));
      betas.push_back(atom_sentence_b(i));
    }
    bool taut = is_tautology_truth_table(skeleton(corollary_formula(alphas, betas)).formula);
    r.check(taut, "corollary c=" + std::to_string(c) + " (truth table)", "tautology",
            taut ? "tautology" : "refutable");
  }

  for (std::size_t s = 0; s < sample_count; ++s) {
    std::size_t c = 6 + rng.below(sample_max >= 6 ? sample_max - 5 : 1);
    SentenceSeq alphas, betas;
    for (std::size_t i = 0; i <= c; ++i) {
      alphas.push_back(atom_sentence(i));
      betas.push_back(atom_sentence_b(i));
    }
    bool taut = is_tautology_dpll(skeleton(corollary_formula(alphas, betas)).formula);
    r.check(taut, "corollary c=" + std::to_string(c) + " (dpll)", "tautology",
            taut ? "tautology" : "refutable");
  }

  // Dropping the Unique antecedent must break the corollary.
  {
    std::size_t c = 3;
    SentenceSeq alphas, betas;
    for (std::size_t i = 0; i <= c; ++i) {
      alphas.push_back(atom_sentence(i));
      betas.push_back(atom_sentence_b(i));
    }
    std::vector<Formula> cases;
    for (std::size_t i = 0; i <= c; ++i) cases.push_back(Formula::conj(alphas[i], betas[i]));
    Formula mutant = Formula::iff(stopping_disjunction(alphas, betas, 0), big_or_left(cases));
    bool taut = sk_tautology(mutant);
    r.check(!taut, "mutant: corollary without Unique antecedent", "refutable",
            taut ? "tautology" : "refutable");
  }

  // Section-3 proof obligations at assorted sizes, with mutated duals.
  std::vector<std::size_t> obligation_sizes = {1, 2, 5};
  obligation_sizes.push_back(6 + rng.below(15));
  for (std::size_t c : obligation_sizes) {
    Term t = gen_closed_term(rng, 2);
    SentenceSeq alphas = case_equations(t, c + 1);
    SentenceSeq phis = distinct_phi_atoms(c + 1);
    std::size_t a = rng.below(c + 1);
    Formula acdc = acdc_lhs(t, phis);
    std::string tag = " c=" + std::to_string(c);

    Formula intro = Formula::imp(Formula::conj(alphas[a], phis[a]), acdc);
    r.check(sk_tautology(intro), "introduction" + tag, "tautology", "see formula");

    std::vector<Formula> negs;
    for (std::size_t i = 0; i <= c; ++i) negs.push_back(Formula::neg(alphas[i]));
    Formula refut = Formula::imp(big_and_left(negs), Formula::neg(acdc));
    r.check(sk_tautology(refut), "refutation" + tag, "tautology", "see formula");

    std::vector<std::size_t> perm(c + 1);
    for (std::size_t i = 0; i <= c; ++i) perm[i] = i;
    for (std::size_t i = c + 1; i-- > 1;) std::swap(perm[i], perm[rng.below(i + 1)]);
    Permutation sigma(perm);
    Formula permuted = case_distinction(permute_seq(alphas, sigma), permute_seq(phis, sigma));
    Formula perm_taut = Formula::iff(acdc, permuted);
    r.check(sk_tautology(perm_taut), "permutation" + tag, "tautology", "see formula");

    Formula bridge = Formula::imp(
        unique(alphas), Formula::iff(acdc, stopping_disjunction(alphas, phis, 0)));
    r.check(sk_tautology(bridge), "unique-bridge" + tag, "tautology", "see formula");

    // Mutated duals; each must fail to be a tautology.
    std::size_t b = (a + 1) % (c + 1);
    Formula intro_mut = Formula::imp(Formula::conj(alphas[a], phis[b]), acdc);
    r.check(!sk_tautology(intro_mut), "mutant introduction" + tag, "refutable", "see formula");

    std::vector<Formula> negs_dropped(negs.begin() + 1, negs.end());
    Formula refut_mut = Formula::imp(big_and_left(negs_dropped), Formula::neg(acdc));
    r.check(!sk_tautology(refut_mut), "mutant refutation" + tag, "refutable", "see formula");

    SentenceSeq phis_bad = permute_seq(phis, sigma);
    std::swap(phis_bad[0], phis_bad[phis_bad.size() - 1]);
    bool trivially_same = phis_bad == permute_seq(phis, sigma);
    Formula perm_mut =
        Formula::iff(acdc, case_distinction(permute_seq(alphas, sigma), phis_bad));
    r.check(trivially_same || !sk_tautology(perm_mut), "mutant permutation" + tag, "refutable",
            "see formula");

    Formula bridge_mut = Formula::iff(acdc, stopping_disjunction(alphas, phis, 0));
    r.check(!sk_tautology(bridge_mut), "mutant unique-bridge" + tag, "refutable", "see formula");
  }

  r.ms = sw.ms();
  return r;
}

// ---------------------------------------------------------------------------
// thm32
// ---------------------------------------------------------------------------

Report verify_thm32(const CorpusSpec& spec) {
  Stopwatch sw;
  Report r;
  r.suite = "thm32";
  r.seed = spec.seed;
  Rng rng(spec.seed);
  std::size_t instances = spec.instances ? spec.instances : 500;
  std::size_t c_max = spec.c_max ? spec.c_max : 50;

  for (std::size_t n = 0; n < instances; ++n) {
    std::size_t c = rng.below(c_max + 1);
    std::size_t k0 = rng.below(std::min<std::size_t>(c, 10) + 1);
    SentenceSeq alphas, betas;
    for (std::size_t i = 0; i <= c; ++i) {
      if (i < k0)
        alphas.push_back(gen_qf_sentence_with_truth(rng, 2, false));
      else if (i == k0)
        alphas.push_back(gen_qf_sentence_with_truth(rng, 2, true));
      else
        alphas.push_back(gen_qf_sentence(rng, 2));
      betas.push_back(gen_qf_sentence(rng, 2));
    }
    bool got = tr0(stopping_disjunction(alphas, betas, 0));
    bool want = tr0(betas[k0]);
    r.check(got == want, "instance " + std::to_string(n) + " c=" + std::to_string(c) +
                             " k0=" + std::to_string(k0),
            std::string("tr0(stopping) = ") + (want ? "true" : "false"),
            got ? "true" : "false");
  }

  r.ms = sw.ms();
  return r;
}

// ---------------------------------------------------------------------------
// acdc
// ---------------------------------------------------------------------------

Report verify_acdc(const CorpusSpec& spec) {
  Stopwatch sw;
  Report r;
  r.suite = "acdc";
  r.seed = spec.seed;
  Rng rng(spec.seed);
  std::size_t instances = spec.instances ? spec.instances : 200;
  std::size_t c_cap = spec.c_max ? spec.c_max : 8;
  std::size_t out_of_range = 0;

  for (std::size_t n = 0; n < instances; ++n) {
    std::size_t c = rng.below(c_cap + 1);
    Nat tv;
    if (n % 10 == 0)
      tv = Nat(c) + 1 + rng.below(5);  // planted value above the range
    else
      tv = rng.below(c + 3);
    if (tv > c) ++out_of_range;
    Term t = gen_term_with_value(rng, tv, 2);
    SentenceSeq phis;
    for (std::size_t i = 0; i <= c; ++i) phis.push_back(gen_qf_sentence(rng, 2));
    bool lhs = tr0(acdc_lhs(t, phis));
    bool rhs = tv <= c && tr0(phis[tv.convert_to<std::size_t>()]);
    r.check(lhs == rhs, "instance " + std::to_string(n) + " c=" + std::to_string(c) +
                            " val(t)=" + str(tv),
            std::string("both sides ") + (rhs ? "true" : "false"), lhs ? "true" : "false");
  }

  r.notes.push_back("instances with val(t) > c: " + std::to_string(out_of_range));
  r.ms = sw.ms();
  return r;
}

// ---------------------------------------------------------------------------
// tr0 axioms
// ---------------------------------------------------------------------------

Report verify_tr0_axioms(const CorpusSpec& spec) {
  Stopwatch sw;
  Report r;
  r.suite = "tr0";
  r.seed = spec.seed;
  Rng rng(spec.seed);
  std::size_t instances = spec.instances ? spec.instances : 1000;

  for (std::size_t n = 0; n < instances; ++n) {
    Formula s = gen_qf_sentence(rng, 3);
    bool ok = true;
    std::string clause;
    switch (s.kind()) {
      case Formula::Kind::Eq:
        ok = tr0(s) == (val(s.term_left()) == val(s.term_right()));
        clause = "equation clause";
        break;
      case Formula::Kind::Not:
        ok = tr0(s) == !tr0(s.sub());
        clause = "negation clause";
        break;
      case Formula::Kind::Or:
        ok = tr0(s) == (tr0(s.left()) || tr0(s.right()));
        clause = "disjunction clause";
        break;
      case Formula::Kind::And:
        ok = tr0(s) == (tr0(s.left()) && tr0(s.right()));
        clause = "conjunction clause";
        break;
      default:
        break;
    }
    r.check(ok, "instance " + std::to_string(n) + ": " + print(s), clause + " holds",
            ok ? "holds" : "violated");

    // Double negation, derived from two negation clauses.
    bool dn = tr0(Formula::neg(Formula::neg(s))) == tr0(s);
    r.check(dn, "double negation of instance " + std::to_string(n), "equal verdict",
            dn ? "equal" : "different");

    // Extensionality: replace parameters by different closed terms with the
    // same values; the verdict must not move.
    Template t = trivialise(s);
    std::vector<Term> matched;
    matched.reserve(t.params().size());
    for (const auto& p : t.params()) matched.push_back(gen_term_with_value(rng, val(p), 2));
    Formula s2 = t.instantiate(matched);
    bool ext = tr0(s) == tr0(s2);
    r.check(ext, "value-matched variant of instance " + std::to_string(n) + ": " + print(s2),
            "equal verdict", ext ? "equal" : "different");
  }

  r.ms = sw.ms();
  return r;
}

// ---------------------------------------------------------------------------
// theta
// ---------------------------------------------------------------------------

Report verify_theta(const CorpusSpec& spec) {
  Stopwatch sw;
  Report r;
  r.suite = "theta";
  r.seed = spec.seed;
  std::size_t c_max = spec.c_max ? spec.c_max : 5000;

  Theta theta = theta_c(c_max);
  {
    auto fv = free_vars(theta.formula);
    bool one = fv.size() == 1 && *fv.begin() == theta.var;
    r.check(one, "theta free variables", "exactly the designated x", one ? "ok" : "wrong");
  }

  QfEvaluator ev;
  std::size_t skipped_quantified = 0;
  std::size_t decoded_sentences = 0;
  for (Nat i = 0; i <= c_max; ++i) {
    auto decoded = godel_decode(GodelCode{i});
    Assignment at{{theta.var, i}};
    bool is_sentence_code = false;
    if (decoded && std::holds_alternative<Formula>(*decoded)) {
      const Formula& f = std::get<Formula>(*decoded);
      if (is_sentence(f)) {
        is_sentence_code = true;
        if (!is_quantifier_free(f)) {
          ++skipped_quantified;
        } else {
          ++decoded_sentences;
          bool want = ev.truth(f, {});
          bool got = ev.truth(theta.formula, at);
          r.check(got == want, "i=" + str(i) + " decodes to " + print(f),
                  std::string("theta verdict ") + (want ? "true" : "false"),
                  got ? "true" : "false");
        }
      }
    }
    if (!is_sentence_code) {
      bool got = ev.truth(theta.formula, at);
      r.check(!got, "i=" + str(i) + " is not a sentence code", "theta verdict false",
              got ? "true" : "false");
    }
  }

  r.notes.push_back("skipped quantified decodes: " + std::to_string(skipped_quantified));
  r.notes.push_back("quantifier-free decoded sentences: " + std::to_string(decoded_sentences));
  r.ms = sw.ms();
  return r;
}

// ---------------------------------------------------------------------------
// saturation
// ---------------------------------------------------------------------------

std::vector<Formula> default_family() {
  VarId v0{0}, v1{1};
  Term tv0 = Term::var(v0), tv1 = Term::var(v1);
  Formula e1 = Formula::eq(tv0, tv1);
  Formula e2 = Formula::eq(tv0, Term::succ(tv1));
  Formula e3 = Formula::eq(Term::add(tv0, tv1), Term::add(tv1, tv0));
  Formula e4 = Formula::eq(Term::mul(tv0, tv0), tv0);
  Formula e5 = Formula::eq(Term::zero(), Term::zero());
  Formula e6 = Formula::eq(Term::succ(Term::zero()), Term::zero());
  Formula e7 = Formula::eq(tv0, numeral(2));
  Formula e8 = Formula::eq(Term::add(Term::succ(Term::zero()), Term::succ(Term::zero())),
                           numeral(2));
  Formula e9 = Formula::eq(tv0, tv0);
  Formula n1 = Formula::neg(e1);
  Formula n2 = Formula::neg(e4);
  Formula n3 = Formula::neg(e2);
  Formula n5 = Formula::neg(e5);
  Formula n6 = Formula::neg(e6);
  Formula n8 = Formula::neg(e8);
  Formula o1 = Formula::disj(e1, e2);
  Formula o2 = Formula::disj(n1, e3);
  Formula o3 = Formula::disj(e5, e6);
  Formula o4 = Formula::disj(e6, e8);
  Formula o5 = Formula::disj(e4, e2);
  Formula a1 = Formula::conj(e1, e3);
  Formula a2 = Formula::conj(e5, e8);
  Formula a3 = Formula::conj(e5, e6);
  Formula x1 = Formula::exists(v0, e1);
  Formula x2 = Formula::exists(v1, e2);
  Formula x3 = Formula::exists(v0, e7);
  Formula x4 = Formula::exists(v0, e4);
  Formula x5 = Formula::exists(v0, e9);
  Formula u1 = Formula::forall(v1, o1);
  Formula u2 = Formula::forall(v0, e9);
  return {e1, e2, e3, e4, e5, e6, e7, e8, e9, n1, n2, n3, n5, n6, n8,
          o1, o2, o3, o4, o5, a1, a2, a3, x1, x2, x3, x4, x5, u1, u2};
}

Domain default_domain() { return Domain::range(0, 7); }

Report verify_saturation(const CorpusSpec& spec) {
  Stopwatch sw;
  Report r;
  r.suite = "saturation";
  r.seed = spec.seed;
  std::vector<Formula> family = spec.family.empty() ? default_family() : spec.family;
  Domain domain = spec.domain.empty() ? default_domain() : spec.domain;

  std::vector<Formula> seed_truths;
  for (const auto& f : family)
    if (is_sentence(f) && is_quantifier_free(f) && tr0(f)) seed_truths.push_back(f);

  std::vector<std::size_t> stage_sizes;
  PartialSatPredicate S = saturate(family, seed_truths, {}, domain, &stage_sizes);
  r.notes.push_back("family size: " + std::to_string(family.size()));
  r.notes.push_back("seed truths: " + std::to_string(seed_truths.size()));
  r.notes.push_back("pairs: " + std::to_string(S.size()));

  for (std::size_t i = 1; i < stage_sizes.size(); ++i) {
    if (stage_sizes[i] < stage_sizes[i - 1]) {
      r.check(false, "stage sizes", "monotone", "shrank at stage " + std::to_string(i));
    }
  }

  auto merge = [&r](const Report& sub, const std::string& label) {
    r.instances += sub.instances;
    r.passes += sub.passes;
    for (auto f : sub.failures) {
      f.input = label + ": " + f.input;
      r.failures.push_back(std::move(f));
    }
  };

  for (const auto& phi : family) merge(check_comp(S, phi), "comp");
  merge(check_extensionality(S), "ext");
  merge(check_agreement(S, seed_truths), "agree");

  for (const auto& phi : family) {
    if (!is_sentence(phi) || !is_quantifier_free(phi)) continue;
    bool in_s = S.contains(phi, {});
    bool want = tr0(phi);
    r.check(in_s == want, "oracle: " + print(phi),
            std::string("S(phi, {}) = tr0 = ") + (want ? "in" : "out"), in_s ? "in" : "out");
  }

  // Mutant: drop one equation pair; the compositional check must notice.
  {
    const Formula* victim = nullptr;
    Assignment victim_a;
    for (const auto& phi : family) {
      if (phi.kind() != Formula::Kind::Eq) continue;
      for (const auto& a : assignments_over(phi, domain)) {
        if (S.contains(phi, a)) {
          victim = &phi;
          victim_a = a;
          break;
        }
      }
      if (victim) break;
    }
    if (victim) {
      PartialSatPredicate corrupted(family, domain);
      SatPair drop{*victim, victim_a};
      for (const auto& p : S.pairs())
        if (!(p == drop)) corrupted.insert(p.formula, p.assignment);
      Report comp = check_comp(corrupted, *victim);
      r.check(!comp.pass(), "mutant: dropped pair " + print(drop),
              "comp check reports the hole", comp.pass() ? "unnoticed" : "reported");
    } else {
      r.check(false, "mutant: dropped pair", "an equation pair exists", "none found");
    }
  }

  r.ms = sw.ms();
  return r;
}

// ---------------------------------------------------------------------------
// iota
// ---------------------------------------------------------------------------

std::vector<ItbFormula> default_iota_gamma(std::size_t n) {
  std::vector<ItbFormula> out;
  if (n > 0) out.push_back(ItbFormula::lift(true_sentence()));
  if (n > 1)
    out.push_back(ItbFormula::lift(
        Formula::exists(VarId{0}, Formula::eq(Term::var(VarId{0}), Term::zero()))));
  if (n > 2)
    out.push_back(ItbFormula::idx_exists(
        IndexVarId{0}, ItbFormula::index_less(IndexVarId{0}, IndexVarId{0})));
  if (n > 3) out.push_back(ItbFormula::lift(false_sentence()));
  return out;
}

Formula default_iota_phi() { return Formula::eq(Term::var(VarId{0}), Term::var(VarId{0})); }

namespace {

// Number-variable base for the index-variable embedding, recomputed by the
// documented rule: one above every number variable in sight.
Nat iota_base(const ItbFormula& f, const Formula& phi, const std::vector<ItbFormula>& gamma);

// Straightforward reference expansion of the translation clauses: no memo,
// no numeral sharing, plain recursion. Used as the second route in the
// template comparison.
class IotaReference {
 public:
  IotaReference(Formula phi, std::vector<ItbFormula> gamma, Nat base)
      : phi_(std::move(phi)), gamma_(std::move(gamma)), base_(std::move(base)) {
    phi_var_ = *free_vars(phi_).begin();
    for (const auto& g : gamma_) codes_.push_back(itb_godel_encode(g).value);
  }

  Formula expand(const ItbFormula& f, const Nat& level) const {
    switch (f.kind()) {
      case ItbFormula::Kind::Eq:
        return Formula::eq(f.term_left(), f.term_right());
      case ItbFormula::Kind::IndexLess:
        return lt_formula(Term::var(VarId(base_ + f.index_left().index)),
                          Term::var(VarId(base_ + f.index_right().index)));
      case ItbFormula::Kind::TruthAt: {
        if (gamma_.empty()) return false_sentence();
        std::vector<Formula> outer;
        for (std::size_t i = 0; i < gamma_.size(); ++i) {
          Formula inner = false_sentence();
          bool first = true;
          for (Nat j = 0; j < level; ++j) {
            Formula clause = Formula::conj(
                Formula::conj(
                    Formula::eq(Term::var(VarId(base_ + f.truth_index().index)), numeral(j)),
                    subst_free_unchecked(phi_, phi_var_, numeral(j))),
                expand(gamma_[i], j));
            inner = first ? clause : Formula::disj(inner, clause);
            first = false;
          }
          outer.push_back(
              Formula::conj(Formula::eq(f.truth_arg(), numeral(codes_[i])), inner));
        }
        Formula out = outer.front();
        for (std::size_t i = 1; i < outer.size(); ++i) out = Formula::disj(out, outer[i]);
        return out;
      }
      case ItbFormula::Kind::Not:
        return Formula::neg(expand(f.sub(), level));
      case ItbFormula::Kind::Or:
        return Formula::disj(expand(f.left(), level), expand(f.right(), level));
      case ItbFormula::Kind::And:
        return Formula::conj(expand(f.left(), level), expand(f.right(), level));
      case ItbFormula::Kind::NumExists:
        return Formula::exists(f.num_var(), expand(f.body(), level));
      case ItbFormula::Kind::NumForall:
        return Formula::forall(f.num_var(), expand(f.body(), level));
      case ItbFormula::Kind::IdxExists: {
        VarId x(base_ + f.idx_var().index);
        return Formula::exists(x, Formula::conj(domain_at(Term::var(x), level),
                                                expand(f.body(), level)));
      }
      case ItbFormula::Kind::IdxForall: {
        VarId x(base_ + f.idx_var().index);
        return Formula::forall(x, Formula::imp(domain_at(Term::var(x), level),
                                               expand(f.body(), level)));
      }
    }
    return false_sentence();
  }

  // Arithmetic size recurrence for the same expansion; never builds a tree.
  Nat size(const ItbFormula& f, const Nat& level) const {
    switch (f.kind()) {
      case ItbFormula::Kind::Eq:
        return 1 + node_count(f.term_left()) + node_count(f.term_right());
      case ItbFormula::Kind::IndexLess:
        return 7;  // E z ((z + S(x)) = y)
      case ItbFormula::Kind::TruthAt: {
        if (gamma_.empty()) return 4;
        Nat arg_size = node_count(f.truth_arg());
        Nat total = gamma_.size() - 1;  // outer Or spine
        for (std::size_t i = 0; i < gamma_.size(); ++i) {
          Nat inner;
          if (level == 0) {
            inner = 4;  // ~(0 = 0)
          } else {
            inner = level - 1;  // inner Or spine
            for (Nat j = 0; j < level; ++j)
              inner += 2                      // two And nodes
                       + (1 + 1 + (j + 1))    // m(beta) = numeral(j)
                       + phi_size_at(j + 1)   // phi(numeral(j))
                       + size(gamma_[i], j);  // recursive translation
          }
          total += 1                             // And
                   + (1 + arg_size + codes_[i] + 1)  // arg = numeral(code)
                   + inner;
        }
        return total;
      }
      case ItbFormula::Kind::Not:
        return 1 + size(f.sub(), level);
      case ItbFormula::Kind::Or:
      case ItbFormula::Kind::And:
        return 1 + size(f.left(), level) + size(f.right(), level);
      case ItbFormula::Kind::NumExists:
      case ItbFormula::Kind::NumForall:
        return 1 + size(f.body(), level);
      case ItbFormula::Kind::IdxExists:
        return 2 + domain_size(level) + size(f.body(), level);
      case ItbFormula::Kind::IdxForall:
        return 3 + domain_size(level) + size(f.body(), level);
    }
    return 0;
  }

 private:
  Formula domain_at(const Term& x, const Nat& level) const {
    return Formula::conj(le_formula(x, level), subst_free_unchecked(phi_, phi_var_, x));
  }

  // phi with its variable replaced by a term of the given size.
  Nat phi_size_at(const Nat& term_size) const {
    Nat base = node_count(phi_);
    Nat occ = count_var(phi_);
    return base + occ * (term_size - 1);
  }

  Nat count_var(const Formula& f) const {
    switch (f.kind()) {
      case Formula::Kind::Eq:
        return count_var_term(f.term_left()) + count_var_term(f.term_right());
      case Formula::Kind::Not:
        return count_var(f.sub());
      case Formula::Kind::Or:
      case Formula::Kind::And:
        return count_var(f.left()) + count_var(f.right());
      case Formula::Kind::Exists:
      case Formula::Kind::Forall:
        return f.quant_var() == phi_var_ ? 0 : count_var(f.body());
    }
    return 0;
  }

  Nat count_var_term(const Term& t) const {
    switch (t.kind()) {
      case Term::Kind::Var:
        return t.var_id() == phi_var_ ? 1 : 0;
      case Term::Kind::Zero:
        return 0;
      case Term::Kind::Succ:
        return count_var_term(t.child());
      case Term::Kind::Add:
      case Term::Kind::Mul:
        return count_var_term(t.left()) + count_var_term(t.right());
    }
    return 0;
  }

  // d_level(x) with |x| = 1: And + (E + Eq + Add + z + x + numeral) + phi(x)
  Nat domain_size(const Nat& level) const {
    return 1 + (1 + 1 + 1 + 1 + 1 + (level + 1)) + phi_size_at(1);
  }

  Formula phi_;
  VarId phi_var_;
  std::vector<ItbFormula> gamma_;
  std::vector<Nat> codes_;
  Nat base_;
};

Nat iota_base(const ItbFormula& f, const Formula& phi, const std::vector<ItbFormula>& gamma) {
  // Mirrors the translator's rule; kept here so the suite states it once in
  // checkable form.
  Nat base = 0;
  auto bump = [&](const VarId& v) {
    if (v.index + 1 > base) base = v.index + 1;
  };
  for (const auto& v : free_vars(phi)) bump(v);
  for (const auto& v : bound_vars(phi)) bump(v);
  std::function<void(const ItbFormula&)> scan = [&](const ItbFormula& g) {
    switch (g.kind()) {
      case ItbFormula::Kind::Eq:
        for (const auto& v : free_vars(g.term_left())) bump(v);
        for (const auto& v : free_vars(g.term_right())) bump(v);
        break;
      case ItbFormula::Kind::IndexLess:
        break;
      case ItbFormula::Kind::TruthAt:
        for (const auto& v : free_vars(g.truth_arg())) bump(v);
        break;
      case ItbFormula::Kind::Not:
        scan(g.sub());
        break;
      case ItbFormula::Kind::Or:
      case ItbFormula::Kind::And:
        scan(g.left());
        scan(g.right());
        break;
      case ItbFormula::Kind::NumExists:
      case ItbFormula::Kind::NumForall:
        bump(g.num_var());
        scan(g.body());
        break;
      case ItbFormula::Kind::IdxExists:
      case ItbFormula::Kind::IdxForall:
        scan(g.body());
        break;
    }
  };
  for (const auto& g : gamma) scan(g);
  scan(f);
  return base;
}

}  // namespace

Report verify_iota(const CorpusSpec& spec) {
  Stopwatch sw;
  Report r;
  r.suite = "iota";
  r.seed = spec.seed;
  // Sizes outside the construction cap fall back to the default; the shared
  // CorpusSpec also feeds suites with much larger size ranges.
  Nat a_max = (spec.c_max >= 1 && spec.c_max <= 4) ? Nat(spec.c_max) : Nat(3);
  std::size_t n_max = (spec.instances >= 1 && spec.instances <= 4) ? spec.instances : 3;

  Formula phi = default_iota_phi();

  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<ItbFormula> gamma = default_iota_gamma(n);
    for (Nat a = 0; a <= a_max; ++a) {
      std::string tag = " a=" + str(a) + " n=" + std::to_string(n);

      // Arithmetical atoms pass through unchanged at every level.
      Formula atom = Formula::eq(Term::add(Term::succ(Term::zero()), Term::zero()), numeral(1));
      Formula atom_tr = iota_translate(ItbFormula::lift(atom), a, phi, gamma);
      r.check(atom_tr == atom, "arithmetical atom" + tag, print(atom), print(atom_tr));

      // Every gamma biconditional against the reference expansion and the
      // size recurrence.
      IndexVarId alpha{9};
      for (std::size_t k = 0; k < gamma.size(); ++k) {
        ItbFormula bik = itb_biconditional(gamma[k], alpha);
        Formula got = iota_translate(bik, a, phi, gamma);
        IotaReference ref(phi, gamma, iota_base(bik, phi, gamma));
        Formula want = ref.expand(bik, a);
        r.check(got == want, "biconditional template k=" + std::to_string(k) + tag,
                "reference expansion", got == want ? "equal" : "differs");
        Nat want_size = ref.size(bik, a);
        Nat got_size = node_count(got);
        r.check(got_size == want_size, "size recurrence k=" + std::to_string(k) + tag,
                str(want_size), str(got_size));
      }

      // Index quantifiers relativise through the domain formula: translating
      // the relativised body equals rebuilding with the translated parts.
      {
        ItbFormula body = ItbFormula::truth_at(IndexVarId{1}, Term::zero());
        ItbFormula psi = ItbFormula::idx_forall(IndexVarId{1}, body);
        ItbFormula rel = relativize(psi, IndexVarId{0});
        Formula got = iota_translate(rel, a, phi, gamma);
        Nat base = iota_base(rel, phi, gamma);
        IotaReference ref(phi, gamma, base);
        VarId x1(base + 1);
        Formula expected = Formula::forall(
            x1,
            Formula::imp(
                Formula::conj(le_formula(Term::var(x1), a),
                              subst_free_unchecked(phi, *free_vars(phi).begin(),
                                                   Term::var(x1))),
                Formula::imp(lt_formula(Term::var(x1), Term::var(VarId(base + 0))),
                             ref.expand(body, a))));
        r.check(got == expected, "relativized index quantifier" + tag, "bounded template",
                got == expected ? "equal" : "differs");
      }

      // Wrong-range mutant: widening the inner disjunction range to j <= a
      // must change the template whenever the range is inhabited.
      if (a >= 1 && !gamma.empty()) {
        ItbFormula t_at = ItbFormula::idx_forall(
            IndexVarId{0}, ItbFormula::truth_at(IndexVarId{0}, Term::zero()));
        Formula got = iota_translate(t_at, a, phi, gamma);
        Formula wrong = iota_translate(t_at, a + 1, phi, gamma);
        r.check(!(got == wrong), "mutant: inner range widened" + tag, "templates differ",
                got == wrong ? "equal" : "differ");
      }
    }
  }

  // Level 0 collapses the truth clause to the false sentence.
  {
    std::vector<ItbFormula> gamma = default_iota_gamma(1);
    Formula got =
        iota_translate(ItbFormula::truth_at(IndexVarId{0}, Term::zero()), 0, phi, gamma);
    Formula want = Formula::conj(
        Formula::eq(Term::zero(), numeral(itb_godel_encode(gamma[0]).value)), false_sentence());
    r.check(got == want, "truth clause at a=0", print(want), print(got));
  }

  r.ms = sw.ms();
  return r;
}

// ---------------------------------------------------------------------------
// engines
// ---------------------------------------------------------------------------

namespace {

PropFormula gen_prop(Rng& rng, int depth, unsigned atoms) {
  if (depth <= 0 || rng.below(3) == 0) return PropFormula::atom(static_cast<AtomId>(rng.below(atoms)));
  switch (rng.below(3)) {
    case 0:
      return PropFormula::neg(gen_prop(rng, depth - 1, atoms));
    case 1:
      return PropFormula::disj(gen_prop(rng, depth - 1, atoms), gen_prop(rng, depth - 1, atoms));
    default:
      return PropFormula::conj(gen_prop(rng, depth - 1, atoms), gen_prop(rng, depth - 1, atoms));
  }
}

}  // namespace

Report verify_engines(const CorpusSpec& spec) {
  Stopwatch sw;
  Report r;
  r.suite = "engines";
  r.seed = spec.seed;
  Rng rng(spec.seed);
  std::size_t instances = spec.instances ? spec.instances : 200;

  for (std::size_t n = 0; n < instances; ++n) {
    PropFormula p = gen_prop(rng, 5, 16);
    // Bias towards genuine tautologies now and then.
    if (n % 4 == 0) p = PropFormula::disj(p, PropFormula::neg(p));
    bool tt = is_tautology_truth_table(p);
    bool dp = is_tautology_dpll(p);
    std::string text = export_dimacs(to_cnf_tseitin(PropFormula::neg(p)));
    bool dx = !dpll_sat(parse_dimacs(text)).has_value();
    r.check(tt == dp && dp == dx, "instance " + std::to_string(n),
            std::string("all engines ") + (tt ? "tautology" : "refutable"),
            std::string("tt=") + (tt ? "t" : "f") + " dpll=" + (dp ? "t" : "f") + " dimacs=" +
                (dx ? "t" : "f"));
  }

  r.ms = sw.ms();
  return r;
}

// ---------------------------------------------------------------------------
// Suite registry
// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "prop33", "cor34", "thm32", "acdc", "tr0", "theta", "saturation", "iota", "engines"};
  return names;
}

bool is_suite_name(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

Report run_suite(const std::string& name, const CorpusSpec& spec) {
  if (name == "prop33") return verify_prop33(spec);
  if (name == "cor34") return verify_cor34(spec);
  if (name == "thm32") return verify_thm32(spec);
  if (name == "acdc") return verify_acdc(spec);
  if (name == "tr0") return verify_tr0_axioms(spec);
  if (name == "theta") return verify_theta(spec);
  if (name == "saturation") return verify_saturation(spec);
  if (name == "iota") return verify_iota(spec);
  if (name == "engines") return verify_engines(spec);
  throw std::invalid_argument("run_suite: unknown suite " + name);
}

std::vector<Report> run_all(const CorpusSpec& spec, std::size_t jobs) {
  const auto& names = suite_names();
  std::vector<Report> out(names.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < names.size(); ++i) out[i] = run_suite(names[i], spec);
    return out;
  }
  std::vector<std::future<Report>> futures;
  futures.reserve(names.size());
  for (const auto& name : names)
    futures.push_back(std::async(std::launch::async, [&spec, name] {
      return run_suite(name, spec);
    }));
  for (std::size_t i = 0; i < futures.size(); ++i) out[i] = futures[i].get();
  return out;
}

}  // namespace ptk
