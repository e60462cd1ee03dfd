#include "ptk/eval.hpp"

#include <unordered_map>
#include <unordered_set>

namespace ptk {

const char* to_string(Truth3 t) {
  switch (t) {
    case Truth3::True:
      return "true";
    case Truth3::False:
      return "false";
    case Truth3::Unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

// Values of closed subterms are cached by node identity. Shared numeral
// chains (as produced by the Theta construction) then cost O(length) across
// an entire run instead of O(length) per disjunct.
class TermValueCache {
 public:
  Nat eval(const Term& t, const Assignment& a) {
    if (!t.has_var()) {
      auto it = closed_.find(t.id());
      if (it != closed_.end()) return it->second.second;
      Nat v = compute(t, a);
      closed_.emplace(t.id(), std::make_pair(t, v));
      return v;
    }
    return compute(t, a);
  }

 private:
  Nat compute(const Term& t, const Assignment& a) {
    switch (t.kind()) {
      case Term::Kind::Var: {
        auto it = a.find(t.var_id());
        if (it == a.end())
          throw std::invalid_argument("term_eval: unassigned variable v" +
                                      nat_str(t.var_id().index));
        return it->second;
      }
      case Term::Kind::Zero:
        return 0;
      case Term::Kind::Succ: {
        // Successor chains are evaluated iteratively; numerals outgrow the
        // call stack long before they outgrow memory.
        Nat wraps = 0;
        const Term* cur = &t;
        while (cur->kind() == Term::Kind::Succ) {
          ++wraps;
          cur = &cur->child();
        }
        return eval(*cur, a) + wraps;
      }
      case Term::Kind::Add:
        return eval(t.left(), a) + eval(t.right(), a);
      case Term::Kind::Mul:
        return eval(t.left(), a) * eval(t.right(), a);
    }
    return 0;
  }

  // The cached Term pins the node so pointer keys cannot dangle.
  std::unordered_map<const void*, std::pair<Term, Nat>> closed_;
};

bool qf_truth_impl(const Formula& f, const Assignment& a, TermValueCache& cache) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return cache.eval(f.term_left(), a) == cache.eval(f.term_right(), a);
    case Formula::Kind::Not:
      return !qf_truth_impl(f.sub(), a, cache);
    case Formula::Kind::Or:
      return qf_truth_impl(f.left(), a, cache) || qf_truth_impl(f.right(), a, cache);
    case Formula::Kind::And:
      return qf_truth_impl(f.left(), a, cache) && qf_truth_impl(f.right(), a, cache);
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      throw std::invalid_argument("qf_truth: quantifier in quantifier-free evaluation");
  }
  return false;
}

Truth3 kleene_not(Truth3 t) {
  if (t == Truth3::True) return Truth3::False;
  if (t == Truth3::False) return Truth3::True;
  return Truth3::Unknown;
}

Truth3 std_truth_impl(const Formula& f, Assignment& env, const Nat& bound,
                      TermValueCache& cache) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return cache.eval(f.term_left(), env) == cache.eval(f.term_right(), env) ? Truth3::True
                                                                               : Truth3::False;
    case Formula::Kind::Not:
      return kleene_not(std_truth_impl(f.sub(), env, bound, cache));
    case Formula::Kind::Or: {
      Truth3 l = std_truth_impl(f.left(), env, bound, cache);
      if (l == Truth3::True) return Truth3::True;
      Truth3 r = std_truth_impl(f.right(), env, bound, cache);
      if (r == Truth3::True) return Truth3::True;
      if (l == Truth3::False && r == Truth3::False) return Truth3::False;
      return Truth3::Unknown;
    }
    case Formula::Kind::And: {
      Truth3 l = std_truth_impl(f.left(), env, bound, cache);
      if (l == Truth3::False) return Truth3::False;
      Truth3 r = std_truth_impl(f.right(), env, bound, cache);
      if (r == Truth3::False) return Truth3::False;
      if (l == Truth3::True && r == Truth3::True) return Truth3::True;
      return Truth3::Unknown;
    }
    case Formula::Kind::Exists: {
      const VarId& v = f.quant_var();
      auto old = env.find(v);
      Nat saved;
      bool had = old != env.end();
      if (had) saved = old->second;
      Truth3 res = Truth3::Unknown;
      for (Nat w = 0; w <= bound; ++w) {
        env[v] = w;
        if (std_truth_impl(f.body(), env, bound, cache) == Truth3::True) {
          res = Truth3::True;
          break;
        }
      }
      if (had)
        env[v] = saved;
      else
        env.erase(v);
      return res;
    }
    case Formula::Kind::Forall: {
      const VarId& v = f.quant_var();
      auto old = env.find(v);
      Nat saved;
      bool had = old != env.end();
      if (had) saved = old->second;
      Truth3 res = Truth3::Unknown;
      for (Nat w = 0; w <= bound; ++w) {
        env[v] = w;
        if (std_truth_impl(f.body(), env, bound, cache) == Truth3::False) {
          res = Truth3::False;
          break;
        }
      }
      if (had)
        env[v] = saved;
      else
        env.erase(v);
      return res;
    }
  }
  return Truth3::Unknown;
}

}  // namespace

Nat val(const Term& t) {
  if (t.has_var()) throw std::invalid_argument("val: term is not closed");
  TermValueCache cache;
  return cache.eval(t, {});
}

Nat term_eval(const Term& t, const Assignment& a) {
  TermValueCache cache;
  return cache.eval(t, a);
}

bool tr0(const Formula& s) {
  if (!is_quantifier_free(s)) throw std::invalid_argument("tr0: sentence has quantifiers");
  if (!is_sentence(s)) throw std::invalid_argument("tr0: formula has free variables");
  TermValueCache cache;
  return qf_truth_impl(s, {}, cache);
}

bool qf_truth(const Formula& f, const Assignment& a) {
  if (!is_quantifier_free(f)) throw std::invalid_argument("qf_truth: formula has quantifiers");
  TermValueCache cache;
  return qf_truth_impl(f, a, cache);
}

Truth3 std_truth(const Formula& s, const Nat& bound) {
  if (!is_sentence(s)) throw std::invalid_argument("std_truth: formula is not a sentence");
  if (is_quantifier_free(s)) return tr0(s) ? Truth3::True : Truth3::False;
  Assignment env;
  TermValueCache cache;
  return std_truth_impl(s, env, bound, cache);
}

struct QfEvaluator::Impl {
  TermValueCache cache;
};

QfEvaluator::QfEvaluator() : impl_(std::make_unique<Impl>()) {}
QfEvaluator::~QfEvaluator() = default;
QfEvaluator::QfEvaluator(QfEvaluator&&) noexcept = default;
QfEvaluator& QfEvaluator::operator=(QfEvaluator&&) noexcept = default;

Nat QfEvaluator::term_value(const Term& t, const Assignment& a) {
  return impl_->cache.eval(t, a);
}

bool QfEvaluator::truth(const Formula& f, const Assignment& a) {
  return qf_truth_impl(f, a, impl_->cache);
}

// ---------------------------------------------------------------------------
// Partial compositional truth predicate checker
// ---------------------------------------------------------------------------

namespace {

std::vector<Formula> direct_instances(const Formula& f, const Nat& witness_bound) {
  std::vector<Formula> out;
  switch (f.kind()) {
    case Formula::Kind::Eq:
      break;
    case Formula::Kind::Not:
      out.push_back(f.sub());
      break;
    case Formula::Kind::Or:
    case Formula::Kind::And:
      out.push_back(f.left());
      out.push_back(f.right());
      break;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      for (Nat k = 0; k <= witness_bound; ++k)
        out.push_back(subst_closed(f.body(), f.quant_var(), numeral(k)));
      break;
  }
  return out;
}

}  // namespace

Report check_partial_truth_predicate(const std::vector<Formula>& truths,
                                     const std::vector<Formula>& probe,
                                     const PartialTruthCheckOptions& opts) {
  Report report;
  report.suite = "partial-truth-predicate";

  std::unordered_set<Formula, FormulaHash> truth_set(truths.begin(), truths.end());
  std::vector<Formula> carrier;
  std::unordered_set<Formula, FormulaHash> seen;
  for (const auto& lists : {&probe, &truths})
    for (const auto& f : *lists) {
      if (!is_sentence(f))
        throw std::invalid_argument("check_partial_truth_predicate: non-sentence input " +
                                    print(f));
      if (seen.insert(f).second) carrier.push_back(f);
    }

  auto holds = [&](const Formula& f) { return truth_set.count(f) != 0; };

  // Carrier closure under direct-subformula instances of members.
  for (const auto& f : truths) {
    for (const auto& inst : direct_instances(f, opts.witness_bound)) {
      report.check(seen.count(inst) != 0, print(f), "instance in carrier: " + print(inst),
                   seen.count(inst) ? "present" : "missing");
    }
  }

  // Compositional clauses at every carrier sentence.
  for (const auto& f : carrier) {
    bool tf = holds(f);
    switch (f.kind()) {
      case Formula::Kind::Eq: {
        bool want = val(f.term_left()) == val(f.term_right());
        report.check(tf == want, print(f), std::string("T iff values equal: ") + (want ? "in" : "out"),
                     tf ? "in" : "out");
        break;
      }
      case Formula::Kind::Not:
        report.check(tf == !holds(f.sub()), print(f), "T(~p) iff not T(p)",
                     tf ? "in" : "out");
        break;
      case Formula::Kind::Or:
        report.check(tf == (holds(f.left()) || holds(f.right())), print(f),
                     "T(p | q) iff T(p) or T(q)", tf ? "in" : "out");
        break;
      case Formula::Kind::And:
        report.check(tf == (holds(f.left()) && holds(f.right())), print(f),
                     "T(p & q) iff T(p) and T(q)", tf ? "in" : "out");
        break;
      case Formula::Kind::Exists: {
        bool witness = false;
        for (Nat k = 0; k <= opts.witness_bound && !witness; ++k)
          witness = holds(subst_closed(f.body(), f.quant_var(), numeral(k)));
        report.check(tf == witness, print(f), "T(E v p) iff some numeral instance in T",
                     tf ? "in" : "out");
        break;
      }
      case Formula::Kind::Forall: {
        bool all = true;
        for (Nat k = 0; k <= opts.witness_bound && all; ++k)
          all = holds(subst_closed(f.body(), f.quant_var(), numeral(k)));
        report.check(tf == all, print(f), "T(A v p) iff all numeral instances in T",
                     tf ? "in" : "out");
        break;
      }
    }
  }

  // Extensionality across carrier pairs: equal skeleton + equal parameter
  // values must give the same verdict.
  std::unordered_map<Formula, std::map<std::vector<Nat>, std::vector<Formula>>, FormulaHash>
      buckets;
  for (const auto& f : carrier) {
    Template t = trivialise(f);
    std::vector<Nat> values;
    values.reserve(t.params().size());
    for (const auto& p : t.params()) values.push_back(val(p));
    buckets[t.skeleton()][std::move(values)].push_back(f);
  }
  for (const auto& [skel, groups] : buckets) {
    (void)skel;
    for (const auto& [values, members] : groups) {
      (void)values;
      bool first = holds(members.front());
      for (std::size_t i = 1; i < members.size(); ++i) {
        report.check(holds(members[i]) == first,
                     print(members[i]) + " vs " + print(members.front()),
                     std::string("extensionally equal verdict: ") + (first ? "in" : "out"),
                     holds(members[i]) ? "in" : "out");
      }
    }
  }

  return report;
}

}  // namespace ptk
