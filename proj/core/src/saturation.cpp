#include "ptk/saturation.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "ptk/eval.hpp"

namespace ptk {

Domain::Domain(std::vector<Nat> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("Domain: empty");
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

Domain Domain::range(const Nat& lo, const Nat& hi) {
  if (hi < lo) throw std::invalid_argument("Domain::range: empty range");
  std::vector<Nat> v;
  for (Nat x = lo; x <= hi; ++x) v.push_back(x);
  return Domain(std::move(v));
}

std::size_t SatPairHash::operator()(const SatPair& p) const {
  std::size_t h = p.formula.hash();
  for (const auto& [var, value] : p.assignment) {
    hash_combine(h, hash_nat(var.index));
    hash_combine(h, hash_nat(value));
  }
  return h;
}

std::string print(const Assignment& a) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [var, value] : a) {
    if (!first) os << ", ";
    first = false;
    os << 'v' << var.index << "->" << value;
  }
  os << '}';
  return os.str();
}

std::string print(const SatPair& p) { return print(p.formula) + " @ " + print(p.assignment); }

PartialSatPredicate::PartialSatPredicate(std::vector<Formula> family, Domain domain)
    : family_(std::move(family)), domain_(std::move(domain)) {}

namespace {

Assignment restrict_to(const Assignment& a, const std::set<VarId>& vars) {
  Assignment out;
  for (const auto& v : vars) {
    auto it = a.find(v);
    if (it != a.end()) out.emplace(v, it->second);
  }
  return out;
}

}  // namespace

bool PartialSatPredicate::contains(const Formula& f, const Assignment& a) const {
  return pairs_.count(SatPair{f, restrict_to(a, free_vars(f))}) != 0;
}

void PartialSatPredicate::insert(const Formula& f, const Assignment& a) {
  pairs_.insert(SatPair{f, restrict_to(a, free_vars(f))});
}

// ---------------------------------------------------------------------------
// Similarity classes and order
// ---------------------------------------------------------------------------

namespace {

std::size_t connective_count(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return 0;
    case Formula::Kind::Not:
      return 1 + connective_count(f.sub());
    case Formula::Kind::Or:
    case Formula::Kind::And:
      return 1 + connective_count(f.left()) + connective_count(f.right());
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      return 1 + connective_count(f.body());
  }
  return 0;
}

std::vector<Formula> direct_subformulas(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return {};
    case Formula::Kind::Not:
      return {f.sub()};
    case Formula::Kind::Or:
    case Formula::Kind::And:
      return {f.left(), f.right()};
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      return {f.body()};
  }
  return {};
}

}  // namespace

std::vector<SimilarityClass> similarity_classes(const std::vector<Formula>& phis) {
  std::vector<SimilarityClass> classes;
  std::unordered_map<Formula, std::size_t, FormulaHash> by_skeleton;
  for (const auto& phi : phis) {
    Formula skel = trivialise(phi).skeleton();
    auto it = by_skeleton.find(skel);
    if (it == by_skeleton.end()) {
      it = by_skeleton.emplace(skel, classes.size()).first;
      classes.push_back(SimilarityClass{skel, {}, connective_count(skel)});
    }
    auto& members = classes[it->second].members;
    if (std::find(members.begin(), members.end(), phi) == members.end())
      members.push_back(phi);
  }
  return classes;
}

ClassOrder::ClassOrder(const std::vector<SimilarityClass>& classes,
                       std::vector<std::vector<bool>> leq)
    : leq_(std::move(leq)) {
  std::size_t n = leq_.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && leq_[a][b] && leq_[b][a])
        throw std::logic_error("ClassOrder: weak antisymmetry violated");
  // Processing order: ascending connective count, original index as the tie
  // break. Subformula classes always have strictly fewer connectives, so this
  // is a linear extension of the order.
  topo_.resize(n);
  for (std::size_t i = 0; i < n; ++i) topo_[i] = i;
  std::stable_sort(topo_.begin(), topo_.end(), [&](std::size_t a, std::size_t b) {
    return classes[a].connective_count < classes[b].connective_count;
  });
}

bool ClassOrder::is_minimal(std::size_t c) const {
  for (std::size_t a = 0; a < leq_.size(); ++a)
    if (a != c && leq_[a][c]) return false;
  return true;
}

ClassOrder class_order(const std::vector<SimilarityClass>& classes) {
  std::size_t n = classes.size();
  std::unordered_map<Formula, std::size_t, FormulaHash> by_skeleton;
  for (std::size_t i = 0; i < n; ++i) by_skeleton.emplace(classes[i].skeleton, i);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& member : classes[j].members) {
      for (const auto& sub : direct_subformulas(member)) {
        Formula skel = trivialise(sub).skeleton();
        auto it = by_skeleton.find(skel);
        if (it != by_skeleton.end()) leq[it->second][j] = true;
      }
    }
  }
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (leq[a][k])
        for (std::size_t b = 0; b < n; ++b)
          if (leq[k][b]) leq[a][b] = true;
  return ClassOrder(classes, std::move(leq));
}

// ---------------------------------------------------------------------------
// Assignment enumeration
// ---------------------------------------------------------------------------

std::vector<Assignment> assignments_over(const Formula& f, const Domain& D) {
  std::vector<VarId> vars;
  for (const auto& v : free_vars(f)) vars.push_back(v);
  std::vector<Assignment> out;
  std::vector<std::size_t> odo(vars.size(), 0);
  while (true) {
    Assignment a;
    for (std::size_t i = 0; i < vars.size(); ++i) a.emplace(vars[i], D.values()[odo[i]]);
    out.push_back(std::move(a));
    std::size_t i = 0;
    for (; i < vars.size(); ++i) {
      if (++odo[i] < D.size()) break;
      odo[i] = 0;
    }
    if (i == vars.size()) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// S^0 and the staged closure
// ---------------------------------------------------------------------------

namespace {

// Parameter-value fingerprints grouped by skeleton; two pairs are
// extensionally equivalent exactly when they land on the same entry.
class ExtIndex {
 public:
  void add(const Formula& skeleton, std::vector<Nat> values) {
    index_[skeleton].insert(std::move(values));
  }

  bool matches(const Formula& skeleton, const std::vector<Nat>& values) const {
    auto it = index_.find(skeleton);
    return it != index_.end() && it->second.count(values) != 0;
  }

 private:
  std::unordered_map<Formula, std::set<std::vector<Nat>>, FormulaHash> index_;
};

std::vector<Nat> param_values(const Template& t, const Assignment& a) {
  std::vector<Nat> out;
  out.reserve(t.params().size());
  for (const auto& p : t.params()) out.push_back(term_eval(p, a));
  return out;
}

}  // namespace

PartialSatPredicate build_s0(const std::vector<Formula>& phis,
                             const std::vector<Formula>& seed_truths,
                             const PartialSatPredicate& prev, const Domain& D) {
  PartialSatPredicate out(phis, D);

  ExtIndex seed_index;
  for (const auto& s : seed_truths) {
    if (!is_sentence(s))
      throw std::invalid_argument("build_s0: seed entry is not a sentence: " + print(s));
    Template t = trivialise(s);
    seed_index.add(t.skeleton(), param_values(t, {}));
  }
  ExtIndex prev_index;
  for (const auto& pair : prev.pairs()) {
    Template t = trivialise(pair.formula);
    prev_index.add(t.skeleton(), param_values(t, pair.assignment));
  }

  for (const auto& phi : phis) {
    Template t = trivialise(phi);
    for (const auto& a : assignments_over(phi, D)) {
      std::vector<Nat> values = param_values(t, a);
      bool in = prev_index.matches(t.skeleton(), values) ||
                seed_index.matches(t.skeleton(), values);
      if (!in && phi.kind() == Formula::Kind::Eq)
        in = term_eval(phi.term_left(), a) == term_eval(phi.term_right(), a);
      if (in) out.insert(phi, a);
    }
  }
  return out;
}

PartialSatPredicate saturate(const std::vector<Formula>& phis,
                             const std::vector<Formula>& seed_truths,
                             const PartialSatPredicate& prev, const Domain& D,
                             std::vector<std::size_t>* stage_sizes) {
  PartialSatPredicate S = build_s0(phis, seed_truths, prev, D);
  if (stage_sizes) stage_sizes->push_back(S.size());

  auto classes = similarity_classes(phis);
  ClassOrder order = class_order(classes);

  for (std::size_t ci : order.topo_order()) {
    if (order.is_minimal(ci)) continue;
    for (const auto& phi : classes[ci].members) {
      for (const auto& a : assignments_over(phi, D)) {
        if (S.contains(phi, a)) continue;
        bool in = false;
        switch (phi.kind()) {
          case Formula::Kind::Eq:
            break;  // equation classes are minimal; handled by S^0
          case Formula::Kind::Not:
            in = !S.contains(phi.sub(), a);
            break;
          case Formula::Kind::Or:
            in = S.contains(phi.left(), a) || S.contains(phi.right(), a);
            break;
          case Formula::Kind::And:
            in = S.contains(phi.left(), a) && S.contains(phi.right(), a);
            break;
          case Formula::Kind::Exists: {
            for (const auto& d : D.values()) {
              Assignment b = a;
              b[phi.quant_var()] = d;
              if (S.contains(phi.body(), b)) {
                in = true;
                break;
              }
            }
            break;
          }
          case Formula::Kind::Forall: {
            in = true;
            for (const auto& d : D.values()) {
              Assignment b = a;
              b[phi.quant_var()] = d;
              if (!S.contains(phi.body(), b)) {
                in = false;
                break;
              }
            }
            break;
          }
        }
        if (in) S.insert(phi, a);
      }
    }
    if (stage_sizes) stage_sizes->push_back(S.size());
  }
  return S;
}

// ---------------------------------------------------------------------------
// Checkers
// ---------------------------------------------------------------------------

Report check_comp(const PartialSatPredicate& S, const Formula& phi) {
  Report report;
  report.suite = "comp";
  const Domain& D = S.domain();
  for (const auto& a : assignments_over(phi, D)) {
    bool have = S.contains(phi, a);
    bool want = false;
    const char* clause = "";
    switch (phi.kind()) {
      case Formula::Kind::Eq:
        want = term_eval(phi.term_left(), a) == term_eval(phi.term_right(), a);
        clause = "S(s=t) iff values equal";
        break;
      case Formula::Kind::Not:
        want = !S.contains(phi.sub(), a);
        clause = "S(~p) iff not S(p)";
        break;
      case Formula::Kind::Or:
        want = S.contains(phi.left(), a) || S.contains(phi.right(), a);
        clause = "S(p | q) iff S(p) or S(q)";
        break;
      case Formula::Kind::And:
        want = S.contains(phi.left(), a) && S.contains(phi.right(), a);
        clause = "S(p & q) iff S(p) and S(q)";
        break;
      case Formula::Kind::Exists: {
        clause = "S(E v p) iff some domain variant in S";
        for (const auto& d : D.values()) {
          Assignment b = a;
          b[phi.quant_var()] = d;
          if (S.contains(phi.body(), b)) {
            want = true;
            break;
          }
        }
        break;
      }
      case Formula::Kind::Forall: {
        clause = "S(A v p) iff all domain variants in S";
        want = true;
        for (const auto& d : D.values()) {
          Assignment b = a;
          b[phi.quant_var()] = d;
          if (!S.contains(phi.body(), b)) {
            want = false;
            break;
          }
        }
        break;
      }
    }
    report.check(have == want, print(SatPair{phi, a}),
                 std::string(clause) + ": " + (want ? "in" : "out"), have ? "in" : "out");
  }
  return report;
}

Report check_extensionality(const PartialSatPredicate& S) {
  Report report;
  report.suite = "extensionality";
  std::unordered_map<Formula, std::map<std::vector<Nat>, std::vector<SatPair>>, FormulaHash>
      buckets;
  for (const auto& phi : S.family()) {
    Template t = trivialise(phi);
    for (const auto& a : assignments_over(phi, S.domain()))
      buckets[t.skeleton()][param_values(t, a)].push_back(SatPair{phi, a});
  }
  for (const auto& [skel, groups] : buckets) {
    (void)skel;
    for (const auto& [values, pairs] : groups) {
      (void)values;
      bool first = S.contains(pairs.front().formula, pairs.front().assignment);
      for (std::size_t i = 1; i < pairs.size(); ++i) {
        bool cur = S.contains(pairs[i].formula, pairs[i].assignment);
        report.check(cur == first, print(pairs[i]) + " ~ " + print(pairs.front()),
                     std::string("equal verdict: ") + (first ? "in" : "out"),
                     cur ? "in" : "out");
      }
    }
  }
  return report;
}

Report check_agreement(const PartialSatPredicate& S, const std::vector<Formula>& seed_truths) {
  Report report;
  report.suite = "agreement";
  for (const auto& phi : seed_truths)
    report.check(S.contains(phi, {}), print(phi), "(phi, {}) in S",
                 S.contains(phi, {}) ? "in" : "out");
  return report;
}

}  // namespace ptk
