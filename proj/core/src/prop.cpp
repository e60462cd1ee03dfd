#include "ptk/prop.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

namespace ptk {

// ---------------------------------------------------------------------------
// AtomTable / PropFormula
// ---------------------------------------------------------------------------

AtomId AtomTable::intern(const Formula& sentence) {
  auto it = index_.find(sentence);
  if (it != index_.end()) return it->second;
  AtomId id = static_cast<AtomId>(atoms_.size());
  atoms_.push_back(sentence);
  index_.emplace(sentence, id);
  return id;
}

const Formula& AtomTable::sentence(AtomId id) const {
  if (id >= atoms_.size()) throw std::out_of_range("AtomTable::sentence: unknown atom id");
  return atoms_[id];
}

std::optional<AtomId> AtomTable::lookup(const Formula& sentence) const {
  auto it = index_.find(sentence);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PropFormula PropFormula::constant(bool b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->value = b;
  return PropFormula(std::move(n));
}

PropFormula PropFormula::atom(AtomId id) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->atom = id;
  return PropFormula(std::move(n));
}

PropFormula PropFormula::neg(PropFormula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->a = std::move(f);
  return PropFormula(std::move(n));
}

PropFormula PropFormula::disj(PropFormula l, PropFormula r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->a = std::move(l);
  n->b = std::move(r);
  return PropFormula(std::move(n));
}

PropFormula PropFormula::conj(PropFormula l, PropFormula r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->a = std::move(l);
  n->b = std::move(r);
  return PropFormula(std::move(n));
}

PropFormula PropFormula::iff(PropFormula a, PropFormula b) {
  PropFormula forward = imp(a, b);
  PropFormula backward = imp(std::move(b), std::move(a));
  return conj(std::move(forward), std::move(backward));
}

// ---------------------------------------------------------------------------
// Skeleton extraction
// ---------------------------------------------------------------------------

PropFormula skeleton(const Formula& sentence, AtomTable& table) {
  if (!is_sentence(sentence))
    throw std::invalid_argument("skeleton: formula has free variables");
  switch (sentence.kind()) {
    case Formula::Kind::Not:
      return PropFormula::neg(skeleton(sentence.sub(), table));
    case Formula::Kind::Or:
      return PropFormula::disj(skeleton(sentence.left(), table),
                               skeleton(sentence.right(), table));
    case Formula::Kind::And:
      return PropFormula::conj(skeleton(sentence.left(), table),
                               skeleton(sentence.right(), table));
    case Formula::Kind::Eq:
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      return PropFormula::atom(table.intern(sentence));
  }
  throw std::invalid_argument("skeleton: unreachable");
}

Skeleton skeleton(const Formula& sentence) {
  auto table = std::make_shared<AtomTable>();
  PropFormula p = skeleton(sentence, *table);
  return Skeleton{std::move(p), std::move(table)};
}

std::vector<AtomId> atoms_of(const PropFormula& p) {
  std::set<AtomId> out;
  std::unordered_set<const void*> seen;
  std::vector<const PropFormula*> work{&p};
  while (!work.empty()) {
    const PropFormula* f = work.back();
    work.pop_back();
    if (!seen.insert(f->id()).second) continue;
    switch (f->kind()) {
      case PropFormula::Kind::Const:
        break;
      case PropFormula::Kind::Atom:
        out.insert(f->atom_id());
        break;
      case PropFormula::Kind::Not:
        work.push_back(&f->sub());
        break;
      case PropFormula::Kind::Or:
      case PropFormula::Kind::And:
        work.push_back(&f->left());
        work.push_back(&f->right());
        break;
    }
  }
  return {out.begin(), out.end()};
}

bool eval_valuation(const PropFormula& p, const Valuation& v) {
  switch (p.kind()) {
    case PropFormula::Kind::Const:
      return p.value();
    case PropFormula::Kind::Atom: {
      auto it = v.find(p.atom_id());
      if (it == v.end())
        throw std::invalid_argument("eval_valuation: atom " + std::to_string(p.atom_id()) +
                                    " missing from valuation");
      return it->second;
    }
    case PropFormula::Kind::Not:
      return !eval_valuation(p.sub(), v);
    case PropFormula::Kind::Or:
      return eval_valuation(p.left(), v) || eval_valuation(p.right(), v);
    case PropFormula::Kind::And:
      return eval_valuation(p.left(), v) && eval_valuation(p.right(), v);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Truth-table engine: the DAG is flattened once and evaluated 64 rows per
// word, which keeps the 2^20 worst case around a dozen million word ops.
// ---------------------------------------------------------------------------

namespace {

struct FlatOp {
  PropFormula::Kind kind;
  int a = -1, b = -1;
  int atom_pos = -1;
  bool value = false;
};

struct FlatFormula {
  std::vector<FlatOp> ops;  // postorder; root last
  std::vector<AtomId> atoms;
};

int flatten_rec(const PropFormula& p, std::unordered_map<const void*, int>& index,
                const std::unordered_map<AtomId, int>& atom_pos, FlatFormula& out) {
  auto it = index.find(p.id());
  if (it != index.end()) return it->second;
  FlatOp op;
  op.kind = p.kind();
  switch (p.kind()) {
    case PropFormula::Kind::Const:
      op.value = p.value();
      break;
    case PropFormula::Kind::Atom:
      op.atom_pos = atom_pos.at(p.atom_id());
      break;
    case PropFormula::Kind::Not:
      op.a = flatten_rec(p.sub(), index, atom_pos, out);
      break;
    case PropFormula::Kind::Or:
    case PropFormula::Kind::And:
      op.a = flatten_rec(p.left(), index, atom_pos, out);
      op.b = flatten_rec(p.right(), index, atom_pos, out);
      break;
  }
  int id = static_cast<int>(out.ops.size());
  out.ops.push_back(op);
  index.emplace(p.id(), id);
  return id;
}

FlatFormula flatten(const PropFormula& p) {
  FlatFormula out;
  out.atoms = atoms_of(p);
  std::unordered_map<AtomId, int> atom_pos;
  for (std::size_t i = 0; i < out.atoms.size(); ++i)
    atom_pos.emplace(out.atoms[i], static_cast<int>(i));
  std::unordered_map<const void*, int> index;
  flatten_rec(p, index, atom_pos, out);
  return out;
}

constexpr std::uint64_t kInwordPattern[6] = {
    0xaaaaaaaaaaaaaaaaULL, 0xccccccccccccccccULL, 0xf0f0f0f0f0f0f0f0ULL,
    0xff00ff00ff00ff00ULL, 0xffff0000ffff0000ULL, 0xffffffff00000000ULL,
};

}  // namespace

bool is_tautology_truth_table(const PropFormula& p) {
  FlatFormula flat = flatten(p);
  const std::size_t k = flat.atoms.size();
  const std::size_t inword = std::min<std::size_t>(k, 6);
  const std::uint64_t blocks = k > 6 ? (1ULL << (k - 6)) : 1;
  const std::uint64_t mask =
      k >= 6 ? ~0ULL : ((1ULL << (std::uint64_t(1) << k)) - 1);
  std::vector<std::uint64_t> val(flat.ops.size());
  for (std::uint64_t block = 0; block < blocks; ++block) {
    for (std::size_t i = 0; i < flat.ops.size(); ++i) {
      const FlatOp& op = flat.ops[i];
      switch (op.kind) {
        case PropFormula::Kind::Const:
          val[i] = op.value ? ~0ULL : 0;
          break;
        case PropFormula::Kind::Atom:
          if (op.atom_pos < static_cast<int>(inword))
            val[i] = kInwordPattern[op.atom_pos];
          else
            val[i] = ((block >> (op.atom_pos - 6)) & 1) ? ~0ULL : 0;
          break;
        case PropFormula::Kind::Not:
          val[i] = ~val[op.a];
          break;
        case PropFormula::Kind::Or:
          val[i] = val[op.a] | val[op.b];
          break;
        case PropFormula::Kind::And:
          val[i] = val[op.a] & val[op.b];
          break;
      }
    }
    if ((val.back() & mask) != mask) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Constant folding and Tseitin encoding
// ---------------------------------------------------------------------------

namespace {

PropFormula fold_constants(const PropFormula& p,
                           std::unordered_map<const void*, PropFormula>& memo) {
  auto it = memo.find(p.id());
  if (it != memo.end()) return it->second;
  PropFormula out;
  switch (p.kind()) {
    case PropFormula::Kind::Const:
    case PropFormula::Kind::Atom:
      out = p;
      break;
    case PropFormula::Kind::Not: {
      PropFormula a = fold_constants(p.sub(), memo);
      out = a.kind() == PropFormula::Kind::Const ? PropFormula::constant(!a.value())
                                                 : PropFormula::neg(std::move(a));
      break;
    }
    case PropFormula::Kind::Or: {
      PropFormula a = fold_constants(p.left(), memo);
      PropFormula b = fold_constants(p.right(), memo);
      if (a.kind() == PropFormula::Kind::Const)
        out = a.value() ? PropFormula::constant(true) : b;
      else if (b.kind() == PropFormula::Kind::Const)
        out = b.value() ? PropFormula::constant(true) : a;
      else
        out = PropFormula::disj(std::move(a), std::move(b));
      break;
    }
    case PropFormula::Kind::And: {
      PropFormula a = fold_constants(p.left(), memo);
      PropFormula b = fold_constants(p.right(), memo);
      if (a.kind() == PropFormula::Kind::Const)
        out = a.value() ? b : PropFormula::constant(false);
      else if (b.kind() == PropFormula::Kind::Const)
        out = b.value() ? a : PropFormula::constant(false);
      else
        out = PropFormula::conj(std::move(a), std::move(b));
      break;
    }
  }
  memo.emplace(p.id(), out);
  return out;
}

PropFormula fold_constants(const PropFormula& p) {
  std::unordered_map<const void*, PropFormula> memo;
  return fold_constants(p, memo);
}

int tseitin_rec(const PropFormula& p, std::unordered_map<const void*, int>& var_of,
                const std::unordered_map<AtomId, int>& atom_var, CnfFormula& out) {
  auto it = var_of.find(p.id());
  if (it != var_of.end()) return it->second;
  int v = 0;
  switch (p.kind()) {
    case PropFormula::Kind::Const:
      throw std::logic_error("tseitin: constant inside folded formula");
    case PropFormula::Kind::Atom:
      v = atom_var.at(p.atom_id());
      break;
    case PropFormula::Kind::Not: {
      int a = tseitin_rec(p.sub(), var_of, atom_var, out);
      v = ++out.num_vars;
      out.clauses.push_back({-v, -a});
      out.clauses.push_back({v, a});
      break;
    }
    case PropFormula::Kind::Or: {
      int a = tseitin_rec(p.left(), var_of, atom_var, out);
      int b = tseitin_rec(p.right(), var_of, atom_var, out);
      v = ++out.num_vars;
      out.clauses.push_back({-v, a, b});
      out.clauses.push_back({v, -a});
      out.clauses.push_back({v, -b});
      break;
    }
    case PropFormula::Kind::And: {
      int a = tseitin_rec(p.left(), var_of, atom_var, out);
      int b = tseitin_rec(p.right(), var_of, atom_var, out);
      v = ++out.num_vars;
      out.clauses.push_back({-v, a});
      out.clauses.push_back({-v, b});
      out.clauses.push_back({v, -a, -b});
      break;
    }
  }
  var_of.emplace(p.id(), v);
  return v;
}

}  // namespace

CnfFormula to_cnf_tseitin(const PropFormula& p) {
  CnfFormula out;
  PropFormula folded = fold_constants(p);
  if (folded.kind() == PropFormula::Kind::Const) {
    if (!folded.value()) out.clauses.push_back({});  // the empty clause
    return out;
  }
  std::vector<AtomId> atoms = atoms_of(folded);
  std::unordered_map<AtomId, int> atom_var;
  out.atom_of_var.reserve(atoms.size());
  for (const AtomId a : atoms) {
    atom_var.emplace(a, ++out.num_vars);
    out.atom_of_var.push_back(a);
  }
  std::unordered_map<const void*, int> var_of;
  int root = tseitin_rec(folded, var_of, atom_var, out);
  out.clauses.push_back({root});
  return out;
}

std::string export_dimacs(const CnfFormula& c) {
  std::ostringstream os;
  os << "p cnf " << c.num_vars << ' ' << c.clauses.size() << '\n';
  for (const auto& clause : c.clauses) {
    for (int lit : clause) os << lit << ' ';
    os << "0\n";
  }
  return os.str();
}

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  CnfFormula out;
  long declared_clauses = -1;
  bool open_clause = false;
  while (is >> tok) {
    if (tok == "c") {
      std::string line;
      std::getline(is, line);
      continue;
    }
    if (tok == "p") {
      std::string fmt;
      is >> fmt >> out.num_vars >> declared_clauses;
      if (fmt != "cnf") throw std::invalid_argument("parse_dimacs: not a cnf header");
      continue;
    }
    if (declared_clauses < 0) throw std::invalid_argument("parse_dimacs: literal before header");
    int lit = std::stoi(tok);
    if (lit == 0) {
      if (!open_clause) out.clauses.push_back({});
      open_clause = false;
      continue;
    }
    if (!open_clause) {
      out.clauses.push_back({});
      open_clause = true;
    }
    out.clauses.back().push_back(lit);
  }
  if (open_clause) throw std::invalid_argument("parse_dimacs: unterminated clause");
  return out;
}

// ---------------------------------------------------------------------------
// DPLL
// ---------------------------------------------------------------------------

namespace {

class DpllSolver {
 public:
  explicit DpllSolver(const CnfFormula& cnf)
      : clauses_(cnf.clauses), nvars_(cnf.num_vars) {
    for (const auto& clause : clauses_)
      for (int lit : clause)
        nvars_ = std::max(nvars_, std::abs(lit));
    occ_pos_.resize(nvars_ + 1);
    occ_neg_.resize(nvars_ + 1);
    assign_.assign(nvars_ + 1, 0);
    sat_count_.assign(clauses_.size(), 0);
    unassigned_count_.assign(clauses_.size(), 0);
    for (std::size_t ci = 0; ci < clauses_.size(); ++ci) {
      unassigned_count_[ci] = static_cast<int>(clauses_[ci].size());
      for (int lit : clauses_[ci])
        (lit > 0 ? occ_pos_ : occ_neg_)[std::abs(lit)].push_back(static_cast<int>(ci));
    }
  }

  std::optional<std::vector<bool>> solve() {
    for (std::size_t ci = 0; ci < clauses_.size(); ++ci) {
      if (clauses_[ci].empty()) return std::nullopt;
      if (clauses_[ci].size() == 1) units_.push_back(static_cast<int>(ci));
    }
    if (!search()) return std::nullopt;
    std::vector<bool> model(nvars_ + 1, false);
    for (int v = 1; v <= nvars_; ++v) model[v] = assign_[v] > 0;
    return model;
  }

 private:
  bool assign_lit(int lit) {
    int v = std::abs(lit);
    std::int8_t want = lit > 0 ? 1 : -1;
    if (assign_[v] != 0) return assign_[v] == want;
    assign_[v] = want;
    trail_.push_back(v);
    bool ok = true;
    const auto& sat_occ = lit > 0 ? occ_pos_[v] : occ_neg_[v];
    const auto& unsat_occ = lit > 0 ? occ_neg_[v] : occ_pos_[v];
    for (int ci : sat_occ) {
      if (sat_count_[ci]++ == 0) ++num_sat_;
    }
    for (int ci : unsat_occ) {
      --unassigned_count_[ci];
      if (sat_count_[ci] == 0) {
        if (unassigned_count_[ci] == 0)
          ok = false;
        else if (unassigned_count_[ci] == 1)
          units_.push_back(ci);
      }
    }
    return ok;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      int v = trail_.back();
      trail_.pop_back();
      int lit = assign_[v] > 0 ? v : -v;
      const auto& sat_occ = lit > 0 ? occ_pos_[v] : occ_neg_[v];
      const auto& unsat_occ = lit > 0 ? occ_neg_[v] : occ_pos_[v];
      for (int ci : sat_occ) {
        if (--sat_count_[ci] == 0) --num_sat_;
      }
      for (int ci : unsat_occ) ++unassigned_count_[ci];
      assign_[v] = 0;
    }
  }

  bool propagate() {
    while (!units_.empty()) {
      int ci = units_.back();
      units_.pop_back();
      if (sat_count_[ci] > 0) continue;
      int lit = 0;
      for (int l : clauses_[ci]) {
        if (assign_[std::abs(l)] == 0) {
          lit = l;
          break;
        }
      }
      if (lit == 0) return false;  // clause falsified while queued
      if (!assign_lit(lit)) return false;
    }
    return true;
  }

  // Branch on the first unassigned literal of an active clause with the
  // fewest unassigned literals; satisfying short clauses first keeps unit
  // propagation busy.
  int pick_branch_lit() const {
    int best_ci = -1;
    int best = INT32_MAX;
    for (std::size_t ci = 0; ci < clauses_.size(); ++ci) {
      if (sat_count_[ci] > 0) continue;
      if (unassigned_count_[ci] < best) {
        best = unassigned_count_[ci];
        best_ci = static_cast<int>(ci);
        if (best <= 2) break;
      }
    }
    if (best_ci < 0) return 0;
    for (int l : clauses_[best_ci])
      if (assign_[std::abs(l)] == 0) return l;
    return 0;
  }

  bool search() {
    if (!propagate()) {
      units_.clear();
      return false;
    }
    if (num_sat_ == static_cast<int>(clauses_.size())) return true;
    int lit = pick_branch_lit();
    if (lit == 0) return true;  // every clause satisfied or vacuous
    for (int L : {lit, -lit}) {
      std::size_t mark = trail_.size();
      if (assign_lit(L) && search()) return true;
      undo_to(mark);
      units_.clear();
    }
    return false;
  }

  const std::vector<std::vector<int>>& clauses_;
  int nvars_;
  std::vector<std::vector<int>> occ_pos_, occ_neg_;
  std::vector<std::int8_t> assign_;
  std::vector<int> sat_count_, unassigned_count_;
  std::vector<int> trail_;
  std::vector<int> units_;
  int num_sat_ = 0;
};

}  // namespace

std::optional<std::vector<bool>> dpll_sat(const CnfFormula& c) {
  return DpllSolver(c).solve();
}

// ---------------------------------------------------------------------------
// Tautology / entailment front ends
// ---------------------------------------------------------------------------

bool is_tautology_dpll(const PropFormula& p) {
  return !dpll_sat(to_cnf_tseitin(PropFormula::neg(p))).has_value();
}

bool is_tautology(const PropFormula& p) {
  if (atoms_of(p).size() <= kTruthTableCutoff) return is_tautology_truth_table(p);
  return is_tautology_dpll(p);
}

std::optional<Valuation> find_countermodel(const std::vector<PropFormula>& fs,
                                           const PropFormula& p) {
  PropFormula goal = PropFormula::neg(p);
  for (const auto& f : fs) goal = PropFormula::conj(goal, f);
  CnfFormula cnf = to_cnf_tseitin(goal);
  auto model = dpll_sat(cnf);
  if (!model) return std::nullopt;
  Valuation v;
  for (std::size_t i = 0; i < cnf.atom_of_var.size(); ++i)
    v[cnf.atom_of_var[i]] = (*model)[i + 1];
  return v;
}

bool entails(const std::vector<PropFormula>& premises, const PropFormula& p) {
  PropFormula antecedent = PropFormula::constant(true);
  for (const auto& f : premises) antecedent = PropFormula::conj(antecedent, f);
  PropFormula claim = PropFormula::imp(std::move(antecedent), p);
  return is_tautology(claim);
}

bool entails(const std::vector<Skeleton>& premises, const Skeleton& p) {
  std::vector<PropFormula> ps;
  ps.reserve(premises.size());
  for (const auto& s : premises) {
    if (s.table != p.table)
      throw std::invalid_argument("entails: premises and conclusion use different atom tables");
    ps.push_back(s.formula);
  }
  return entails(ps, p.formula);
}

}  // namespace ptk
