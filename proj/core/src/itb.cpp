#include "ptk/itb.hpp"

#include <map>
#include <sstream>
#include <unordered_map>

#include "ptk/constructions.hpp"

namespace ptk {

namespace {

std::size_t itb_hash(ItbFormula::Kind k, const ItbFormula::Node* n) {
  std::size_t h = static_cast<std::size_t>(k) * 0x85ebca6b2447cbabULL + 0xabcdef;
  switch (k) {
    case ItbFormula::Kind::Eq:
      hash_combine(h, n->tl.hash());
      hash_combine(h, n->tr.hash());
      break;
    case ItbFormula::Kind::IndexLess:
      hash_combine(h, hash_nat(n->ia.index));
      hash_combine(h, hash_nat(n->ib.index));
      break;
    case ItbFormula::Kind::TruthAt:
      hash_combine(h, hash_nat(n->ia.index));
      hash_combine(h, n->tl.hash());
      break;
    case ItbFormula::Kind::Not:
      hash_combine(h, n->fa.hash());
      break;
    case ItbFormula::Kind::Or:
    case ItbFormula::Kind::And:
      hash_combine(h, n->fa.hash());
      hash_combine(h, n->fb.hash());
      break;
    case ItbFormula::Kind::NumExists:
    case ItbFormula::Kind::NumForall:
      hash_combine(h, hash_nat(n->nv.index));
      hash_combine(h, n->fa.hash());
      break;
    case ItbFormula::Kind::IdxExists:
    case ItbFormula::Kind::IdxForall:
      hash_combine(h, hash_nat(n->ia.index));
      hash_combine(h, n->fa.hash());
      break;
  }
  return h;
}

std::shared_ptr<ItbFormula::Node> make_node(ItbFormula::Kind k) {
  auto n = std::make_shared<ItbFormula::Node>();
  n->kind = k;
  return n;
}

}  // namespace

#define PTK_ITB_FINISH(n)                      \
  (n)->hash = itb_hash((n)->kind, (n).get());  \
  return ItbFormula(std::shared_ptr<const Node>(std::move(n)))

ItbFormula ItbFormula::eq(Term l, Term r) {
  auto n = make_node(Kind::Eq);
  n->tl = std::move(l);
  n->tr = std::move(r);
  PTK_ITB_FINISH(n);
}

ItbFormula ItbFormula::index_less(IndexVarId a, IndexVarId b) {
  auto n = make_node(Kind::IndexLess);
  n->ia = std::move(a);
  n->ib = std::move(b);
  PTK_ITB_FINISH(n);
}

ItbFormula ItbFormula::truth_at(IndexVarId a, Term t) {
  auto n = make_node(Kind::TruthAt);
  n->ia = std::move(a);
  n->tl = std::move(t);
  PTK_ITB_FINISH(n);
}

ItbFormula ItbFormula::neg(ItbFormula f) {
  auto n = make_node(Kind::Not);
  n->fa = std::move(f);
  PTK_ITB_FINISH(n);
}

ItbFormula ItbFormula::disj(ItbFormula l, ItbFormula r) {
  auto n = make_node(Kind::Or);
  n->fa = std::move(l);
  n->fb = std::move(r);
  PTK_ITB_FINISH(n);
}

ItbFormula ItbFormula::conj(ItbFormula l, ItbFormula r) {
  auto n = make_node(Kind::And);
  n->fa = std::move(l);
  n->fb = std::move(r);
  PTK_ITB_FINISH(n);
}

ItbFormula ItbFormula::iff(ItbFormula a, ItbFormula b) {
  ItbFormula forward = imp(a, b);
  ItbFormula backward = imp(std::move(b), std::move(a));
  return conj(std::move(forward), std::move(backward));
}

ItbFormula ItbFormula::num_exists(VarId v, ItbFormula f) {
  auto n = make_node(Kind::NumExists);
  n->nv = std::move(v);
  n->fa = std::move(f);
  PTK_ITB_FINISH(n);
}

ItbFormula ItbFormula::num_forall(VarId v, ItbFormula f) {
  auto n = make_node(Kind::NumForall);
  n->nv = std::move(v);
  n->fa = std::move(f);
  PTK_ITB_FINISH(n);
}

ItbFormula ItbFormula::idx_exists(IndexVarId v, ItbFormula f) {
  auto n = make_node(Kind::IdxExists);
  n->ia = std::move(v);
  n->fa = std::move(f);
  PTK_ITB_FINISH(n);
}

ItbFormula ItbFormula::idx_forall(IndexVarId v, ItbFormula f) {
  auto n = make_node(Kind::IdxForall);
  n->ia = std::move(v);
  n->fa = std::move(f);
  PTK_ITB_FINISH(n);
}

#undef PTK_ITB_FINISH

ItbFormula ItbFormula::lift(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return eq(f.term_left(), f.term_right());
    case Formula::Kind::Not:
      return neg(lift(f.sub()));
    case Formula::Kind::Or:
      return disj(lift(f.left()), lift(f.right()));
    case Formula::Kind::And:
      return conj(lift(f.left()), lift(f.right()));
    case Formula::Kind::Exists:
      return num_exists(f.quant_var(), lift(f.body()));
    case Formula::Kind::Forall:
      return num_forall(f.quant_var(), lift(f.body()));
  }
  return ItbFormula();
}

bool operator==(const ItbFormula& a, const ItbFormula& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const auto *x = a.node_.get(), *y = b.node_.get();
  if (x->kind != y->kind || x->hash != y->hash) return false;
  switch (x->kind) {
    case ItbFormula::Kind::Eq:
      return x->tl == y->tl && x->tr == y->tr;
    case ItbFormula::Kind::IndexLess:
      return x->ia == y->ia && x->ib == y->ib;
    case ItbFormula::Kind::TruthAt:
      return x->ia == y->ia && x->tl == y->tl;
    case ItbFormula::Kind::Not:
      return x->fa == y->fa;
    case ItbFormula::Kind::Or:
    case ItbFormula::Kind::And:
      return x->fa == y->fa && x->fb == y->fb;
    case ItbFormula::Kind::NumExists:
    case ItbFormula::Kind::NumForall:
      return x->nv == y->nv && x->fa == y->fa;
    case ItbFormula::Kind::IdxExists:
    case ItbFormula::Kind::IdxForall:
      return x->ia == y->ia && x->fa == y->fa;
  }
  return false;
}

std::string print(const ItbFormula& f) {
  std::ostringstream os;
  switch (f.kind()) {
    case ItbFormula::Kind::Eq:
      os << '(' << print(f.term_left()) << " = " << print(f.term_right()) << ')';
      break;
    case ItbFormula::Kind::IndexLess:
      os << "(b" << f.index_left().index << " < b" << f.index_right().index << ')';
      break;
    case ItbFormula::Kind::TruthAt:
      os << "T(b" << f.truth_index().index << ", " << print(f.truth_arg()) << ')';
      break;
    case ItbFormula::Kind::Not:
      os << '~' << print(f.sub());
      break;
    case ItbFormula::Kind::Or:
      os << '(' << print(f.left()) << " | " << print(f.right()) << ')';
      break;
    case ItbFormula::Kind::And:
      os << '(' << print(f.left()) << " & " << print(f.right()) << ')';
      break;
    case ItbFormula::Kind::NumExists:
      os << "E v" << f.num_var().index << ' ' << print(f.body());
      break;
    case ItbFormula::Kind::NumForall:
      os << "A v" << f.num_var().index << ' ' << print(f.body());
      break;
    case ItbFormula::Kind::IdxExists:
      os << "E b" << f.idx_var().index << ' ' << print(f.body());
      break;
    case ItbFormula::Kind::IdxForall:
      os << "A b" << f.idx_var().index << ' ' << print(f.body());
      break;
  }
  return os.str();
}

namespace {

void itb_free_vars(const ItbFormula& f, std::set<VarId>& num_bound, std::set<IndexVarId>& idx_bound,
                   std::set<VarId>& num_free, std::set<IndexVarId>& idx_free) {
  switch (f.kind()) {
    case ItbFormula::Kind::Eq:
      for (const auto& v : free_vars(f.term_left()))
        if (!num_bound.count(v)) num_free.insert(v);
      for (const auto& v : free_vars(f.term_right()))
        if (!num_bound.count(v)) num_free.insert(v);
      break;
    case ItbFormula::Kind::IndexLess:
      if (!idx_bound.count(f.index_left())) idx_free.insert(f.index_left());
      if (!idx_bound.count(f.index_right())) idx_free.insert(f.index_right());
      break;
    case ItbFormula::Kind::TruthAt:
      if (!idx_bound.count(f.truth_index())) idx_free.insert(f.truth_index());
      for (const auto& v : free_vars(f.truth_arg()))
        if (!num_bound.count(v)) num_free.insert(v);
      break;
    case ItbFormula::Kind::Not:
      itb_free_vars(f.sub(), num_bound, idx_bound, num_free, idx_free);
      break;
    case ItbFormula::Kind::Or:
    case ItbFormula::Kind::And:
      itb_free_vars(f.left(), num_bound, idx_bound, num_free, idx_free);
      itb_free_vars(f.right(), num_bound, idx_bound, num_free, idx_free);
      break;
    case ItbFormula::Kind::NumExists:
    case ItbFormula::Kind::NumForall: {
      bool fresh = num_bound.insert(f.num_var()).second;
      itb_free_vars(f.body(), num_bound, idx_bound, num_free, idx_free);
      if (fresh) num_bound.erase(f.num_var());
      break;
    }
    case ItbFormula::Kind::IdxExists:
    case ItbFormula::Kind::IdxForall: {
      bool fresh = idx_bound.insert(f.idx_var()).second;
      itb_free_vars(f.body(), num_bound, idx_bound, num_free, idx_free);
      if (fresh) idx_bound.erase(f.idx_var());
      break;
    }
  }
}

bool binds_index(const ItbFormula& f, const IndexVarId& alpha) {
  switch (f.kind()) {
    case ItbFormula::Kind::Eq:
    case ItbFormula::Kind::IndexLess:
    case ItbFormula::Kind::TruthAt:
      return false;
    case ItbFormula::Kind::Not:
      return binds_index(f.sub(), alpha);
    case ItbFormula::Kind::Or:
    case ItbFormula::Kind::And:
      return binds_index(f.left(), alpha) || binds_index(f.right(), alpha);
    case ItbFormula::Kind::NumExists:
    case ItbFormula::Kind::NumForall:
      return binds_index(f.body(), alpha);
    case ItbFormula::Kind::IdxExists:
    case ItbFormula::Kind::IdxForall:
      return f.idx_var() == alpha || binds_index(f.body(), alpha);
  }
  return false;
}

}  // namespace

bool is_itb_sentence(const ItbFormula& f) {
  std::set<VarId> nb, nf;
  std::set<IndexVarId> ib, if_;
  itb_free_vars(f, nb, ib, nf, if_);
  return nf.empty() && if_.empty();
}

namespace {

// ITB-only constructor tags continue the arithmetical formula tag range.
constexpr unsigned kItbIndexLess = 6;
constexpr unsigned kItbTruthAt = 7;
constexpr unsigned kItbIdxExists = 8;
constexpr unsigned kItbIdxForall = 9;

}  // namespace

Nat itb_formula_code(const ItbFormula& f) {
  switch (f.kind()) {
    case ItbFormula::Kind::Eq:
      return cantor_pair(0, cantor_pair(term_code(f.term_left()), term_code(f.term_right())));
    case ItbFormula::Kind::Not:
      return cantor_pair(1, itb_formula_code(f.sub()));
    case ItbFormula::Kind::Or:
      return cantor_pair(2, cantor_pair(itb_formula_code(f.left()), itb_formula_code(f.right())));
    case ItbFormula::Kind::And:
      return cantor_pair(3, cantor_pair(itb_formula_code(f.left()), itb_formula_code(f.right())));
    case ItbFormula::Kind::NumExists:
      return cantor_pair(4, cantor_pair(f.num_var().index, itb_formula_code(f.body())));
    case ItbFormula::Kind::NumForall:
      return cantor_pair(5, cantor_pair(f.num_var().index, itb_formula_code(f.body())));
    case ItbFormula::Kind::IndexLess:
      return cantor_pair(kItbIndexLess,
                         cantor_pair(f.index_left().index, f.index_right().index));
    case ItbFormula::Kind::TruthAt:
      return cantor_pair(kItbTruthAt,
                         cantor_pair(f.truth_index().index, term_code(f.truth_arg())));
    case ItbFormula::Kind::IdxExists:
      return cantor_pair(kItbIdxExists, cantor_pair(f.idx_var().index, itb_formula_code(f.body())));
    case ItbFormula::Kind::IdxForall:
      return cantor_pair(kItbIdxForall, cantor_pair(f.idx_var().index, itb_formula_code(f.body())));
  }
  return 0;
}

GodelCode itb_godel_encode(const ItbFormula& f) { return GodelCode{itb_formula_code(f) * 2 + 1}; }

ItbFormula relativize(const ItbFormula& f, const IndexVarId& alpha) {
  if (binds_index(f, alpha))
    throw std::invalid_argument("relativize: bounding variable is bound in the formula");
  switch (f.kind()) {
    case ItbFormula::Kind::Eq:
    case ItbFormula::Kind::IndexLess:
    case ItbFormula::Kind::TruthAt:
      return f;
    case ItbFormula::Kind::Not:
      return ItbFormula::neg(relativize(f.sub(), alpha));
    case ItbFormula::Kind::Or:
      return ItbFormula::disj(relativize(f.left(), alpha), relativize(f.right(), alpha));
    case ItbFormula::Kind::And:
      return ItbFormula::conj(relativize(f.left(), alpha), relativize(f.right(), alpha));
    case ItbFormula::Kind::NumExists:
      return ItbFormula::num_exists(f.num_var(), relativize(f.body(), alpha));
    case ItbFormula::Kind::NumForall:
      return ItbFormula::num_forall(f.num_var(), relativize(f.body(), alpha));
    case ItbFormula::Kind::IdxExists:
      return ItbFormula::idx_exists(
          f.idx_var(), ItbFormula::conj(ItbFormula::index_less(f.idx_var(), alpha),
                                        relativize(f.body(), alpha)));
    case ItbFormula::Kind::IdxForall:
      return ItbFormula::idx_forall(
          f.idx_var(), ItbFormula::imp(ItbFormula::index_less(f.idx_var(), alpha),
                                       relativize(f.body(), alpha)));
  }
  return f;
}

ItbFormula itb_biconditional(const ItbFormula& phi, const IndexVarId& alpha) {
  return ItbFormula::idx_forall(
      alpha, ItbFormula::iff(ItbFormula::truth_at(alpha, numeral(itb_godel_encode(phi).value)),
                             relativize(phi, alpha)));
}

// ---------------------------------------------------------------------------
// iota translation
// ---------------------------------------------------------------------------

namespace {

// Shares numerals along a single successor chain so that repeated Gödel-code
// numerals cost O(max value) nodes for the whole translation.
class NumeralChain {
 public:
  Term get(const Nat& n) {
    while (Nat(chain_.size()) <= n)
      chain_.push_back(chain_.empty() ? Term::zero() : Term::succ(chain_.back()));
    return chain_[static_cast<std::size_t>(n)];
  }

 private:
  std::vector<Term> chain_;
};

class IotaTranslator {
 public:
  IotaTranslator(const Formula& phi, const std::vector<ItbFormula>& gamma,
                 const IotaOptions& opts)
      : phi_(phi), gamma_(gamma), opts_(opts) {
    auto fv = free_vars(phi);
    if (fv.size() != 1)
      throw std::invalid_argument("iota_translate: phi must have exactly one free variable");
    phi_var_ = *fv.begin();
    if (gamma.size() > opts.gamma_cap)
      throw std::invalid_argument("iota_translate: gamma size exceeds cap");
    for (const auto& g : gamma_) {
      if (!is_itb_sentence(g))
        throw std::invalid_argument("iota_translate: gamma entry is not a sentence");
      codes_.push_back(itb_godel_encode(g).value);
    }
  }

  // Number variables for index variables start above every number variable
  // occurring in phi or gamma or the formula being translated.
  void reserve_base(const ItbFormula& f) {
    Nat max_index = 0;
    auto bump = [&](const VarId& v) {
      if (v.index + 1 > max_index) max_index = v.index + 1;
    };
    for (const auto& v : free_vars(phi_)) bump(v);
    for (const auto& v : bound_vars(phi_)) bump(v);
    auto scan_itb = [&](const ItbFormula& g) {
      std::set<VarId> nb, nf;
      std::set<IndexVarId> ib, if_;
      itb_free_vars(g, nb, ib, nf, if_);
      for (const auto& v : nf) bump(v);
      scan_bound(g, bump);
    };
    for (const auto& g : gamma_) scan_itb(g);
    scan_itb(f);
    base_ = max_index;
  }

  Formula translate(const ItbFormula& f, const Nat& level) {
    if (level > opts_.level_cap)
      throw std::invalid_argument("iota_translate: recursion-depth cap exceeded");
    auto key = std::make_pair(f.id(), level);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Formula out = translate_uncached(f, level);
    memo_.emplace(std::move(key), out);
    return out;
  }

 private:
  template <typename F>
  static void scan_bound(const ItbFormula& f, F&& bump) {
    switch (f.kind()) {
      case ItbFormula::Kind::Eq:
      case ItbFormula::Kind::IndexLess:
      case ItbFormula::Kind::TruthAt:
        break;
      case ItbFormula::Kind::Not:
        scan_bound(f.sub(), bump);
        break;
      case ItbFormula::Kind::Or:
      case ItbFormula::Kind::And:
        scan_bound(f.left(), bump);
        scan_bound(f.right(), bump);
        break;
      case ItbFormula::Kind::NumExists:
      case ItbFormula::Kind::NumForall:
        bump(f.num_var());
        scan_bound(f.body(), bump);
        break;
      case ItbFormula::Kind::IdxExists:
      case ItbFormula::Kind::IdxForall:
        scan_bound(f.body(), bump);
        break;
    }
  }

  VarId map_index(const IndexVarId& b) const { return VarId(base_ + b.index); }

  Formula phi_at(const Term& t) { return subst_free_unchecked(phi_, phi_var_, t); }

  // d_level(x) = (x <= level) & phi(x)
  Formula domain_at(const Term& x, const Nat& level) {
    return Formula::conj(le_formula(x, level), phi_at(x));
  }

  Formula truth_at_clause(const IndexVarId& beta, const Term& arg, const Nat& level) {
    // OR_i ( arg = code_i & OR_{j < level} ((m(beta) = j & phi(j)) & iota_j(phi_i)) )
    if (gamma_.empty()) return false_sentence();
    Term beta_term = Term::var(map_index(beta));
    std::vector<Formula> outer;
    outer.reserve(gamma_.size());
    for (std::size_t i = 0; i < gamma_.size(); ++i) {
      Formula inner = false_sentence();
      bool first = true;
      for (Nat j = 0; j < level; ++j) {
        Term jn = numerals_.get(j);
        Formula clause = Formula::conj(
            Formula::conj(Formula::eq(beta_term, jn), phi_at(jn)),
            translate(gamma_[i], j));
        if (first) {
          inner = std::move(clause);
          first = false;
        } else {
          inner = Formula::disj(std::move(inner), std::move(clause));
        }
      }
      outer.push_back(Formula::conj(Formula::eq(arg, numerals_.get(codes_[i])),
                                    std::move(inner)));
    }
    Formula out = outer.front();
    for (std::size_t i = 1; i < outer.size(); ++i)
      out = Formula::disj(std::move(out), outer[i]);
    return out;
  }

  Formula translate_uncached(const ItbFormula& f, const Nat& level) {
    switch (f.kind()) {
      case ItbFormula::Kind::Eq:
        return Formula::eq(f.term_left(), f.term_right());
      case ItbFormula::Kind::IndexLess:
        return lt_formula(Term::var(map_index(f.index_left())),
                          Term::var(map_index(f.index_right())));
      case ItbFormula::Kind::TruthAt:
        return truth_at_clause(f.truth_index(), f.truth_arg(), level);
      case ItbFormula::Kind::Not:
        return Formula::neg(translate(f.sub(), level));
      case ItbFormula::Kind::Or:
        return Formula::disj(translate(f.left(), level), translate(f.right(), level));
      case ItbFormula::Kind::And:
        return Formula::conj(translate(f.left(), level), translate(f.right(), level));
      case ItbFormula::Kind::NumExists:
        return Formula::exists(f.num_var(), translate(f.body(), level));
      case ItbFormula::Kind::NumForall:
        return Formula::forall(f.num_var(), translate(f.body(), level));
      case ItbFormula::Kind::IdxExists: {
        VarId x = map_index(f.idx_var());
        return Formula::exists(x, Formula::conj(domain_at(Term::var(x), level),
                                                translate(f.body(), level)));
      }
      case ItbFormula::Kind::IdxForall: {
        VarId x = map_index(f.idx_var());
        return Formula::forall(x, Formula::imp(domain_at(Term::var(x), level),
                                               translate(f.body(), level)));
      }
    }
    return false_sentence();
  }

  struct KeyHash {
    std::size_t operator()(const std::pair<const void*, Nat>& k) const {
      std::size_t h = std::hash<const void*>{}(k.first);
      hash_combine(h, hash_nat(k.second));
      return h;
    }
  };

  Formula phi_;
  VarId phi_var_;
  const std::vector<ItbFormula>& gamma_;
  IotaOptions opts_;
  std::vector<Nat> codes_;
  Nat base_ = 0;
  NumeralChain numerals_;
  std::unordered_map<std::pair<const void*, Nat>, Formula, KeyHash> memo_;
};

}  // namespace

Formula iota_translate(const ItbFormula& f, const Nat& a, const Formula& phi,
                       const std::vector<ItbFormula>& gamma_phis, const IotaOptions& opts) {
  IotaTranslator tr(phi, gamma_phis, opts);
  tr.reserve_base(f);
  return tr.translate(f, a);
}

// ---------------------------------------------------------------------------
// Node counting
// ---------------------------------------------------------------------------

namespace {

Nat node_count_term(const Term& t, std::unordered_map<const void*, Nat>& memo) {
  auto it = memo.find(t.id());
  if (it != memo.end()) return it->second;
  if (t.kind() == Term::Kind::Succ) {
    // Successor chains are walked iteratively; numeral depth routinely
    // exceeds safe recursion depth.
    std::vector<Term> spine;
    const Term* cur = &t;
    while (cur->kind() == Term::Kind::Succ && !memo.count(cur->id())) {
      spine.push_back(*cur);
      cur = &cur->child();
    }
    Nat n = node_count_term(*cur, memo);
    for (auto rit = spine.rbegin(); rit != spine.rend(); ++rit) {
      n += 1;
      memo.emplace(rit->id(), n);
    }
    return n;
  }
  Nat n = 1;
  switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Zero:
    case Term::Kind::Succ:
      break;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      n += node_count_term(t.left(), memo) + node_count_term(t.right(), memo);
      break;
  }
  memo.emplace(t.id(), n);
  return n;
}

Nat node_count_formula(const Formula& f, std::unordered_map<const void*, Nat>& fmemo,
                       std::unordered_map<const void*, Nat>& tmemo) {
  auto it = fmemo.find(f.id());
  if (it != fmemo.end()) return it->second;
  Nat n = 1;
  switch (f.kind()) {
    case Formula::Kind::Eq:
      n += node_count_term(f.term_left(), tmemo) + node_count_term(f.term_right(), tmemo);
      break;
    case Formula::Kind::Not:
      n += node_count_formula(f.sub(), fmemo, tmemo);
      break;
    case Formula::Kind::Or:
    case Formula::Kind::And:
      n += node_count_formula(f.left(), fmemo, tmemo) +
           node_count_formula(f.right(), fmemo, tmemo);
      break;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      n += node_count_formula(f.body(), fmemo, tmemo);
      break;
  }
  fmemo.emplace(f.id(), n);
  return n;
}

}  // namespace

Nat node_count(const Term& t) {
  std::unordered_map<const void*, Nat> memo;
  return node_count_term(t, memo);
}

Nat node_count(const Formula& f) {
  std::unordered_map<const void*, Nat> fmemo, tmemo;
  return node_count_formula(f, fmemo, tmemo);
}

}  // namespace ptk
