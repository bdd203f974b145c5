#include "tn/cad.hpp"
#include "tn/errors.hpp"
#include "qe_engine.hpp"

#include <algorithm>
#include <map>

namespace tn {

void check_caps(const Formula& f, int nvars, const Config& cfg) {
  if (nvars > cfg.max_vars)
    throw CapExceeded("variable cap exceeded: " + std::to_string(nvars) + " variables, limit " +
                      std::to_string(cfg.max_vars));
  for (const auto& p : f.polynomials())
    if (static_cast<int>(p.total_degree()) > cfg.max_degree)
      throw CapExceeded("degree cap exceeded: " + p.to_string() + " has degree " + std::to_string(p.total_degree()) +
                        ", limit " + std::to_string(cfg.max_degree));
}

QeEngine::QeEngine(Formula matrix, int free_count, std::vector<bool> exists, const Config& cfg)
    : matrix_(std::move(matrix)), f_(free_count), exists_(std::move(exists)), cfg_(cfg) {
  n_ = f_ + static_cast<int>(exists_.size());
  build({});
}

void QeEngine::build(const std::set<int>& closed) {
  ProjectionSet base{n_, std::vector<std::vector<Polynomial>>(n_)};
  for (const auto& p : matrix_.polynomials()) base.add(p);
  tree_ = std::make_unique<CadTree>(compute_projection(std::move(base), cfg_.projection, closed), cfg_.projection);
  atoms_.clear();
  nodes_.clear();
  root_ = compile(matrix_, false);
}

int QeEngine::compile(const Formula& f, bool neg) {
  CNode c;
  switch (f.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      c.kind = ((f.kind() == Formula::Kind::True) != neg) ? CNode::True : CNode::False;
      break;
    case Formula::Kind::Atom: {
      c.kind = CNode::Atom;
      const Atom& a = f.as_atom();
      c.atom = static_cast<int>(atoms_.size());
      atoms_.push_back({tree_->factor(a.poly), neg ? negate(a.rel) : a.rel});
      break;
    }
    case Formula::Kind::Not:
      return compile(f.body(), !neg);
    case Formula::Kind::And:
    case Formula::Kind::Or:
      c.kind = ((f.kind() == Formula::Kind::And) != neg) ? CNode::And : CNode::Or;
      for (const auto& ch : f.children()) c.kids.push_back(compile(ch, neg));
      break;
    default:
      throw InternalError("QE matrix is not quantifier-free");
  }
  nodes_.push_back(std::move(c));
  return static_cast<int>(nodes_.size()) - 1;
}

int QeEngine::kleene(int cn, int id) const {
  const CNode& c = nodes_[cn];
  switch (c.kind) {
    case CNode::True:
      return 1;
    case CNode::False:
      return 0;
    case CNode::Atom: {
      const auto& a = atoms_[c.atom];
      if (a.fp.level > tree_->node(id).level) return 2;
      return holds(a.rel, tree_->sign(id, a.fp)) ? 1 : 0;
    }
    case CNode::And: {
      int r = 1;
      for (int k : c.kids) {
        int t = kleene(k, id);
        if (t == 0) return 0;
        if (t == 2) r = 2;
      }
      return r;
    }
    case CNode::Or: {
      int r = 0;
      for (int k : c.kids) {
        int t = kleene(k, id);
        if (t == 1) return 1;
        if (t == 2) r = 2;
      }
      return r;
    }
  }
  return 2;
}

bool QeEngine::truth(int id, int* witness) {
  int t = kleene(root_, id);
  int level = tree_->node(id).level;
  if (t != 2) {
    if (t == 1 && witness) {
      int cur = id;
      while (tree_->node(cur).level < n_) cur = tree_->children(cur).front();
      *witness = cur;
    }
    return t == 1;
  }
  if (level >= n_) throw InternalError("QE: undetermined truth value at a full-dimensional cell");
  bool ex = exists_[level - f_];
  const std::vector<int> kids = tree_->children(id);
  for (int k : kids) {
    bool c = truth(k, ex ? witness : nullptr);
    if (ex && c) return true;
    if (!ex && !c) return false;
  }
  return !ex;
}

std::optional<SamplePoint> QeEngine::witness() {
  int w = -1;
  if (!truth(0, &w)) return std::nullopt;
  return tree_->node(w).sample;
}

namespace {

struct Condition {
  std::vector<std::uint8_t> mask;  // bit 0: negative, bit 1: zero, bit 2: positive; 7 = unconstrained
};

std::uint8_t bit(int sign) { return static_cast<std::uint8_t>(1u << (sign + 1)); }

bool satisfies(const Condition& c, const std::vector<std::int8_t>& sig) {
  for (std::size_t i = 0; i < sig.size(); ++i)
    if (!(c.mask[i] & bit(sig[i]))) return false;
  return true;
}

Rel rel_of(std::uint8_t mask) {
  switch (mask) {
    case 1: return Rel::Lt;
    case 2: return Rel::Eq;
    case 4: return Rel::Gt;
    case 3: return Rel::Le;
    case 6: return Rel::Ge;
    case 5: return Rel::Ne;
  }
  throw InternalError("rel_of: empty or full mask");
}

}  // namespace

Formula QeEngine::solution_formula() {
  std::set<int> closed;
  while (true) {
    std::vector<std::pair<int, int>> factors;  // (level, index) of every factor below f
    for (int l = 0; l < f_; ++l)
      for (int i = 0; i < static_cast<int>(tree_->projection().levels[l].size()); ++i) factors.push_back({l, i});

    std::vector<int> cells = tree_->cells_at_level(f_);
    std::vector<std::vector<std::int8_t>> sigs;
    std::vector<bool> truths;
    for (int id : cells) {
      std::vector<std::int8_t> s;
      for (auto [l, i] : factors) s.push_back(static_cast<std::int8_t>(tree_->factor_sign(id, l, i)));
      sigs.push_back(std::move(s));
      truths.push_back(truth(id, nullptr));
    }

    int conflict_level = -1;
    std::map<std::vector<std::int8_t>, std::size_t> seen;
    for (std::size_t c = 0; c < cells.size() && conflict_level < 0; ++c) {
      auto [it, fresh] = seen.emplace(sigs[c], c);
      if (fresh || truths[it->second] == truths[c]) continue;
      const auto& a = tree_->node(cells[it->second]).index;
      const auto& b = tree_->node(cells[c]).index;
      int j = 0;
      while (a[j] == b[j]) ++j;
      conflict_level = j;
    }
    if (conflict_level >= 0) {
      if (closed.count(conflict_level)) throw InternalError("QE: signature conflict persists after derivative closure");
      closed.insert(conflict_level);
      build(closed);
      continue;
    }

    std::vector<std::size_t> pos, neg;
    for (std::size_t c = 0; c < cells.size(); ++c) (truths[c] ? pos : neg).push_back(c);
    if (pos.empty()) return Formula::truth(false);
    if (neg.empty()) return Formula::truth(true);

    auto excludes_false = [&](const Condition& cond) {
      for (std::size_t c : neg)
        if (satisfies(cond, sigs[c])) return false;
      return true;
    };

    std::vector<Condition> conds;
    for (std::size_t c : pos) {
      Condition cond;
      for (auto s : sigs[c]) cond.mask.push_back(bit(s));
      for (std::size_t k = factors.size(); k-- > 0;) {
        std::uint8_t own = cond.mask[k];
        std::vector<std::uint8_t> tries{7};
        if (own == bit(0)) tries.insert(tries.end(), {6, 3});
        else if (own == bit(1)) tries.insert(tries.end(), {6, 5});
        else tries.insert(tries.end(), {3, 5});
        for (auto m : tries) {
          cond.mask[k] = m;
          if (excludes_false(cond)) break;
          cond.mask[k] = own;
        }
      }
      if (std::find_if(conds.begin(), conds.end(), [&](const Condition& o) { return o.mask == cond.mask; }) == conds.end())
        conds.push_back(std::move(cond));
    }

    std::vector<std::vector<std::size_t>> covers(conds.size());
    for (std::size_t i = 0; i < conds.size(); ++i)
      for (std::size_t c : pos)
        if (satisfies(conds[i], sigs[c])) covers[i].push_back(c);
    std::set<std::size_t> uncovered(pos.begin(), pos.end());
    std::vector<Formula> disjuncts;
    while (!uncovered.empty()) {
      std::size_t best = 0, best_count = 0;
      for (std::size_t i = 0; i < conds.size(); ++i) {
        std::size_t cnt = std::count_if(covers[i].begin(), covers[i].end(), [&](std::size_t c) { return uncovered.count(c) > 0; });
        if (cnt > best_count) best = i, best_count = cnt;
      }
      if (best_count == 0) throw InternalError("QE: solution formula cover failed");
      for (std::size_t c : covers[best]) uncovered.erase(c);
      std::vector<Formula> atoms;
      for (std::size_t k = 0; k < factors.size(); ++k)
        if (conds[best].mask[k] != 7)
          atoms.push_back(Formula::atom(tree_->projection().levels[factors[k].first][factors[k].second],
                                        rel_of(conds[best].mask[k])));
      disjuncts.push_back(Formula::conj(std::move(atoms)));
    }
    return Formula::disj(std::move(disjuncts));
  }
}

namespace {

struct Prepared {
  Formula matrix;
  std::vector<int> free;  // original indices, ascending
  std::vector<bool> exists;
  int nvars = 0;
};

Prepared prepare(const Formula& f, const Config& cfg) {
  Formula pf = to_prenex(f);
  std::vector<std::pair<bool, int>> prefix;
  while (pf.kind() == Formula::Kind::Exists || pf.kind() == Formula::Kind::ForAll) {
    prefix.push_back({pf.kind() == Formula::Kind::Exists, pf.bound_var()});
    pf = pf.body();
  }
  Prepared p;
  auto fv = f.free_variables();
  p.free.assign(fv.begin(), fv.end());
  auto used = pf.free_variables();
  std::vector<int> map(kMaxVars, -1);
  int next = 0;
  for (int v : p.free) map[v] = next++;
  for (auto [ex, v] : prefix) {
    if (!used.count(v) || map[v] >= 0) continue;
    map[v] = next++;
    p.exists.push_back(ex);
  }
  for (int v = 0; v < kMaxVars; ++v)
    if (map[v] < 0) map[v] = v;
  p.nvars = next;
  check_caps(f, std::max(next, static_cast<int>(f.all_variables().size())), cfg);
  p.matrix = pf.rename(map);
  return p;
}

Formula restore_names(const Formula& g, const std::vector<int>& free) {
  std::vector<int> back(kMaxVars);
  for (int v = 0; v < kMaxVars; ++v) back[v] = v;
  for (std::size_t i = 0; i < free.size(); ++i) back[i] = free[i];
  return g.rename(back);
}

}  // namespace

Formula eliminate_quantifiers(const Formula& f, const Config& cfg) {
  if (f.is_quantifier_free()) {
    check_caps(f, static_cast<int>(f.all_variables().size()), cfg);
    return f;
  }
  Prepared p = prepare(f, cfg);
  int fcount = static_cast<int>(p.free.size());
  if (p.nvars == 0) return Formula::truth(eval_qf(p.matrix, {}));
  if (p.exists.empty()) return restore_names(p.matrix, p.free);
  QeEngine engine(p.matrix, fcount, p.exists, cfg);
  if (fcount == 0) return Formula::truth(engine.truth(0, nullptr));
  return restore_names(engine.solution_formula(), p.free);
}

bool decide(const Formula& sentence, const Config& cfg) {
  if (!sentence.free_variables().empty()) throw DomainError("decide: formula has free variables");
  Formula r = eliminate_quantifiers(sentence, cfg);
  if (r.kind() == Formula::Kind::True) return true;
  if (r.kind() == Formula::Kind::False) return false;
  return eval_qf(r, {});
}

SemiAlgebraicSet set_from_formula(const Formula& f, int n, const Config& cfg) {
  for (int v : f.free_variables())
    if (v >= n) throw DomainError("set_from_formula: free variable outside R^" + std::to_string(n));
  return to_dnf(eliminate_quantifiers(f, cfg), n, cfg.max_dnf);
}

}  // namespace tn
