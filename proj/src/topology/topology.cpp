#include "tn/topology.hpp"
#include "tn/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tn {

namespace {

struct SetCad {
  int n;
  CadTree tree;
  std::vector<std::vector<std::pair<FactoredPoly, Rel>>> conds;

  bool member(int id) const {
    for (const auto& c : conds) {
      bool all = true;
      for (const auto& [fp, rel] : c) all = all && holds(rel, tree.sign(id, fp));
      if (all) return true;
    }
    return false;
  }
};

SetCad build(const SemiAlgebraicSet& s, const Config& cfg) {
  if (s.n < 1) throw DomainError("ambient dimension must be positive");
  check_caps(s.to_formula(), s.n, cfg);
  ProjectionSet base{s.n, std::vector<std::vector<Polynomial>>(s.n)};
  for (const auto& c : s.disjuncts)
    for (const auto& a : c) base.add(a.poly);
  SetCad sc{s.n, CadTree(compute_projection(std::move(base), cfg.projection), cfg.projection), {}};
  for (const auto& c : s.disjuncts) {
    std::vector<std::pair<FactoredPoly, Rel>> fc;
    for (const auto& a : c) fc.push_back({sc.tree.factor(a.poly), a.rel});
    sc.conds.push_back(std::move(fc));
  }
  return sc;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Limit positions of the section functions of the stack over `sector` at the
// boundary stack over `edge`. Root j of the boundary stack has position
// 2j+1; -1 and 2k+1 stand for -inf and +inf.
std::vector<int> section_limits(CadTree& tree, int sector, int edge, bool edge_on_left,
                                const std::optional<AlgebraicNumber>& far_end) {
  const AlgebraicNumber a = tree.node(edge).sample[0];
  std::vector<AlgebraicNumber> roots;
  for (int c : tree.children(edge))
    if (tree.node(c).index[1] % 2 == 1) roots.push_back(tree.node(c).sample[1]);
  const std::size_t k = roots.size();
  std::vector<Rational> seps;
  if (k == 0) {
    seps.push_back(Rational(0));
  } else {
    seps.push_back(rational_below(roots[0]));
    for (std::size_t j = 1; j < k; ++j) seps.push_back(rational_between(roots[j - 1], roots[j]));
    seps.push_back(rational_above(roots[k - 1]));
  }

  const auto& factors = tree.projection().levels[1];
  std::optional<AlgebraicNumber> nearest = far_end;
  auto closer = [&](const AlgebraicNumber& r) {
    return edge_on_left ? compare(r, *nearest) < 0 : compare(r, *nearest) > 0;
  };
  for (const auto& f : factors)
    for (const auto& s : seps) {
      Polynomial g = f.substitute(1, s);
      if (g.is_constant()) continue;
      for (const auto& r : AlgebraicNumber::roots_of(UPoly::from_polynomial(g, 0))) {
        int c = compare(r, a);
        if (edge_on_left ? c <= 0 : c >= 0) continue;
        if (!nearest || closer(r)) nearest = r;
      }
    }
  Rational xs;
  if (edge_on_left) xs = nearest ? rational_between(a, *nearest) : rational_above(a);
  else xs = nearest ? rational_between(*nearest, a) : rational_below(a);

  SamplePoint base{AlgebraicNumber(xs)};
  std::vector<AlgebraicNumber> over;
  for (const auto& f : factors) {
    bool null = false;
    for (const auto& r : roots_over(f, base, null)) {
      bool dup = false;
      for (const auto& q : over) dup = dup || q == r;
      if (!dup) over.push_back(r);
    }
  }
  std::sort(over.begin(), over.end());
  std::size_t m = (tree.children(sector).size() - 1) / 2;
  if (over.size() != m) throw InternalError("adjacency: section count changed inside a sector");
  std::vector<int> pos;
  for (const auto& r : over) {
    int c = 0;
    for (const auto& s : seps) c += compare(AlgebraicNumber(s), r) < 0;
    pos.push_back(2 * c - 1);
  }
  return pos;
}

void connect_stacks(CadTree& tree, int sector, int edge, bool edge_on_left, const std::optional<AlgebraicNumber>& far_end,
                    const std::map<int, int>& slot, UnionFind& uf) {
  std::vector<int> lim = section_limits(tree, sector, edge, edge_on_left, far_end);
  const auto& upper = tree.children(sector);
  const auto& lower = tree.children(edge);
  const int m = static_cast<int>(lim.size());
  const int top = static_cast<int>(lower.size()) - 1;
  for (int c = 0; c <= 2 * m; ++c) {
    int lo, hi;
    if (c % 2 == 1) {
      lo = hi = lim[c / 2];
    } else {
      lo = c == 0 ? -1 : lim[c / 2 - 1];
      hi = c / 2 == m ? top + 1 : lim[c / 2];
    }
    auto su = slot.find(upper[c]);
    if (su == slot.end()) continue;
    for (int t = std::max(lo, 0); t <= std::min(hi, top); ++t) {
      auto sl = slot.find(lower[t]);
      if (sl != slot.end()) uf.unite(su->second, sl->second);
    }
  }
}

}  // namespace

std::vector<Cell> cells_of(const SemiAlgebraicSet& s, const Config& cfg) {
  SetCad sc = build(s, cfg);
  std::vector<Cell> out;
  for (int id : sc.tree.cells_at_level(s.n)) {
    if (!sc.member(id)) continue;
    const auto& nd = sc.tree.node(id);
    out.push_back({nd.index, nd.dim(), nd.sample, {}});
  }
  return out;
}

long euler_characteristic_c(const SemiAlgebraicSet& s, const Config& cfg) {
  long chi = 0;
  for (const auto& c : cells_of(s, cfg)) chi += c.dim % 2 == 0 ? 1 : -1;
  return chi;
}

int dimension(const SemiAlgebraicSet& s, const Config& cfg) {
  int d = -1;
  for (const auto& c : cells_of(s, cfg)) d = std::max(d, c.dim);
  return d;
}

ComponentReport connected_components(const SemiAlgebraicSet& s, const Config& cfg) {
  if (s.n > 2)
    throw DomainError("connected components are only supported in dimension 1 and 2 (got " + std::to_string(s.n) + ")");
  SetCad sc = build(s, cfg);
  std::vector<int> leaves = sc.tree.cells_at_level(s.n);
  std::map<int, int> slot;
  std::vector<int> members;
  for (int id : leaves)
    if (sc.member(id)) {
      slot[id] = static_cast<int>(members.size());
      members.push_back(id);
    }
  UnionFind uf(members.size());
  auto link = [&](int a, int b) {
    auto i = slot.find(a), j = slot.find(b);
    if (i != slot.end() && j != slot.end()) uf.unite(i->second, j->second);
  };

  const std::vector<int> base = sc.tree.children(0);
  if (s.n == 1) {
    for (std::size_t i = 0; i + 1 < base.size(); ++i) link(base[i], base[i + 1]);
  } else {
    for (int b : base) {
      const auto& st = sc.tree.children(b);
      for (std::size_t i = 0; i + 1 < st.size(); ++i) link(st[i], st[i + 1]);
    }
    for (std::size_t i = 0; i < base.size(); i += 2) {
      std::optional<AlgebraicNumber> left, right;
      if (i > 0) left = sc.tree.node(base[i - 1]).sample[0];
      if (i + 1 < base.size()) right = sc.tree.node(base[i + 1]).sample[0];
      if (left) connect_stacks(sc.tree, base[i], base[i - 1], true, right, slot, uf);
      if (right) connect_stacks(sc.tree, base[i], base[i + 1], false, left, slot, uf);
    }
  }

  ComponentReport rep;
  std::map<int, bool> seen;
  for (std::size_t i = 0; i < members.size(); ++i) {
    int r = uf.find(static_cast<int>(i));
    if (seen[r]) continue;
    seen[r] = true;
    ++rep.count;
    rep.representatives.push_back(sc.tree.node(members[i]).sample);
  }
  return rep;
}

}  // namespace tn
