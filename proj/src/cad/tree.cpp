#include "tn/cad.hpp"
#include "tn/errors.hpp"
#include "tn/poly_ops.hpp"

#include <algorithm>

namespace tn {

int CadTree::Node::dim() const {
  int d = 0;
  for (int i : index) d += (i % 2 == 0);
  return d;
}

CadTree::CadTree(ProjectionSet proj, Projection kind) : proj_(std::move(proj)), kind_(kind) {
  nodes_.push_back(Node{});
}

const std::vector<int>& CadTree::children(int id) {
  if (!nodes_[id].lifted) lift(id);
  return nodes_[id].children;
}

namespace {

struct Root {
  AlgebraicNumber value;
  std::vector<int> factors;
};

void insert_root(std::vector<Root>& roots, const AlgebraicNumber& r, int factor) {
  std::size_t lo = 0, hi = roots.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    int c = compare(roots[mid].value, r);
    if (c == 0) {
      roots[mid].factors.push_back(factor);
      return;
    }
    if (c < 0) lo = mid + 1;
    else hi = mid;
  }
  roots.insert(roots.begin() + static_cast<long>(lo), Root{r, {factor}});
}

}  // namespace

void CadTree::lift(int id) {
  const int k = nodes_[id].level;
  nodes_[id].lifted = true;
  if (k >= proj_.n) return;
  const auto& fs = proj_.levels[k];
  const SamplePoint base = nodes_[id].sample;

  std::vector<std::uint8_t> nullified(fs.size(), 0);
  std::vector<Root> roots;
  for (std::size_t j = 0; j < fs.size(); ++j) {
    bool null = false;
    auto rs = roots_over(fs[j], base, null);
    if (null) {
      if (kind_ == Projection::McCallum && (nodes_[id].dim() > 0 || k + 1 < proj_.n))
        throw NotWellOriented("McCallum projection is not well oriented: " + fs[j].to_string() +
                              " vanishes identically over a cell of dimension " + std::to_string(nodes_[id].dim()) +
                              "; use --projection collins");
      nullified[j] = 1;
    }
    for (auto& r : rs) insert_root(roots, r, static_cast<int>(j));
  }
  nodes_[id].nullified = nullified;

  const int m = static_cast<int>(roots.size());
  for (int i = 0; i <= 2 * m; ++i) {
    Node child;
    child.parent = id;
    child.level = k + 1;
    child.index = nodes_[id].index;
    child.index.push_back(i);
    child.sample = base;
    const Root* section = nullptr;
    if (i % 2 == 1) {
      section = &roots[i / 2];
      child.sample.push_back(section->value);
    } else {
      int t = i / 2;
      if (m == 0) child.sample.emplace_back(Rational(0));
      else if (t == 0) child.sample.emplace_back(rational_below(roots[0].value));
      else if (t == m) child.sample.emplace_back(rational_above(roots[m - 1].value));
      else child.sample.emplace_back(rational_between(roots[t - 1].value, roots[t].value));
    }
    child.signs.resize(fs.size());
    for (std::size_t j = 0; j < fs.size(); ++j) {
      bool zero = nullified[j] ||
                  (section && std::find(section->factors.begin(), section->factors.end(), static_cast<int>(j)) !=
                                  section->factors.end());
      child.signs[j] = zero ? 0 : static_cast<std::int8_t>(sign_nonzero_at_point(fs[j], child.sample));
    }
    nodes_.push_back(std::move(child));
    nodes_[id].children.push_back(static_cast<int>(nodes_.size()) - 1);
  }
}

int CadTree::factor_sign(int id, int level, int index) const {
  int cur = id;
  while (nodes_[cur].level > level + 1) cur = nodes_[cur].parent;
  if (nodes_[cur].level != level + 1) throw InternalError("factor_sign: cell below the factor level");
  return nodes_[cur].signs[index];
}

FactoredPoly CadTree::factor(const Polynomial& p) const {
  FactoredPoly out;
  if (p.is_constant()) {
    out.constant = p.constant_value();
    return out;
  }
  Factorization fz = squarefree_factors(p);
  out.constant = fz.constant;
  for (const auto& [f, m] : fz.factors) {
    int level = f.main_var();
    const auto& lv = proj_.levels[level];
    auto it = std::find(lv.begin(), lv.end(), f);
    if (it != lv.end()) {
      out.factors.push_back({level, static_cast<int>(it - lv.begin()), m});
    } else {
      // Split across a coprime basis.
      Polynomial rest = f;
      for (std::size_t i = 0; i < lv.size() && !rest.is_constant(); ++i)
        if (divides(lv[i], rest)) {
          rest = divide_exact(rest, lv[i]);
          out.factors.push_back({level, static_cast<int>(i), m});
        }
      if (!rest.is_constant()) throw InternalError("factor missing from the projection set: " + f.to_string());
      for (unsigned i = 0; i < m; ++i) out.constant *= rest.constant_value();
    }
    out.level = std::max(out.level, level + 1);
  }
  return out;
}

int CadTree::sign(int id, const FactoredPoly& f) const {
  int s = sgn(f.constant);
  for (const auto& r : f.factors) {
    int t = factor_sign(id, r.level, r.index);
    if (t == 0) return 0;
    if (r.mult % 2 == 1) s *= t;
  }
  return s;
}

std::vector<int> CadTree::cells_at_level(int level) {
  std::vector<int> out;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    if (nodes_[id].level == level) {
      out.push_back(id);
      continue;
    }
    const auto& ch = children(id);
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

Decomposition decompose(const std::vector<Polynomial>& polys, int n, const Config& cfg) {
  if (n < 1) throw DomainError("decompose: dimension must be positive");
  if (n > cfg.max_vars)
    throw CapExceeded("variable cap exceeded: " + std::to_string(n) + " variables, limit " + std::to_string(cfg.max_vars));
  ProjectionSet base{n, std::vector<std::vector<Polynomial>>(n)};
  for (const auto& p : polys) {
    if (p.main_var() >= n) throw DomainError("decompose: polynomial " + p.to_string() + " has variables outside R^" + std::to_string(n));
    if (static_cast<int>(p.total_degree()) > cfg.max_degree)
      throw CapExceeded("degree cap exceeded: degree " + std::to_string(p.total_degree()) + ", limit " + std::to_string(cfg.max_degree));
    base.add(p);
  }
  CadTree tree(compute_projection(std::move(base), cfg.projection), cfg.projection);
  std::vector<FactoredPoly> fp;
  for (const auto& p : polys) fp.push_back(tree.factor(p));
  Decomposition d{n, polys, {}};
  for (int id : tree.cells_at_level(n)) {
    const auto& nd = tree.node(id);
    Cell c{nd.index, nd.dim(), nd.sample, {}};
    for (const auto& f : fp) c.signs.push_back(tree.sign(id, f));
    d.cells.push_back(std::move(c));
  }
  return d;
}

}  // namespace tn
