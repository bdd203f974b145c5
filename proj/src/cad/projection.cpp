#include "tn/cad.hpp"
#include "tn/errors.hpp"
#include "tn/poly_ops.hpp"

#include <algorithm>

namespace tn {

bool ProjectionSet::add(const Polynomial& p) {
  if (p.is_constant()) return false;
  bool added = false;
  for (const auto& [f, m] : squarefree_factors(p).factors) {
    int level = f.main_var();
    if (level >= n) throw InternalError("projection: polynomial outside the ambient space");
    auto& lv = levels[level];
    if (std::find(lv.begin(), lv.end(), f) == lv.end()) {
      lv.push_back(f);
      added = true;
    }
  }
  return added;
}

std::size_t ProjectionSet::size() const {
  std::size_t s = 0;
  for (const auto& l : levels) s += l.size();
  return s;
}

namespace {

Polynomial reductum(const Polynomial& f, int var) {
  auto c = f.coefficients(var);
  c.pop_back();
  return Polynomial::from_coefficients(var, c);
}

void add_derivatives(ProjectionSet& ps, int level) {
  std::vector<Polynomial> current = ps.levels[level];
  for (const auto& f : current) {
    Polynomial d = f.derivative(level);
    while (d.involves(level)) {
      ps.add(d);
      d = d.derivative(level);
    }
  }
}

void collins_hong(ProjectionSet& ps, int k) {
  const std::vector<Polynomial> a = ps.levels[k];
  for (const auto& f : a) {
    for (Polynomial r = f; !r.is_zero(); r = reductum(r, k)) {
      Polynomial lc = r.leading_coefficient(k);
      ps.add(lc);
      unsigned d = r.degree(k);
      if (d >= 2) {
        Polynomial dr = r.derivative(k);
        for (unsigned j = 0; j + 1 < d; ++j) ps.add(psc(r, dr, k, j));
      }
      if (lc.is_constant() || d == 0) break;
    }
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const Polynomial& g = a[j];
      for (Polynomial r = a[i]; !r.is_zero(); r = reductum(r, k)) {
        unsigned d = r.degree(k);
        if (d == 0) break;
        unsigned m = std::min(d, g.degree(k));
        for (unsigned t = 0; t < m; ++t) ps.add(psc(r, g, k, t));
        if (r.leading_coefficient(k).is_constant()) break;
      }
    }
}

// Splits the level into pairwise coprime squarefree factors.
void make_coprime(ProjectionSet& ps, int k) {
  auto& lv = ps.levels[k];
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < lv.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < lv.size() && !changed; ++j) {
        Polynomial g = gcd(lv[i], lv[j]);
        if (g.is_constant()) continue;
        Polynomial a = divide_exact(lv[i], g), b = divide_exact(lv[j], g);
        std::vector<Polynomial> next;
        for (std::size_t t = 0; t < lv.size(); ++t)
          if (t != i && t != j) next.push_back(lv[t]);
        lv = next;
        for (const auto& p : {g, a, b})
          if (!p.is_constant()) ps.add(p);
        changed = true;
      }
  }
}

void mccallum(ProjectionSet& ps, int k) {
  make_coprime(ps, k);
  const std::vector<Polynomial> a = ps.levels[k];
  for (const auto& f : a) {
    for (const auto& c : f.coefficients(k)) ps.add(c);
    if (f.degree(k) >= 2) ps.add(discriminant(f, k));
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) ps.add(resultant(a[i], a[j], k));
}

}  // namespace

ProjectionSet compute_projection(ProjectionSet ps, Projection kind, const std::set<int>& closed_levels) {
  for (int k = ps.n - 1; k >= 0; --k) {
    if (closed_levels.count(k)) add_derivatives(ps, k);
    if (k == 0) {
      if (kind == Projection::McCallum) make_coprime(ps, 0);
      break;
    }
    if (kind == Projection::Collins) collins_hong(ps, k);
    else mccallum(ps, k);
  }
  return ps;
}

ProjectionSet compute_projection(ProjectionSet base, Projection kind) {
  return compute_projection(std::move(base), kind, {});
}

ProjectionSet compute_projection(const std::vector<Polynomial>& polys, int n, Projection kind) {
  ProjectionSet ps{n, std::vector<std::vector<Polynomial>>(n)};
  for (const auto& p : polys) ps.add(p);
  return compute_projection(std::move(ps), kind);
}

}  // namespace tn
