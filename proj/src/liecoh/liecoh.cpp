#include "tn/errors.hpp"
#include "tn/liecoh.hpp"

#include <algorithm>
#include <map>

namespace tn {

void LieAlgebra::set_bracket(int i, int j, const std::vector<Rational>& v) {
  if (static_cast<int>(v.size()) != dim) throw DomainError("bracket vector has the wrong length");
  for (int k = 0; k < dim; ++k) {
    (*this)(i, j, k) = v[k];
    (*this)(j, i, k) = -v[k];
  }
}

LieAlgebra LieAlgebra::abelian(int n) { return LieAlgebra(n); }

LieAlgebra LieAlgebra::sl2() {
  LieAlgebra g(3);
  g.set_bracket(2, 0, {2, 0, 0});
  g.set_bracket(2, 1, {0, -2, 0});
  g.set_bracket(0, 1, {0, 0, 1});
  return g;
}

LieAlgebra LieAlgebra::heisenberg() {
  LieAlgebra g(3);
  g.set_bracket(0, 1, {0, 0, 1});
  return g;
}

LieAlgebra LieAlgebra::affine_line() {
  LieAlgebra g(2);
  g.set_bracket(0, 1, {0, 1});
  return g;
}

Representation Representation::trivial(const LieAlgebra& g, int m) {
  Representation r;
  r.dim = m;
  r.action.assign(g.dim, QMatrix(m, m));
  return r;
}

Representation Representation::adjoint(const LieAlgebra& g) {
  Representation r;
  r.dim = g.dim;
  for (int i = 0; i < g.dim; ++i) {
    QMatrix a(g.dim, g.dim);
    for (int j = 0; j < g.dim; ++j)
      for (int k = 0; k < g.dim; ++k) a(k, j) = g(i, j, k);
    r.action.push_back(std::move(a));
  }
  return r;
}

Representation Representation::sl2_irrep(int m) {
  if (m < 1) throw DomainError("sl2_irrep: dimension must be positive");
  const int d = m - 1;
  QMatrix e(m, m), f(m, m), h(m, m);
  for (int k = 0; k < m; ++k) {
    h(k, k) = d - 2 * k;
    if (k + 1 < m) f(k + 1, k) = 1;
    if (k > 0) e(k - 1, k) = k * (d - k + 1);
  }
  return Representation{m, {e, f, h}};
}

bool validate_lie_algebra(const LieAlgebra& g) {
  const int n = g.dim;
  if (static_cast<int>(g.c.size()) != n * n * n) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (g(i, j, k) != -g(j, i, k)) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int l = j + 1; l < n; ++l)
        for (int p = 0; p < n; ++p) {
          Rational s = 0;
          for (int m = 0; m < n; ++m)
            s += g(j, l, m) * g(i, m, p) + g(l, i, m) * g(j, m, p) + g(i, j, m) * g(l, m, p);
          if (s != 0) return false;
        }
  return true;
}

bool validate_representation(const LieAlgebra& g, const Representation& rho) {
  if (static_cast<int>(rho.action.size()) != g.dim) return false;
  for (const auto& a : rho.action)
    if (a.rows != rho.dim || a.cols != rho.dim) return false;
  for (int i = 0; i < g.dim; ++i)
    for (int j = i + 1; j < g.dim; ++j) {
      QMatrix lhs = rho.action[i] * rho.action[j] - rho.action[j] * rho.action[i];
      QMatrix rhs(rho.dim, rho.dim);
      for (int k = 0; k < g.dim; ++k)
        if (g(i, j, k) != 0) rhs = rhs + scaled(rho.action[k], g(i, j, k));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

bool is_unimodular(const LieAlgebra& g) {
  for (int i = 0; i < g.dim; ++i) {
    Rational tr = 0;
    for (int k = 0; k < g.dim; ++k) tr += g(i, k, k);
    if (tr != 0) return false;
  }
  return true;
}

namespace {

// y * x == 0, walking only the nonzeros of both factors.
bool product_vanishes(const QMatrix& y, const QMatrix& x) {
  std::vector<std::vector<std::pair<int, const Rational*>>> xrows(x.rows);
  for (int k = 0; k < x.rows; ++k)
    for (int j = 0; j < x.cols; ++j)
      if (x(k, j) != 0) xrows[k].emplace_back(j, &x(k, j));
  std::vector<Rational> acc(x.cols);
  std::vector<int> touched;
  for (int i = 0; i < y.rows; ++i) {
    touched.clear();
    for (int k = 0; k < y.cols; ++k) {
      const Rational& v = y(i, k);
      if (v == 0) continue;
      for (const auto& [j, w] : xrows[k]) {
        acc[j] += v * *w;
        touched.push_back(j);
      }
    }
    bool zero = true;
    for (int j : touched) {
      if (acc[j] != 0) zero = false;
      acc[j] = 0;
    }
    if (!zero) return false;
  }
  return true;
}

}  // namespace

bool is_complex(const CochainComplex& c) {
  for (std::size_t k = 0; k + 1 < c.diffs.size(); ++k)
    if (!product_vanishes(c.diffs[k + 1], c.diffs[k])) return false;
  return true;
}

namespace {

using Mask = unsigned;

std::vector<Mask> subsets_of_size(int n, int k) {
  std::vector<Mask> out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mask m = 0;
    for (int i : idx) m |= 1u << i;
    out.push_back(m);
    int p = k - 1;
    while (p >= 0 && idx[p] == n - k + p) --p;
    if (p < 0) break;
    ++idx[p];
    for (int i = p + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

std::vector<int> members(Mask m) {
  std::vector<int> out;
  for (int i = 0; m >> i; ++i)
    if (m >> i & 1u) out.push_back(i);
  return out;
}

int below(Mask m, int i) { return __builtin_popcount(m & ((1u << i) - 1)); }

void check_shapes(const CochainComplex& c) {
  if (c.diffs.size() + 1 != c.spaces.size()) throw DomainError("complex: need one differential per consecutive pair");
  for (std::size_t k = 0; k < c.diffs.size(); ++k)
    if (c.diffs[k].cols != c.spaces[k] || c.diffs[k].rows != c.spaces[k + 1])
      throw DomainError("complex: differential " + std::to_string(k) + " has the wrong shape");
}

}  // namespace

CochainComplex ce_complex(const LieAlgebra& g, const Representation& rho, ActionSign sign) {
  if (!validate_lie_algebra(g)) throw DomainError("ce_complex: structure constants fail antisymmetry or Jacobi");
  if (!validate_representation(g, rho)) throw DomainError("ce_complex: matrices do not define a representation");
  const int n = g.dim, m = rho.dim;
  if (n > 16) throw DomainError("ce_complex: algebra dimension above 16");
  std::vector<std::vector<Mask>> basis(n + 1);
  std::map<Mask, int> pos;
  for (int k = 0; k <= n; ++k) {
    basis[k] = subsets_of_size(n, k);
    for (std::size_t i = 0; i < basis[k].size(); ++i) pos[basis[k][i]] = static_cast<int>(i);
  }
  CochainComplex c;
  for (int k = 0; k <= n; ++k) c.spaces.push_back(static_cast<int>(basis[k].size()) * m);
  for (int k = 0; k < n; ++k) {
    QMatrix d(c.spaces[k + 1], c.spaces[k]);
    for (std::size_t row = 0; row < basis[k + 1].size(); ++row) {
      const Mask J = basis[k + 1][row];
      const std::vector<int> js = members(J);
      for (int p = 0; p <= k; ++p) {
        int col = pos[J & ~(1u << js[p])];
        // (-1)^(i+1) with i = p + 1 is (-1)^p.
        int s = (p % 2 == 0) ? 1 : -1;
        if (sign == ActionSign::Verbatim) s = -s;
        const QMatrix& a = rho.action[js[p]];
        for (int r = 0; r < m; ++r)
          for (int b = 0; b < m; ++b)
            if (a(r, b) != 0) d(static_cast<int>(row) * m + r, col * m + b) += s * a(r, b);
      }
      for (int p = 0; p <= k; ++p)
        for (int q = p + 1; q <= k; ++q) {
          const Mask rest = J & ~(1u << js[p]) & ~(1u << js[q]);
          const int s = ((p + q) % 2 == 0) ? 1 : -1;
          for (int t = 0; t < n; ++t) {
            const Rational& coef = g(js[p], js[q], t);
            if (coef == 0 || (rest >> t & 1u)) continue;
            int col = pos[rest | (1u << t)];
            Rational v = coef * ((below(rest, t) % 2 == 0) ? s : -s);
            for (int r = 0; r < m; ++r) d(static_cast<int>(row) * m + r, col * m + r) += v;
          }
        }
    }
    c.diffs.push_back(std::move(d));
  }
  return c;
}

int CohomologyReport::euler_cochains() const {
  int s = 0;
  for (std::size_t k = 0; k < spaces.size(); ++k) s += (k % 2 == 0 ? 1 : -1) * spaces[k];
  return s;
}

int CohomologyReport::euler_cohomology() const {
  int s = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) s += (k % 2 == 0 ? 1 : -1) * dims[k];
  return s;
}

CohomologyReport cohomology(const CochainComplex& c) {
  check_shapes(c);
  for (std::size_t k = 0; k + 1 < c.diffs.size(); ++k)
    if (!product_vanishes(c.diffs[k + 1], c.diffs[k]))
      throw DomainError("invalid complex: D^2 != 0 from degree " + std::to_string(k));
  std::vector<int> r;
  for (const auto& d : c.diffs) r.push_back(rank(d));
  CohomologyReport rep;
  rep.spaces = c.spaces;
  for (std::size_t k = 0; k < c.spaces.size(); ++k) {
    int out = k < r.size() ? r[k] : 0;
    int in = k > 0 ? r[k - 1] : 0;
    rep.dims.push_back(c.spaces[k] - out - in);
  }
  if (rep.euler_cochains() != rep.euler_cohomology()) throw InternalError("cohomology: Euler characteristic not conserved");
  return rep;
}

namespace {

// Exponent vectors of total degree d in n variables, lexicographically decreasing.
void monomials(int n, int d, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n - 1) {
    cur.push_back(d);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur.push_back(e);
    monomials(n, d - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

CochainComplex polynomial_derham_weight(int n, int w) {
  if (n < 1 || n > 16) throw DomainError("polynomial_derham_weight: need 1 <= n <= 16");
  if (w < 0) throw DomainError("polynomial_derham_weight: weight must be nonnegative");
  struct Form {
    std::vector<int> exp;
    Mask dx;
  };
  std::vector<std::vector<Form>> basis(n + 1);
  std::vector<std::map<std::pair<std::vector<int>, Mask>, int>> pos(n + 1);
  for (int k = 0; k <= n; ++k) {
    if (w - k < 0) continue;
    std::vector<std::vector<int>> mons;
    std::vector<int> cur;
    monomials(n, w - k, cur, mons);
    for (Mask I : subsets_of_size(n, k))
      for (const auto& e : mons) {
        pos[k][{e, I}] = static_cast<int>(basis[k].size());
        basis[k].push_back({e, I});
      }
  }
  CochainComplex c;
  for (int k = 0; k <= n; ++k) c.spaces.push_back(static_cast<int>(basis[k].size()));
  for (int k = 0; k < n; ++k) {
    QMatrix d(c.spaces[k + 1], c.spaces[k]);
    for (std::size_t col = 0; col < basis[k].size(); ++col) {
      const Form& f = basis[k][col];
      for (int i = 0; i < n; ++i) {
        if (f.exp[i] == 0 || (f.dx >> i & 1u)) continue;
        std::vector<int> e = f.exp;
        --e[i];
        int row = pos[k + 1].at({e, f.dx | (1u << i)});
        d(row, static_cast<int>(col)) += (below(f.dx, i) % 2 == 0 ? 1 : -1) * f.exp[i];
      }
    }
    c.diffs.push_back(std::move(d));
  }
  return c;
}

LieAlgebra subalgebra(const LieAlgebra& g, const QMatrix& basis) {
  if (basis.rows != g.dim) throw DomainError("subalgebra: basis vectors have the wrong length");
  const int r = basis.cols;
  if (rank(basis) != r) throw DomainError("subalgebra: basis vectors are dependent");
  LieAlgebra h(r);
  for (int p = 0; p < r; ++p)
    for (int q = 0; q < r; ++q) {
      QMatrix aug(g.dim, r + 1);
      for (int i = 0; i < g.dim; ++i)
        for (int j = 0; j < r; ++j) aug(i, j) = basis(i, j);
      for (int i = 0; i < g.dim; ++i)
        for (int j = 0; j < g.dim; ++j) {
          Rational f = basis(i, p) * basis(j, q);
          if (f == 0) continue;
          for (int k = 0; k < g.dim; ++k) aug(k, r) += f * g(i, j, k);
        }
      auto ns = nullspace(aug);
      auto it = std::find_if(ns.begin(), ns.end(), [&](const auto& v) { return v[r] != 0; });
      if (it == ns.end()) throw DomainError("subalgebra: span is not closed under the bracket");
      for (int k = 0; k < r; ++k) h(p, q, k) = -(*it)[k] / (*it)[r];
    }
  return h;
}

Representation restrict(const Representation& rho, const QMatrix& basis) {
  if (basis.rows != static_cast<int>(rho.action.size())) throw DomainError("restrict: basis vectors have the wrong length");
  Representation out;
  out.dim = rho.dim;
  for (int p = 0; p < basis.cols; ++p) {
    QMatrix a(rho.dim, rho.dim);
    for (int i = 0; i < basis.rows; ++i)
      if (basis(i, p) != 0) a = a + scaled(rho.action[i], basis(i, p));
    out.action.push_back(std::move(a));
  }
  return out;
}

LieAlgebra semidirect(const LieAlgebra& s, const Representation& rho) {
  if (!validate_representation(s, rho)) throw DomainError("semidirect: matrices do not define a representation");
  const int a = s.dim, n = s.dim + rho.dim;
  LieAlgebra g(n);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < a; ++j)
      for (int k = 0; k < a; ++k) g(i, j, k) = s(i, j, k);
  for (int i = 0; i < a; ++i)
    for (int v = 0; v < rho.dim; ++v)
      for (int w = 0; w < rho.dim; ++w) {
        g(i, a + v, a + w) = rho.action[i](w, v);
        g(a + v, i, a + w) = -rho.action[i](w, v);
      }
  return g;
}

ShapiroReport shapiro_degenerate_check(const LieAlgebra& g, const Representation& rho) {
  ShapiroReport rep;
  rep.direct = cohomology(ce_complex(g, rho)).dims;

  // M is a point: the infinitesimal action g -> T_x M = 0 has the whole of g as its kernel.
  QMatrix action_on_point(0, g.dim);
  auto stab = nullspace(action_on_point);
  QMatrix basis(g.dim, static_cast<int>(stab.size()));
  for (int j = 0; j < basis.cols; ++j)
    for (int i = 0; i < g.dim; ++i) basis(i, j) = stab[j][i];
  LieAlgebra h = subalgebra(g, basis);
  // Coinduction from h = g is the identity on V: f -> f(1).
  Representation v = restrict(rho, basis);
  rep.relative = cohomology(ce_complex(h, v)).dims;
  if (rep.direct != rep.relative) throw InternalError("shapiro_degenerate_check: the two routes disagree");
  return rep;
}

DualityReport poincare_duality_dims(const LieAlgebra& g) {
  DualityReport rep;
  rep.unimodular = is_unimodular(g);
  if (!rep.unimodular) return rep;
  rep.dims = cohomology(ce_complex(g, Representation::trivial(g))).dims;
  rep.symmetric = std::equal(rep.dims.begin(), rep.dims.end(), rep.dims.rbegin());
  return rep;
}

}  // namespace tn
