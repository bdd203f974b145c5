#include "tn/errors.hpp"
#include "tn/liecoh.hpp"

#include <algorithm>
#include <map>

namespace tn {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool QMatrix::is_zero() const {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

QMatrix operator*(const QMatrix& x, const QMatrix& y) {
  if (x.cols != y.rows) throw InternalError("matrix product: shape mismatch");
  QMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Rational& v = x(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        if (y(k, j) != 0) r(i, j) += v * y(k, j);
    }
  return r;
}

QMatrix operator+(const QMatrix& x, const QMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw InternalError("matrix sum: shape mismatch");
  QMatrix r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

QMatrix operator-(const QMatrix& x, const QMatrix& y) { return x + scaled(y, -1); }

QMatrix scaled(const QMatrix& x, const Rational& s) {
  QMatrix r = x;
  for (auto& v : r.a) v *= s;
  return r;
}

namespace {

// Integer rows: each row scaled by the lcm of its denominators.
std::vector<std::vector<Integer>> integer_rows(const QMatrix& m) {
  std::vector<std::vector<Integer>> rows(m.rows, std::vector<Integer>(m.cols));
  for (int i = 0; i < m.rows; ++i) {
    Integer l = 1;
    for (int j = 0; j < m.cols; ++j) l = lcm(l, m(i, j).get_den());
    for (int j = 0; j < m.cols; ++j) rows[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return rows;
}

// Bareiss elimination to row echelon form; returns pivot columns.
std::vector<int> bareiss(std::vector<std::vector<Integer>>& a, int cols) {
  std::vector<int> pivots;
  Integer prev = 1;
  int r = 0;
  const int rows = static_cast<int>(a.size());
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        a[i][j] = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

// Sparse rows reduced one at a time against monic pivot rows keyed by leading column.
int rank(const QMatrix& m) {
  using Row = std::vector<std::pair<int, Rational>>;
  std::map<int, Row> pivot;
  std::vector<Row> rows(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m(i, j) != 0) rows[i].emplace_back(j, m(i, j));
  std::stable_sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) { return x.size() < y.size(); });
  for (auto& r : rows) {
    while (!r.empty()) {
      auto it = pivot.find(r.front().first);
      if (it == pivot.end()) {
        Rational lead = r.front().second;
        for (auto& e : r) e.second /= lead;
        pivot.emplace(r.front().first, std::move(r));
        break;
      }
      const Row& p = it->second;
      Rational f = r.front().second;
      Row out;
      out.reserve(r.size() + p.size());
      std::size_t a = 0, b = 0;
      while (a < r.size() || b < p.size()) {
        if (b == p.size() || (a < r.size() && r[a].first < p[b].first)) {
          out.push_back(std::move(r[a++]));
        } else if (a == r.size() || p[b].first < r[a].first) {
          out.emplace_back(p[b].first, -f * p[b].second);
          ++b;
        } else {
          Rational v = r[a].second - f * p[b].second;
          if (v != 0) out.emplace_back(r[a].first, std::move(v));
          ++a;
          ++b;
        }
      }
      r = std::move(out);
    }
  }
  return static_cast<int>(pivot.size());
}

std::vector<std::vector<Rational>> nullspace(const QMatrix& m) {
  auto rows = integer_rows(m);
  auto pivots = bareiss(rows, m.cols);
  const int r = static_cast<int>(pivots.size());
  // Back-substitute over Q on the echelon form.
  std::vector<std::vector<Rational>> e(r, std::vector<Rational>(m.cols));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < m.cols; ++j) e[i][j] = Rational(rows[i][j]);
  for (int i = r - 1; i >= 0; --i) {
    Rational p = e[i][pivots[i]];
    for (auto& v : e[i]) v /= p;
    for (int k = 0; k < i; ++k) {
      Rational f = e[k][pivots[i]];
      if (f == 0) continue;
      for (int j = 0; j < m.cols; ++j) e[k][j] -= f * e[i][j];
    }
  }
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> out;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols);
    v[free] = 1;
    for (int i = 0; i < r; ++i) v[pivots[i]] = -e[i][free];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace tn
