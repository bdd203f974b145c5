#include "tn/poly_ops.hpp"

#include "tn/errors.hpp"

#include <algorithm>

namespace tn {

namespace {

bool try_divide(const Polynomial& a, const Polynomial& b, Polynomial* quotient) {
  if (b.is_zero()) throw InternalError("division by the zero polynomial");
  if (b.is_constant()) {
    if (quotient) *quotient = a.scaled(1 / b.constant_value());
    return true;
  }
  const auto& lb = b.leading_term();
  Polynomial r = a;
  std::vector<Polynomial::Term> q;
  while (!r.is_zero()) {
    const auto& lr = r.leading_term();
    if (!lb.mono.divides(lr.mono)) return false;
    Polynomial::Term t{lr.mono / lb.mono, lr.coeff / lb.coeff};
    q.push_back(t);
    r -= Polynomial::term(t.mono, t.coeff) * b;
  }
  if (quotient) *quotient = Polynomial::from_terms(std::move(q));
  return true;
}

}  // namespace

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  Polynomial q;
  if (!try_divide(a, b, &q)) throw InternalError("inexact polynomial division");
  return q;
}

bool divides(const Polynomial& b, const Polynomial& a) { return try_divide(a, b, nullptr); }

Polynomial prem(const Polynomial& a, const Polynomial& b, int var) {
  unsigned d = b.degree(var);
  if (b.is_zero()) throw InternalError("prem by zero");
  Polynomial lb = b.leading_coefficient(var);
  Polynomial r = a;
  int e = static_cast<int>(a.degree(var)) - static_cast<int>(d) + 1;
  if (e < 0) e = 0;
  while (!r.is_zero() && r.degree(var) >= d) {
    unsigned dr = r.degree(var);
    Monomial shift;
    shift.exp[var] = static_cast<std::uint16_t>(dr - d);
    Polynomial t = r.leading_coefficient(var) * Polynomial::term(shift, 1);
    r = lb * r - t * b;
    --e;
  }
  if (e > 0) r *= lb.pow(static_cast<unsigned>(e));
  return r;
}

std::pair<Rational, Polynomial> integer_primitive(const Polynomial& p) {
  if (p.is_zero()) return {Rational(0), Polynomial()};
  Integer den = 1, num = 0;
  for (const auto& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  for (const auto& t : p.terms()) {
    Integer v = t.coeff.get_num() * (den / t.coeff.get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
  }
  Rational c = make_rational(num, den);
  if (p.leading_term().coeff < 0) c = -c;
  return {c, p.scaled(1 / c)};
}

Polynomial normalized(const Polynomial& p) { return integer_primitive(p).second; }

Polynomial content(const Polynomial& p, int var) {
  Polynomial g;
  for (const auto& c : p.coefficients(var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Polynomial primitive_part(const Polynomial& p, int var) {
  if (p.is_zero()) return p;
  return divide_exact(p, content(p, var));
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  int v = std::max(a.main_var(), b.main_var());
  if (!a.involves(v)) return gcd(a, content(b, v));
  if (!b.involves(v)) return gcd(content(a, v), b);
  Polynomial ca = content(a, v), cb = content(b, v);
  Polynomial c = gcd(ca, cb);
  Polynomial pa = divide_exact(a, ca), pb = divide_exact(b, cb);
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  Polynomial g;
  while (true) {
    Polynomial r = prem(pa, pb, v);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (r.degree(v) == 0) {
      g = Polynomial(1);
      break;
    }
    pa = std::move(pb);
    pb = normalized(primitive_part(r, v));
  }
  return normalized(c * primitive_part(g, v));
}

namespace {

void collect_squarefree(const Polynomial& q, std::vector<std::pair<Polynomial, unsigned>>& out) {
  if (q.is_constant()) return;
  int v = q.main_var();
  Polynomial cont = content(q, v);
  collect_squarefree(cont, out);
  Polynomial b = divide_exact(q, cont);
  Polynomial d = b.derivative(v);
  Polynomial a0 = gcd(b, d);
  Polynomial bi = divide_exact(b, a0);
  Polynomial ci = divide_exact(d, a0);
  Polynomial di = ci - bi.derivative(v);
  for (unsigned i = 1; !bi.is_constant(); ++i) {
    Polynomial ai = gcd(bi, di);
    if (!ai.is_constant()) out.emplace_back(ai, i);
    bi = divide_exact(bi, ai);
    ci = divide_exact(di, ai);
    di = ci - bi.derivative(v);
  }
}

}  // namespace

Factorization squarefree_factors(const Polynomial& p) {
  Factorization f;
  if (p.is_constant()) {
    f.constant = p.constant_value();
    return f;
  }
  collect_squarefree(normalized(p), f.factors);
  std::sort(f.factors.begin(), f.factors.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  Rational lc_prod = 1;
  for (const auto& [g, m] : f.factors) {
    Rational l = g.leading_term().coeff;
    for (unsigned i = 0; i < m; ++i) lc_prod *= l;
  }
  f.constant = p.leading_term().coeff / lc_prod;
  return f;
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  Polynomial out(1);
  for (const auto& [g, m] : squarefree_factors(p).factors) out *= g;
  return normalized(out);
}

Polynomial determinant(std::vector<std::vector<Polynomial>> m) {
  std::size_t n = m.size();
  if (n == 0) return Polynomial(1);
  bool negate = false;
  Polynomial prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t i = k + 1;
      while (i < n && m[i][k].is_zero()) ++i;
      if (i == n) return Polynomial();
      std::swap(m[i], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = divide_exact(v, prev);
      }
      m[i][k] = Polynomial();
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

namespace {

// Rows: (deg q - j) shifted copies of p over (deg p - j) shifted copies of q;
// columns: the first (deg p + deg q - 2j) powers, highest first.
std::vector<std::vector<Polynomial>> subresultant_matrix(const Polynomial& p, const Polynomial& q, int var,
                                                         unsigned j) {
  unsigned m = p.degree(var), n = q.degree(var);
  auto cp = p.coefficients(var), cq = q.coefficients(var);
  unsigned size = m + n - 2 * j;
  std::vector<std::vector<Polynomial>> mat(size, std::vector<Polynomial>(size));
  for (unsigned i = 0; i < n - j; ++i)
    for (unsigned k = 0; k <= m; ++k) {
      unsigned col = i + (m - k);
      if (col < size) mat[i][col] = cp[k];
    }
  for (unsigned i = 0; i < m - j; ++i)
    for (unsigned k = 0; k <= n; ++k) {
      unsigned col = i + (n - k);
      if (col < size) mat[n - j + i][col] = cq[k];
    }
  return mat;
}

}  // namespace

std::vector<std::vector<Polynomial>> sylvester_matrix(const Polynomial& p, const Polynomial& q, int var) {
  return subresultant_matrix(p, q, var, 0);
}

Polynomial resultant(const Polynomial& p, const Polynomial& q, int var) {
  if (p.is_zero() || q.is_zero()) return Polynomial();
  if (p.degree(var) == 0 && q.degree(var) == 0)
    throw DomainError("resultant: both polynomials are constant in the eliminated variable");
  return determinant(sylvester_matrix(p, q, var));
}

Polynomial psc(const Polynomial& p, const Polynomial& q, int var, unsigned j) {
  unsigned m = p.degree(var), n = q.degree(var);
  if (j > std::min(m, n)) throw InternalError("psc index out of range");
  return determinant(subresultant_matrix(p, q, var, j));
}

Polynomial discriminant(const Polynomial& p, int var) { return resultant(p, p.derivative(var), var); }

}  // namespace tn
