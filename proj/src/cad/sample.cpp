#include "tn/sample.hpp"

#include "tn/errors.hpp"
#include "tn/poly_ops.hpp"

#include <algorithm>

namespace tn {

namespace {

Interval mul(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval power(const Interval& a, unsigned e) {
  if (e == 0) return {1, 1};
  Rational lo = 1, hi = 1;
  for (unsigned i = 0; i < e; ++i) {
    lo *= a.lo;
    hi *= a.hi;
  }
  if (e % 2 == 1) return {lo, hi};
  if (a.lo >= 0) return {lo, hi};
  if (a.hi <= 0) return {hi, lo};
  return {0, std::max(lo, hi)};
}

Interval box_of(const AlgebraicNumber& a) {
  if (a.is_rational()) return {a.rational_value(), a.rational_value()};
  return {a.lo(), a.hi()};
}

Polynomial as_poly(const AlgebraicNumber& a, int var) { return a.poly().to_polynomial(var); }

// Working copy of a sample point that refines the coordinates p depends on.
struct Refiner {
  std::vector<AlgebraicNumber> pt;
  Polynomial q;

  Refiner(const Polynomial& p, std::span<const AlgebraicNumber> point)
      : pt(point.begin(), point.end()), q(substitute_rationals(p, point)) {}

  Interval eval() const {
    std::vector<Interval> boxes;
    boxes.reserve(pt.size());
    for (const auto& a : pt) boxes.push_back(box_of(a));
    return eval_interval(q, boxes);
  }

  void refine() {
    for (int v : q.variables()) {
      pt[v] = pt[v].refined();
      if (pt[v].is_rational()) q = q.substitute(v, pt[v].rational_value());
    }
  }

  // Shrinks every coordinate interval below 2^-bits.
  void refine_to(long bits) {
    Rational w;
    mpq_div_2exp(w.get_mpq_t(), Rational(1).get_mpq_t(), static_cast<mp_bitcnt_t>(bits));
    for (int v : q.variables()) {
      pt[v] = pt[v].refined_to(w);
      if (pt[v].is_rational()) q = q.substitute(v, pt[v].rational_value());
    }
  }

  // 0 when undecided.
  int interval_sign() const {
    Interval i = eval();
    if (i.lo > 0) return 1;
    if (i.hi < 0) return -1;
    return 0;
  }
};

int exact_small_cases(const Refiner& r, bool* decided) {
  *decided = true;
  if (r.q.is_constant()) return sgn(r.q.constant_value());
  auto vars = r.q.variables();
  if (vars.size() == 1) return sign_at(UPoly::from_polynomial(r.q, vars[0]), r.pt[vars[0]]);
  *decided = false;
  return 0;
}

long log2_ceil(const Rational& x) {
  Integer c = ceil(x);
  if (c <= 1) return 0;
  return static_cast<long>(mpz_sizeinbase(Integer(c - 1).get_mpz_t(), 2));
}

// Bits K such that q(pt) != 0 implies |q(pt)| >= 2^-K. Bounds the integer
// polynomial whose roots are q at all conjugates of the coordinates.
long separation_bits(const Polynomial& q0, std::span<const AlgebraicNumber> pt) {
  Integer den = 1;
  for (const auto& t : q0.terms()) den = lcm(den, t.coeff.get_den());
  auto vars = q0.variables();
  Integer degree = 1;
  for (int v : vars) degree *= pt[v].poly().degree();
  std::vector<Rational> rho(kMaxVars, Rational(1));
  long lead_bits = 0;
  for (int v : vars) {
    const UPoly& m = pt[v].poly();
    Rational lc = abs(m.lead()), mx = 0;
    for (int j = 0; j < m.degree(); ++j) mx = std::max(mx, Rational(abs(m.coeffs()[j]) / lc));
    rho[v] = 1 + mx;
    Integer copies = degree / m.degree();
    lead_bits += static_cast<long>(q0.degree(v)) * copies.get_si() * log2_ceil(lc);
  }
  Rational bound = 0;
  for (const auto& t : q0.terms()) {
    Rational term = abs(t.coeff) * den;
    for (int v : vars)
      for (unsigned e = 0; e < t.mono.exp[v]; ++e) term *= rho[v];
    bound += term;
  }
  return lead_bits + degree.get_si() * (log2_ceil(1 + bound) + 1) + log2_ceil(Rational(den)) + 2;
}

int spare_variable(const std::vector<int>& used) {
  for (int v = 0; v < kMaxVars; ++v)
    if (std::find(used.begin(), used.end(), v) == used.end()) return v;
  throw CapExceeded("no spare variable for algebraic elimination");
}

// Eliminates the listed variables from q by resultants with their defining polynomials.
Polynomial eliminate(Polynomial q, const std::vector<int>& vars, std::span<const AlgebraicNumber> pt) {
  for (int v : vars) {
    if (!q.involves(v)) continue;
    q = resultant(q, as_poly(pt[v], v), v);
    if (q.is_zero()) return q;
  }
  return q;
}

}  // namespace

Interval eval_interval(const Polynomial& p, std::span<const Interval> boxes) {
  Interval acc{0, 0};
  for (const auto& t : p.terms()) {
    Interval term{t.coeff, t.coeff};
    for (int v = 0; v < kMaxVars; ++v) {
      if (t.mono.exp[v] == 0) continue;
      if (v >= static_cast<int>(boxes.size())) throw InternalError("eval_interval: variable outside the box");
      term = mul(term, power(boxes[v], t.mono.exp[v]));
    }
    acc.lo += term.lo;
    acc.hi += term.hi;
  }
  return acc;
}

Polynomial substitute_rationals(const Polynomial& p, std::span<const AlgebraicNumber> pt) {
  Polynomial q = p;
  for (int v : p.variables())
    if (v < static_cast<int>(pt.size()) && pt[v].is_rational()) q = q.substitute(v, pt[v].rational_value());
  return q;
}

int sign_nonzero_at_point(const Polynomial& p, std::span<const AlgebraicNumber> pt) {
  Refiner r(p, pt);
  for (long prec = 8;; prec *= 2) {
    bool decided;
    int s = exact_small_cases(r, &decided);
    if (decided) return s;
    if (int t = r.interval_sign()) return t;
    r.refine_to(prec);
  }
}

int sign_at_point(const Polynomial& p, std::span<const AlgebraicNumber> pt) {
  Refiner r(p, pt);
  for (int round = 0; round < 6; ++round) {
    bool decided;
    int s = exact_small_cases(r, &decided);
    if (decided) return s;
    if (int t = r.interval_sign()) return t;
    r.refine();
  }
  bool decided;
  int s = exact_small_cases(r, &decided);
  if (decided) return s;

  // A nonzero value of q at the point is at least 2^-bits in magnitude.
  const long bits = separation_bits(r.q, r.pt);
  Rational eps;
  mpq_div_2exp(eps.get_mpq_t(), Rational(1).get_mpq_t(), static_cast<mp_bitcnt_t>(bits));
  for (long prec = 16;; prec *= 2) {
    s = exact_small_cases(r, &decided);
    if (decided) return s;
    Interval i = r.eval();
    if (i.lo > 0) return 1;
    if (i.hi < 0) return -1;
    if (-eps < i.lo && i.hi < eps) return 0;
    r.refine_to(prec);
  }
}

std::vector<AlgebraicNumber> roots_over(const Polynomial& p, std::span<const AlgebraicNumber> pt, bool& nullified) {
  nullified = false;
  int y = static_cast<int>(pt.size());
  Polynomial q = substitute_rationals(p, pt);
  auto coeffs = q.coefficients(y);
  int d = static_cast<int>(coeffs.size()) - 1;
  while (d >= 0 && sign_at_point(coeffs[d], pt) == 0) --d;
  if (d < 0) {
    nullified = true;
    return {};
  }
  if (d == 0) return {};
  coeffs.resize(d + 1);
  Polynomial g = Polynomial::from_coefficients(y, coeffs);

  std::vector<int> irr;
  for (int v : g.variables())
    if (v != y) irr.push_back(v);
  if (irr.empty()) return AlgebraicNumber::roots_of(UPoly::from_polynomial(g, y));

  Polynomial norm = eliminate(g, irr, pt);
  if (norm.is_zero()) {
    std::vector<int> used = irr;
    used.push_back(y);
    int w = spare_variable(used);
    Polynomial nw = eliminate(g + Polynomial::variable(w), irr, pt);
    for (const auto& c : nw.coefficients(w))
      if (!c.is_zero()) {
        norm = c;
        break;
      }
  }
  if (norm.is_zero() || norm.is_constant()) {
    if (norm.is_zero()) throw InternalError("roots_over: vanishing norm");
    return {};
  }
  std::vector<AlgebraicNumber> out;
  std::vector<AlgebraicNumber> point(pt.begin(), pt.end());
  point.emplace_back();
  for (auto& cand : AlgebraicNumber::roots_of(UPoly::from_polynomial(norm, y))) {
    point.back() = cand;
    if (sign_at_point(g, point) == 0) out.push_back(cand);
  }
  return out;
}

}  // namespace tn
