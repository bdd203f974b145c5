#include "tn/algebraic.hpp"

#include "tn/errors.hpp"
#include "tn/factor.hpp"

#include <algorithm>
#include <sstream>

namespace tn {

AlgebraicNumber::AlgebraicNumber(const Rational& q) : lo_(q), hi_(q) {}

const Rational& AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw InternalError("rational_value of an irrational algebraic number");
  return lo_;
}

AlgebraicNumber AlgebraicNumber::root_of(const UPoly& p, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw InternalError("root_of: empty interval");
  UPoly q = squarefree_part(p);
  if (q.sign_at(lo) == 0 || q.sign_at(hi) == 0) throw InternalError("root_of: endpoint is a root");
  if (count_roots(sturm_sequence(q), lo, hi) != 1) throw InternalError("root_of: interval does not isolate one root");
  for (const auto& f : irreducible_factors(q)) {
    if (count_roots(sturm_sequence(f), lo, hi) == 0) continue;
    if (f.degree() == 1) return AlgebraicNumber(-f.coeffs()[0] / f.coeffs()[1]);
    AlgebraicNumber a;
    a.lo_ = lo;
    a.hi_ = hi;
    a.poly_ = f;
    a.sign_hi_ = f.sign_at(hi);
    return a;
  }
  throw InternalError("root_of: no factor has the root");
}

std::vector<AlgebraicNumber> AlgebraicNumber::roots_of(const UPoly& p) {
  std::vector<AlgebraicNumber> out;
  if (p.degree() <= 0) return out;
  for (const auto& f : irreducible_factors(p)) {
    for (const auto& iv : isolate_real_roots(f)) {
      if (iv.lo == iv.hi) {
        out.emplace_back(iv.lo);
        continue;
      }
      AlgebraicNumber a;
      a.lo_ = iv.lo;
      a.hi_ = iv.hi;
      a.poly_ = f;
      a.sign_hi_ = f.sign_at(iv.hi);
      out.push_back(std::move(a));
    }
  }
  std::sort(out.begin(), out.end(), [](const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) < 0; });
  return out;
}

AlgebraicNumber AlgebraicNumber::refined() const {
  if (is_rational()) return *this;
  Rational m = (lo_ + hi_) / 2;
  int s = poly_.sign_at(m);
  if (s == 0) return AlgebraicNumber(m);
  AlgebraicNumber a = *this;
  if (s == sign_hi_) a.hi_ = m;
  else a.lo_ = m;
  return a;
}

AlgebraicNumber AlgebraicNumber::refined_to(const Rational& width) const {
  if (is_rational()) return *this;
  // Quadratic interval refinement: a secant guess snapped to a grid of n
  // cells; n squares on success and falls back to bisection on failure.
  AlgebraicNumber a = *this;
  Integer n = 4;
  Rational flo = poly_.eval(a.lo_), fhi = poly_.eval(a.hi_);
  auto bisect = [&]() -> bool {
    Rational m = (a.lo_ + a.hi_) / 2;
    Rational fm = poly_.eval(m);
    if (fm == 0) return false;
    if (sgn(fm) == sign_hi_) a.hi_ = m, fhi = fm;
    else a.lo_ = m, flo = fm;
    return true;
  };
  while (a.hi_ - a.lo_ >= width) {
    Rational w = a.hi_ - a.lo_;
    Rational step = w / n;
    Rational t = n * flo / (flo - fhi);
    Integer j = floor(t + Rational(1, 2));
    bool ok = false;
    if (j > 0 && j < n) {
      Rational m = a.lo_ + step * j;
      Rational fm = poly_.eval(m);
      if (fm == 0) return AlgebraicNumber(m);
      Rational other = sgn(fm) == sign_hi_ ? Rational(m - step) : Rational(m + step);
      Rational fo = poly_.eval(other);
      if (fo == 0) return AlgebraicNumber(other);
      if (sgn(fo) != sgn(fm)) {
        if (sgn(fm) == sign_hi_) a.lo_ = other, flo = fo, a.hi_ = m, fhi = fm;
        else a.lo_ = m, flo = fm, a.hi_ = other, fhi = fo;
        ok = true;
      }
    }
    if (ok) {
      n = n * n;
    } else {
      n = std::max(Integer(4), Integer(sqrt(n)));
      if (!bisect()) return AlgebraicNumber((a.lo_ + a.hi_) / 2);
    }
  }
  return a;
}

double AlgebraicNumber::approx() const {
  if (is_rational()) return lo_.get_d();
  AlgebraicNumber a = refined_to(Rational(1, 1 << 30));
  if (a.is_rational()) return a.lo_.get_d();
  return Rational((a.lo_ + a.hi_) / 2).get_d();
}

std::string AlgebraicNumber::to_decimal(int digits) const {
  if (is_rational()) return tn::to_decimal(lo_, digits);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits + 2));
  AlgebraicNumber a = refined_to(Rational(1) / scale);
  if (a.is_rational()) return tn::to_decimal(a.lo_, digits);
  return tn::to_decimal((a.lo_ + a.hi_) / 2, digits);
}

std::string AlgebraicNumber::to_string() const {
  if (is_rational()) return tn::to_string(lo_);
  std::ostringstream os;
  os << "root(" << poly_.to_polynomial(0).to_string(VarNames({"t"})) << ", " << tn::to_string(lo_) << ", "
     << tn::to_string(hi_) << ")";
  return os.str();
}

namespace {

bool has_root_inside(const UPoly& g, const Rational& lo, const Rational& hi) {
  if (g.degree() <= 0) return false;
  return count_roots(sturm_sequence(g), lo, hi) > 0;
}

}  // namespace

int compare(const AlgebraicNumber& a0, const AlgebraicNumber& b0) {
  if (a0.is_rational() && b0.is_rational()) {
    int c = cmp(a0.rational_value(), b0.rational_value());
    return (c > 0) - (c < 0);
  }
  if (a0.is_rational()) return -compare(b0, a0);
  if (b0.is_rational()) {
    const Rational& q = b0.rational_value();
    if (q <= a0.lo()) return 1;
    if (q >= a0.hi()) return -1;
    if (a0.poly().sign_at(q) == 0) return 0;
    AlgebraicNumber a = a0;
    while (!a.is_rational() && a.lo() < q && q < a.hi()) a = a.refined();
    if (a.is_rational()) return compare(a, b0);
    return q <= a.lo() ? 1 : -1;
  }
  AlgebraicNumber a = a0, b = b0;
  bool equality_checked = false;
  while (true) {
    if (a.is_rational() || b.is_rational()) return compare(a, b);
    if (a.hi() <= b.lo()) return -1;
    if (b.hi() <= a.lo()) return 1;
    if (!equality_checked) {
      Rational lo = std::max(a.lo(), b.lo()), hi = std::min(a.hi(), b.hi());
      UPoly g = gcd(a.poly(), b.poly());
      // Endpoints of the intersection are endpoints of an isolating interval, hence not roots of g.
      if (has_root_inside(g, lo, hi)) return 0;
      equality_checked = true;
    }
    a = a.refined();
    b = b.refined();
  }
}

int sign_at(const UPoly& p, const AlgebraicNumber& alpha) {
  if (alpha.is_rational()) return p.sign_at(alpha.rational_value());
  if (p.is_zero()) return 0;
  UPoly g = gcd(p, alpha.poly());
  if (g.degree() >= 1 && g.sign_at(alpha.lo()) * g.sign_at(alpha.hi()) < 0) return 0;
  UPoly q = squarefree_part(p);
  if (q.degree() <= 0) return sgn(p.lead());
  auto seq = sturm_sequence(q);
  AlgebraicNumber a = alpha;
  while (true) {
    if (a.is_rational()) return p.sign_at(a.rational_value());
    int s = q.sign_at(a.lo());
    if (s != 0 && count_roots(seq, a.lo(), a.hi()) == 0) return p.sign_at(a.lo());
    a = a.refined();
  }
}

int sign_at(const Polynomial& p, const AlgebraicNumber& alpha) {
  return sign_at(UPoly::from_polynomial(p, std::max(p.main_var(), 0)), alpha);
}

namespace {

Rational upper(const AlgebraicNumber& a) { return a.is_rational() ? a.rational_value() : a.hi(); }
Rational lower(const AlgebraicNumber& a) { return a.is_rational() ? a.rational_value() : a.lo(); }

}  // namespace

Rational rational_between(const AlgebraicNumber& a0, const AlgebraicNumber& b0) {
  if (compare(a0, b0) >= 0) throw InternalError("rational_between: a >= b");
  AlgebraicNumber a = a0, b = b0;
  while (!(upper(a) < lower(b))) {
    a = a.refined();
    b = b.refined();
  }
  return simplest_between(upper(a), lower(b));
}

Rational rational_below(const AlgebraicNumber& a) { return Rational(floor(lower(a)) - 1); }
Rational rational_above(const AlgebraicNumber& a) { return Rational(ceil(upper(a)) + 1); }

}  // namespace tn
