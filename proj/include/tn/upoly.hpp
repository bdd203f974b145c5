#pragma once

#include "tn/polynomial.hpp"

#include <vector>

namespace tn {

/// Dense univariate polynomial over Q; coeff(i) multiplies t^i. No trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  /// Requires p to involve at most `var`.
  static UPoly from_polynomial(const Polynomial& p, int var);
  Polynomial to_polynomial(int var) const;

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Rational& lead() const { return c_.back(); }

  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const;
  /// Sign for t -> +inf (dir > 0) or t -> -inf (dir < 0).
  int sign_at_infinity(int dir) const;

  UPoly derivative() const;
  UPoly operator-() const;
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  bool operator==(const UPoly&) const = default;

  /// Integer coefficients with gcd 1 and positive leading coefficient.
  UPoly normalized() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct DivMod {
  UPoly quotient, remainder;
};
DivMod divmod(const UPoly& a, const UPoly& b);
UPoly gcd(const UPoly& a, const UPoly& b);  // normalized
UPoly squarefree_part(const UPoly& p);       // normalized
UPoly exact_quotient(const UPoly& a, const UPoly& b);

/// Canonical Sturm sequence p, p', -rem(...), ...
std::vector<UPoly> sturm_sequence(const UPoly& p);
int sign_variations(const std::vector<UPoly>& seq, const Rational& x);
int sign_variations_at_infinity(const std::vector<UPoly>& seq, int dir);
/// Number of distinct real roots in (a, b] for a <= b.
int count_roots(const std::vector<UPoly>& seq, const Rational& a, const Rational& b);

/// Cauchy bound 1 + max|c_i| / |lead|: every real root lies strictly inside (-B, B).
Rational cauchy_bound(const UPoly& p);

struct RootInterval {
  Rational lo, hi;  // lo == hi marks an exact rational root
};

/// One interval per distinct real root, in increasing order. Non-degenerate
/// intervals are open, contain exactly one root of the squarefree part and
/// have endpoints that are not roots.
std::vector<RootInterval> isolate_real_roots(const UPoly& p);
std::vector<RootInterval> isolate_real_roots(const Polynomial& p);

}  // namespace tn
