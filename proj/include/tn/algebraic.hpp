#pragma once

#include "tn/upoly.hpp"

#include <string>

namespace tn {

/// Real algebraic number. Either an exact rational, or the unique root of a
/// squarefree primitive integer polynomial in the open interval (lo, hi),
/// whose endpoints are not roots. Values are immutable; refinement returns a
/// new value identifying the same root.
class AlgebraicNumber {
 public:
  AlgebraicNumber() = default;
  AlgebraicNumber(const Rational& q);  // NOLINT(google-explicit-constructor)
  AlgebraicNumber(long q) : AlgebraicNumber(Rational(q)) {}  // NOLINT(google-explicit-constructor)

  /// Validates that p has exactly one root in (lo, hi) and none at the endpoints.
  static AlgebraicNumber root_of(const UPoly& p, const Rational& lo, const Rational& hi);
  /// All real roots of p, increasing.
  static std::vector<AlgebraicNumber> roots_of(const UPoly& p);

  bool is_rational() const { return poly_.is_zero(); }
  const Rational& rational_value() const;  // requires is_rational()
  const UPoly& poly() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  /// Halves the isolating interval (or returns the rational itself if the midpoint is the root).
  AlgebraicNumber refined() const;
  /// Refines until hi - lo < width.
  AlgebraicNumber refined_to(const Rational& width) const;

  double approx() const;
  std::string to_decimal(int digits = 6) const;
  std::string to_string() const;  // exact form: "q" or "root(p, lo, hi)"

 private:
  Rational lo_, hi_;
  UPoly poly_;
  int sign_hi_ = 0;
};

/// -1, 0, +1 for a < b, a == b, a > b.
int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);
inline bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) == 0; }
inline bool operator<(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) < 0; }

/// Exact sign of p(alpha).
int sign_at(const UPoly& p, const AlgebraicNumber& alpha);
int sign_at(const Polynomial& p, const AlgebraicNumber& alpha);  // p univariate

/// Simplest rational strictly between a < b.
Rational rational_between(const AlgebraicNumber& a, const AlgebraicNumber& b);
Rational rational_below(const AlgebraicNumber& a);
Rational rational_above(const AlgebraicNumber& a);

}  // namespace tn
