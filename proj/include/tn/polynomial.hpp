#pragma once

#include "tn/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tn {

/// Hard ceiling on variable indices. Config caps sit well below it.
inline constexpr int kMaxVars = 8;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};

  unsigned total_degree() const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial operator/(const Monomial& other) const;  // requires divides()
  bool operator==(const Monomial&) const = default;
};

/// Graded lexicographic order, x1 > x2 > ... within a degree.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

/// Display names for variable indices; unnamed indices print as x1, x2, ...
class VarNames {
 public:
  VarNames() = default;
  explicit VarNames(std::vector<std::string> names) : names_(std::move(names)) {}

  std::string name(int var) const;
  void set(int var, std::string name);
  int find(const std::string& name) const;  // -1 when absent
  bool has(int var) const;
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
};

/// Sparse multivariate polynomial over Q. Terms are kept in strictly
/// descending grlex order with no zero coefficients; the zero polynomial has
/// no terms.
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
  };

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Polynomial variable(int var);
  static Polynomial term(const Monomial& mono, const Rational& coeff);
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // coefficient of the unit monomial
  const Term& leading_term() const { return terms_.front(); }

  int main_var() const;  // highest variable index with a positive exponent, -1 if constant
  unsigned degree(int var) const;
  unsigned total_degree() const;
  std::vector<int> variables() const;
  bool involves(int var) const { return degree(var) > 0; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& other) const;
  /// Total order used for deterministic containers: compares term lists.
  std::strong_ordering operator<=>(const Polynomial& other) const;

  /// Coefficients as a polynomial in `var`; entry i multiplies var^i.
  std::vector<Polynomial> coefficients(int var) const;
  static Polynomial from_coefficients(int var, const std::vector<Polynomial>& coeffs);
  Polynomial leading_coefficient(int var) const;

  Polynomial derivative(int var) const;
  Polynomial substitute(int var, const Rational& value) const;
  Polynomial substitute(int var, const Polynomial& value) const;
  /// Renames variable i to map[i]. Every variable present must map to a valid index.
  Polynomial rename(std::span<const int> map) const;
  /// Evaluates with point[i] substituted for variable i. Requires all variables covered.
  Rational evaluate(std::span<const Rational> point) const;

  std::string to_string(const VarNames& names = {}) const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

Polynomial parse_polynomial(std::string_view text, VarNames& names);

}  // namespace tn
