#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tn {

using Integer = mpz_class;
using Rational = mpq_class;  // gmp keeps mpq values canonical after arithmetic

Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(std::string_view text);  // "3", "-7/4"
std::string to_string(const Rational& q);

int sign(const Rational& q);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);
Rational abs(const Rational& q);

/// The rational with the smallest denominator (then smallest magnitude) in
/// the open interval (lo, hi). Requires lo < hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

std::string to_decimal(const Rational& q, int digits);

}  // namespace tn
