#include "tn/rational.hpp"

#include "tn/errors.hpp"

#include <cctype>

namespace tn {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw DomainError("malformed rational '" + s + "'");
    return Rational(Integer(strip_plus(s)));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw DomainError("malformed rational '" + s + "'");
  return make_rational(Integer(strip_plus(num)), Integer(strip_plus(den)));
}

std::string to_string(const Rational& q) { return q.get_str(); }

int sign(const Rational& q) { return sgn(q); }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational abs(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

namespace {

// Both endpoints strictly positive and finite, lo < hi.
Rational simplest_positive(const Rational& lo, const Rational& hi) {
  Integer fl = floor(lo);
  if (Rational(fl + 1) < hi) return Rational(fl + 1);
  if (Rational(fl) == lo) {
    // (fl, hi) with hi <= fl + 1
    Rational inv = 1 / (hi - fl);
    Integer t = floor(inv) + 1;
    return Rational(fl) + make_rational(1, t);
  }
  Rational a = 1 / (hi - fl);
  Rational b = 1 / (lo - fl);
  return Rational(fl) + 1 / simplest_positive(a, b);
}

}  // namespace

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw InternalError("simplest_between: empty interval");
  if (lo < 0 && hi > 0) return Rational(0);
  if (hi <= 0) return -simplest_between(-hi, -lo);
  if (lo == 0) {
    Integer t = floor(1 / hi) + 1;
    return make_rational(1, t);
  }
  return simplest_positive(lo, hi);
}

std::string to_decimal(const Rational& q, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = abs(q) * scale;
  Integer rounded = floor(scaled + Rational(1, 2));
  std::string s = rounded.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (sgn(q) < 0 && rounded != 0) s.insert(0, "-");
  return s;
}

}  // namespace tn
