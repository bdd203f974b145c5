#include "tn/upoly.hpp"

#include "tn/errors.hpp"

#include <algorithm>

namespace tn {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::from_polynomial(const Polynomial& p, int var) {
  std::vector<Rational> c(p.degree(var) + 1);
  for (const auto& t : p.terms()) {
    for (int v = 0; v < kMaxVars; ++v)
      if (v != var && t.mono.exp[v] != 0) throw InternalError("UPoly::from_polynomial: extra variable");
    c[t.mono.exp[var]] = t.coeff;
  }
  return UPoly(std::move(c));
}

Polynomial UPoly::to_polynomial(int var) const {
  std::vector<Polynomial::Term> terms;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Monomial m;
    m.exp[var] = static_cast<std::uint16_t>(i);
    terms.push_back({m, c_[i]});
  }
  return Polynomial::from_terms(std::move(terms));
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int UPoly::sign_at(const Rational& x) const {
  if (c_.empty()) return 0;
  // Sign of den^deg * p(num/den), computed over the integers.
  Integer l = 1;
  for (const auto& c : c_) l = lcm(l, c.get_den());
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  Integer acc = c_.back().get_num() * (l / c_.back().get_den());
  Integer dpow = 1;
  for (std::size_t i = c_.size() - 1; i-- > 0;) {
    dpow *= den;
    acc *= num;
    if (c_[i] != 0) acc += c_[i].get_num() * (l / c_[i].get_den()) * dpow;
  }
  return sgn(acc);
}

int UPoly::sign_at_infinity(int dir) const {
  if (c_.empty()) return 0;
  int s = sgn(lead());
  return (dir < 0 && degree() % 2 == 1) ? -s : s;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(d));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return UPoly(std::move(c));
}

UPoly UPoly::normalized() const {
  if (c_.empty()) return *this;
  Integer den = 1, num = 0;
  for (const auto& x : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  for (const auto& x : c_) {
    Integer v = x.get_num() * (den / x.get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
  }
  Rational s = make_rational(den, num);
  if (lead() < 0) s = -s;
  UPoly r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

DivMod divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw InternalError("UPoly division by zero");
  std::vector<Rational> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  std::vector<Rational> q(a.degree() - db + 1);
  const auto& bc = b.coeffs();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    Rational f = r[i] / b.lead();
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * bc[j];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a.normalized(), y = b.normalized();
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).remainder.normalized();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

UPoly exact_quotient(const UPoly& a, const UPoly& b) {
  DivMod d = divmod(a, b);
  if (!d.remainder.is_zero()) throw InternalError("inexact univariate division");
  return d.quotient;
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.normalized();
  return exact_quotient(p, gcd(p, p.derivative())).normalized();
}

namespace {

// Positive rescaling to primitive integer form; preserves signs everywhere.
UPoly positive_primitive(const UPoly& p) {
  if (p.is_zero()) return p;
  UPoly n = p.normalized();
  return sgn(p.lead()) < 0 ? -n : n;
}

}  // namespace

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(positive_primitive(p));
  UPoly d = positive_primitive(p.derivative());
  if (d.is_zero()) return seq;
  seq.push_back(d);
  while (true) {
    UPoly r = divmod(seq[seq.size() - 2], seq.back()).remainder;
    if (r.is_zero()) break;
    seq.push_back(positive_primitive(-r));
  }
  return seq;
}

namespace {

int count_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int sign_variations(const std::vector<UPoly>& seq, const Rational& x) {
  std::vector<int> s;
  s.reserve(seq.size());
  for (const auto& p : seq) s.push_back(p.sign_at(x));
  return count_changes(s);
}

int sign_variations_at_infinity(const std::vector<UPoly>& seq, int dir) {
  std::vector<int> s;
  s.reserve(seq.size());
  for (const auto& p : seq) s.push_back(p.sign_at_infinity(dir));
  return count_changes(s);
}

int count_roots(const std::vector<UPoly>& seq, const Rational& a, const Rational& b) {
  return sign_variations(seq, a) - sign_variations(seq, b);
}

Rational cauchy_bound(const UPoly& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, abs(p.coeffs()[i]));
  return 1 + m / abs(p.lead());
}

namespace {

struct Isolator {
  const UPoly& q;
  const std::vector<UPoly>& seq;
  Rational rational_width;
  std::vector<RootInterval> out;

  // Exactly one root in (a, b].
  void finalize(Rational a, Rational b) {
    if (q.sign_at(b) == 0) {
      out.push_back({b, b});
      return;
    }
    int sb = q.sign_at(b);
    auto bisect = [&](Rational& lo, Rational& hi) -> bool {
      Rational m = (lo + hi) / 2;
      int sm = q.sign_at(m);
      if (sm == 0) {
        out.push_back({m, m});
        return true;
      }
      if (sm != sb) lo = m;
      else hi = m;
      return false;
    };
    while (q.sign_at(a) == 0)
      if (bisect(a, b)) return;
    while (b - a >= rational_width)
      if (bisect(a, b)) return;
    Rational s = simplest_between(a, b);
    if (q.sign_at(s) == 0) out.push_back({s, s});
    else out.push_back({a, b});
  }

  void run(const Rational& a, const Rational& b, int k, int va, int vb) {
    if (k == 0) return;
    if (k == 1) {
      finalize(a, b);
      return;
    }
    Rational m = (a + b) / 2;
    int vm = sign_variations(seq, m);
    run(a, m, va - vm, va, vm);
    run(m, b, vm - vb, vm, vb);
  }
};

}  // namespace

std::vector<RootInterval> isolate_real_roots(const UPoly& p) {
  if (p.is_zero()) throw DomainError("isolate_real_roots: zero polynomial");
  UPoly q = squarefree_part(p);
  if (q.degree() <= 0) return {};
  auto seq = sturm_sequence(q);
  Rational bound = cauchy_bound(q);
  Rational lc = q.lead();
  Isolator iso{q, seq, 1 / (lc * lc), {}};
  int va = sign_variations(seq, -bound), vb = sign_variations(seq, bound);
  iso.run(-bound, bound, va - vb, va, vb);
  return iso.out;
}

std::vector<RootInterval> isolate_real_roots(const Polynomial& p) {
  int v = std::max(p.main_var(), 0);
  return isolate_real_roots(UPoly::from_polynomial(p, v));
}

}  // namespace tn
