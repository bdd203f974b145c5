#include "tn/polynomial.hpp"

#include "tn/errors.hpp"

#include <algorithm>

namespace tn {

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned(exp[i]) + other.exp[i];
    if (e > 0xFFFFu) throw CapExceeded("monomial exponent overflow");
    m.exp[i] = static_cast<std::uint16_t>(e);
  }
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint16_t>(exp[i] - other.exp[i]);
  return m;
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
  unsigned da = a.total_degree(), db = b.total_degree();
  if (da != db) return da <=> db;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exp[i] != b.exp[i]) return a.exp[i] <=> b.exp[i];
  return std::strong_ordering::equal;
}

std::string VarNames::name(int var) const {
  if (var >= 0 && static_cast<std::size_t>(var) < names_.size() && !names_[var].empty())
    return names_[var];
  return "x" + std::to_string(var + 1);
}

void VarNames::set(int var, std::string name) {
  if (static_cast<std::size_t>(var) >= names_.size()) names_.resize(var + 1);
  names_[var] = std::move(name);
}

int VarNames::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

bool VarNames::has(int var) const {
  return var >= 0 && static_cast<std::size_t>(var) < names_.size() && !names_[var].empty();
}

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

Polynomial Polynomial::variable(int var) {
  if (var < 0 || var >= kMaxVars) throw CapExceeded("variable index out of range");
  Monomial m;
  m.exp[var] = 1;
  return term(m, 1);
}

Polynomial Polynomial::term(const Monomial& mono, const Rational& coeff) {
  Polynomial p;
  if (coeff != 0) p.terms_.push_back({mono, coeff});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return grlex_compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms_ = std::move(out);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.total_degree() == 0);
}

Rational Polynomial::constant_value() const {
  if (!terms_.empty() && terms_.back().mono.total_degree() == 0) return terms_.back().coeff;
  return Rational(0);
}

int Polynomial::main_var() const {
  int v = -1;
  for (const auto& t : terms_)
    for (int i = kMaxVars - 1; i > v; --i)
      if (t.mono.exp[i] > 0) {
        v = i;
        break;
      }
  return v;
}

unsigned Polynomial::degree(int var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono.exp[var]);
  return d;
}

unsigned Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().mono.total_degree();
}

std::vector<int> Polynomial::variables() const {
  std::vector<int> vs;
  for (int i = 0; i < kMaxVars; ++i)
    if (degree(i) > 0) vs.push_back(i);
  return vs;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

// Merge two descending term lists; sign = +1 for addition, -1 for subtraction.
std::vector<Polynomial::Term> merge_terms(const std::vector<Polynomial::Term>& a,
                                          const std::vector<Polynomial::Term>& b, int sign) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    std::strong_ordering c = std::strong_ordering::greater;
    if (i == a.size())
      c = std::strong_ordering::less;
    else if (j < b.size())
      c = grlex_compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, sign > 0 ? b[j].coeff : Rational(-b[j].coeff)});
      ++j;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (s != 0) out.push_back({a[i].mono, s});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  terms_ = merge_terms(terms_, other.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 && a.terms_[0].mono.total_degree() == 0) return b.scaled(a.terms_[0].coeff);
  if (b.terms_.size() == 1 && b.terms_[0].mono.total_degree() == 0) return a.scaled(b.terms_[0].coeff);
  std::vector<Polynomial::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
  return Polynomial::from_terms(std::move(prod));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return {};
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == other.terms_[i].mono) || terms_[i].coeff != other.terms_[i].coeff)
      return false;
  return true;
}

std::strong_ordering Polynomial::operator<=>(const Polynomial& other) const {
  std::size_t n = std::min(terms_.size(), other.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = grlex_compare(terms_[i].mono, other.terms_[i].mono);
    if (c != 0) return c;
    int q = cmp(terms_[i].coeff, other.terms_[i].coeff);
    if (q != 0) return q < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return terms_.size() <=> other.terms_.size();
}

std::vector<Polynomial> Polynomial::coefficients(int var) const {
  std::vector<std::vector<Term>> buckets(degree(var) + 1);
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    unsigned e = m.exp[var];
    m.exp[var] = 0;
    buckets[e].push_back({m, t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  // Removing one variable from a grlex-sorted list does not preserve order in general.
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

Polynomial Polynomial::from_coefficients(int var, const std::vector<Polynomial>& coeffs) {
  std::vector<Term> all;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (const auto& t : coeffs[i].terms_) {
      Monomial m = t.mono;
      m.exp[var] = static_cast<std::uint16_t>(m.exp[var] + i);
      all.push_back({m, t.coeff});
    }
  }
  return from_terms(std::move(all));
}

Polynomial Polynomial::leading_coefficient(int var) const {
  auto cs = coefficients(var);
  return cs.back();
}

Polynomial Polynomial::derivative(int var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono.exp[var] == 0) continue;
    Monomial m = t.mono;
    Rational c = t.coeff * m.exp[var];
    m.exp[var] -= 1;
    out.push_back({m, c});
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::substitute(int var, const Rational& value) const {
  if (!involves(var)) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    unsigned e = m.exp[var];
    m.exp[var] = 0;
    Rational c = t.coeff;
    if (e > 0) {
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), value.get_num_mpz_t(), e);
      mpz_pow_ui(pw.get_den_mpz_t(), value.get_den_mpz_t(), e);
      c *= pw;
    }
    out.push_back({m, c});
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::substitute(int var, const Polynomial& value) const {
  if (!involves(var)) return *this;
  auto cs = coefficients(var);
  Polynomial acc;
  for (std::size_t i = cs.size(); i-- > 0;) acc = acc * value + cs[i];
  return acc;
}

Polynomial Polynomial::rename(std::span<const int> map) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) {
      if (t.mono.exp[i] == 0) continue;
      if (static_cast<std::size_t>(i) >= map.size() || map[i] < 0 || map[i] >= kMaxVars)
        throw InternalError("rename: variable x" + std::to_string(i + 1) + " has no target");
      m.exp[map[i]] = static_cast<std::uint16_t>(m.exp[map[i]] + t.mono.exp[i]);
    }
    out.push_back({m, t.coeff});
  }
  return from_terms(std::move(out));
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (int i = 0; i < kMaxVars; ++i) {
      if (t.mono.exp[i] == 0) continue;
      if (static_cast<std::size_t>(i) >= point.size())
        throw InternalError("evaluate: point does not cover variable x" + std::to_string(i + 1));
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), point[i].get_num_mpz_t(), t.mono.exp[i]);
      mpz_pow_ui(pw.get_den_mpz_t(), point[i].get_den_mpz_t(), t.mono.exp[i]);
      v *= pw;
    }
    sum += v;
  }
  return sum;
}

std::string Polynomial::to_string(const VarNames& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool unit = t.mono.total_degree() == 0;
    if (first) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    first = false;
    std::string mono;
    for (int i = 0; i < kMaxVars; ++i) {
      if (t.mono.exp[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.name(i);
      if (t.mono.exp[i] > 1) mono += "^" + std::to_string(t.mono.exp[i]);
    }
    if (unit) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace tn
