#include "tn/factor.hpp"
#include "tn/errors.hpp"

#include <algorithm>
#include <random>

namespace tn {

namespace {

// ---- F_p[x], coefficients in [0, p), low degree first ----

using FPoly = std::vector<long>;

void trim(FPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long inv_mod(long a, long p) {
  long r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

FPoly fsub(FPoly a, const FPoly& b, long p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] - b[i] + p) % p;
  trim(a);
  return a;
}

FPoly fmul(const FPoly& a, const FPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  FPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

void fdivrem(FPoly a, const FPoly& b, long p, FPoly* q, FPoly* r) {
  long inv = inv_mod(b.back(), p);
  FPoly quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    long c = a.back() * inv % p;
    quo[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = ((a[i + shift] - c * b[i]) % p + p) % p;
    trim(a);
  }
  trim(quo);
  if (q) *q = quo;
  if (r) *r = a;
}

FPoly frem(const FPoly& a, const FPoly& b, long p) {
  FPoly r;
  fdivrem(a, b, p, nullptr, &r);
  return r;
}

FPoly fmonic(FPoly a, long p) {
  if (a.empty()) return a;
  long inv = inv_mod(a.back(), p);
  for (auto& c : a) c = c * inv % p;
  return a;
}

FPoly fgcd(FPoly a, FPoly b, long p) {
  while (!b.empty()) {
    FPoly r = frem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fmonic(a, p);
}

// s*a + t*b = 1 for coprime a, b.
void fext_gcd(const FPoly& a, const FPoly& b, long p, FPoly* s, FPoly* t) {
  FPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    FPoly q, r;
    fdivrem(r0, r1, p, &q, &r);
    FPoly s2 = fsub(s0, fmul(q, s1, p), p), t2 = fsub(t0, fmul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  long inv = inv_mod(r0[0], p);
  for (auto& c : s0) c = c * inv % p;
  for (auto& c : t0) c = c * inv % p;
  *s = s0;
  *t = t0;
}

FPoly fpowmod(FPoly base, mpz_class e, const FPoly& m, long p) {
  FPoly r{1};
  base = frem(base, m, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = frem(fmul(r, base, p), m, p);
    base = frem(fmul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

FPoly fderiv(const FPoly& a, long p) {
  FPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(static_cast<long>(i % p) * a[i] % p);
  trim(d);
  return d;
}

// Equal-degree splitting of a monic squarefree product of degree-d factors.
void edf(const FPoly& f, int d, long p, std::mt19937& rng, std::vector<FPoly>& out) {
  int n = static_cast<int>(f.size()) - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<long> coin(0, p - 1);
  while (true) {
    FPoly a(n);
    for (auto& c : a) c = coin(rng);
    trim(a);
    if (a.size() < 2) continue;
    FPoly b = fpowmod(a, e, f, p);
    b = fsub(b, FPoly{1}, p);
    FPoly g = fgcd(f, b, p);
    int dg = static_cast<int>(g.size()) - 1;
    if (dg > 0 && dg < n) {
      FPoly q;
      fdivrem(f, g, p, &q, nullptr);
      edf(g, d, p, rng, out);
      edf(fmonic(q, p), d, p, rng, out);
      return;
    }
  }
}

std::vector<FPoly> factor_mod_p(FPoly f, long p) {
  std::vector<FPoly> out;
  std::mt19937 rng(12345);
  FPoly h{0, 1};
  FPoly x{0, 1};
  for (int i = 1; 2 * i <= static_cast<int>(f.size()) - 1; ++i) {
    h = fpowmod(h, mpz_class(p), f, p);
    FPoly g = fgcd(f, fsub(h, x, p), p);
    if (g.size() > 1) {
      edf(g, i, p, rng, out);
      FPoly q;
      fdivrem(f, g, p, &q, nullptr);
      f = fmonic(q, p);
      h = frem(h, f, p);
    }
  }
  if (f.size() > 1) out.push_back(f);
  return out;
}

// ---- Z[x] ----

using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

mpz_class smod(const mpz_class& a, const mpz_class& m) {
  mpz_class r = a % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  ztrim(r);
  return r;
}

ZPoly zmod(ZPoly a, const mpz_class& m) {
  for (auto& c : a) c = smod(c, m);
  ztrim(a);
  return a;
}

FPoly to_fp(const ZPoly& a, long p) {
  FPoly r;
  mpz_class pp(p);
  for (const auto& c : a) {
    mpz_class t = c % pp;
    if (t < 0) t += pp;
    r.push_back(t.get_si());
  }
  trim(r);
  return r;
}

ZPoly to_z(const FPoly& a) {
  ZPoly r;
  for (auto c : a) r.emplace_back(static_cast<long>(c));
  return r;
}

// Exact division in Z[x]; false when b does not divide a.
bool zdivides(ZPoly a, const ZPoly& b, ZPoly* quotient) {
  if (b.empty()) return false;
  ZPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t())) return false;
    mpz_class c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    ztrim(a);
  }
  if (!a.empty()) return false;
  ztrim(q);
  if (quotient) *quotient = q;
  return true;
}

ZPoly primitive(ZPoly a) {
  mpz_class g = 0;
  for (const auto& c : a) g = gcd(g, c);
  if (g != 0)
    for (auto& c : a) c /= g;
  if (!a.empty() && a.back() < 0)
    for (auto& c : a) c = -c;
  return a;
}

// Lifts f = lc * g * h (mod p), g and h monic, to modulus p^k.
void hensel_pair(const ZPoly& f, ZPoly& g, ZPoly& h, long p, int k) {
  mpz_class lc = f.back();
  FPoly s, t;
  fext_gcd(to_fp(g, p), to_fp(h, p), p, &s, &t);
  long lcinv = inv_mod(to_fp(ZPoly{lc}, p)[0], p);
  mpz_class m = p;
  for (int step = 1; step < k; ++step) {
    mpz_class mp = m * p;
    ZPoly gh = zmul(g, h);
    for (auto& c : gh) c *= lc;
    ZPoly e = f;
    if (e.size() < gh.size()) e.resize(gh.size(), 0);
    for (std::size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
    e = zmod(e, mp);
    for (auto& c : e) c /= m;
    FPoly c = to_fp(e, p);
    for (auto& x : c) x = x * lcinv % p;
    FPoly dg = frem(fmul(c, t, p), to_fp(g, p), p);
    FPoly dh = frem(fmul(c, s, p), to_fp(h, p), p);
    ZPoly zg = to_z(dg), zh = to_z(dh);
    if (g.size() < zg.size()) g.resize(zg.size(), 0);
    if (h.size() < zh.size()) h.resize(zh.size(), 0);
    for (std::size_t i = 0; i < zg.size(); ++i) g[i] += m * zg[i];
    for (std::size_t i = 0; i < zh.size(); ++i) h[i] += m * zh[i];
    g = zmod(g, mp);
    h = zmod(h, mp);
    m = mp;
  }
}

std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<FPoly>& fac, long p, int k, const mpz_class& M) {
  std::vector<ZPoly> out;
  ZPoly cur = f;
  for (std::size_t i = 0; i + 1 < fac.size(); ++i) {
    FPoly rest{1};
    for (std::size_t j = i + 1; j < fac.size(); ++j) rest = fmul(rest, fac[j], p);
    ZPoly g = to_z(fac[i]), h = to_z(rest);
    hensel_pair(cur, g, h, p, k);
    out.push_back(g);
    cur = h;
    cur = zmod(cur, M);
  }
  out.push_back(cur);
  return out;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<ZPoly> factor_squarefree_z(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};

  long best_p = 0;
  std::vector<FPoly> best;
  int tried = 0;
  for (long p = 3; tried < 5 && p < 100000; p += 2) {
    if (!is_prime(p)) continue;
    FPoly fp = to_fp(f, p);
    if (static_cast<int>(fp.size()) - 1 != n) continue;
    FPoly mf = fmonic(fp, p);
    if (fgcd(mf, fderiv(mf, p), p).size() != 1) continue;
    ++tried;
    auto fac = factor_mod_p(mf, p);
    if (best_p == 0 || fac.size() < best.size()) {
      best_p = p;
      best = fac;
    }
    if (best.size() == 1) return {f};
  }
  if (best_p == 0) throw InternalError("factorization: no suitable prime");
  const long p = best_p;

  // Mignotte-style bound on coefficients of lc * (factor).
  mpz_class norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  mpz_class root = sqrt(norm2) + 1;
  mpz_class bound = (mpz_class(1) << n) * root * abs(f.back()) * 2 + 1;
  int k = 1;
  mpz_class M = p;
  while (M <= bound) {
    M *= p;
    ++k;
  }
  std::vector<ZPoly> lifted = hensel_lift(f, best, p, k, M);

  std::vector<ZPoly> result;
  ZPoly cur = f;
  std::vector<ZPoly> pool = lifted;
  std::size_t size = 1;
  while (2 * size <= pool.size()) {
    bool found = false;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      ZPoly cand{cur.back()};
      for (auto i : idx) cand = zmod(zmul(cand, pool[i]), M);
      cand = primitive(cand);
      ZPoly quo;
      if (zdivides(cur, cand, &quo)) {
        result.push_back(cand);
        cur = quo;
        std::vector<ZPoly> rest;
        for (std::size_t i = 0; i < pool.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(pool[i]);
        pool = rest;
        found = true;
        break;
      }
      int j = static_cast<int>(size) - 1;
      while (j >= 0 && idx[j] == pool.size() - size + j) --j;
      if (j < 0) break;
      ++idx[j];
      for (std::size_t i = j + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++size;
  }
  result.push_back(primitive(cur));
  return result;
}

}  // namespace

std::vector<UPoly> irreducible_factors(const UPoly& p) {
  if (p.degree() <= 0) return {};
  UPoly q = squarefree_part(p);
  std::vector<UPoly> out;
  ZPoly z;
  for (const auto& c : q.coeffs()) z.push_back(c.get_num());
  if (z[0] == 0) {
    out.push_back(UPoly({Rational(0), Rational(1)}));
    z.erase(z.begin());
  }
  if (z.size() > 1)
    for (const auto& f : factor_squarefree_z(z)) {
      std::vector<Rational> c;
      for (const auto& x : f) c.emplace_back(x);
      out.push_back(UPoly(c).normalized());
    }
  std::sort(out.begin(), out.end(), [](const UPoly& a, const UPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
  });
  return out;
}

}  // namespace tn
