#include "tn/cad.hpp"
#include "tn/errors.hpp"
#include "qe_engine.hpp"

namespace tn {

namespace {

void same_dim(const SemiAlgebraicSet& a, const SemiAlgebraicSet& b) {
  if (a.n != b.n)
    throw DomainError("set operation on different ambient dimensions " + std::to_string(a.n) + " and " +
                      std::to_string(b.n));
}

std::vector<int> shifted(int offset) {
  std::vector<int> map(kMaxVars);
  for (int v = 0; v < kMaxVars; ++v) map[v] = v + offset < kMaxVars ? v + offset : v;
  return map;
}

// A point of one conjunction, or nullopt.
std::optional<SamplePoint> conjunction_point(const SignCondition& c, int n, const Config& cfg) {
  std::vector<Formula> parts;
  for (const auto& a : c) parts.push_back(Formula::atom(a));
  Formula m = Formula::conj(parts);
  check_caps(m, n, cfg);
  auto vars = m.free_variables();
  SamplePoint out(n, AlgebraicNumber(0));
  if (vars.empty()) {
    if (!eval_qf(m, {})) return std::nullopt;
    return out;
  }
  std::vector<int> used(vars.begin(), vars.end());
  std::vector<int> map(kMaxVars);
  for (int v = 0; v < kMaxVars; ++v) map[v] = v;
  for (std::size_t i = 0; i < used.size(); ++i) map[used[i]] = static_cast<int>(i);
  QeEngine engine(m.rename(map), 0, std::vector<bool>(used.size(), true), cfg);
  auto w = engine.witness();
  if (!w) return std::nullopt;
  for (std::size_t i = 0; i < used.size(); ++i) out[used[i]] = (*w)[i];
  return out;
}

SemiAlgebraicSet eliminate_to_set(const Formula& f, int n, const Config& cfg) {
  return to_dnf(eliminate_quantifiers(f, cfg), n, cfg.max_dnf);
}

}  // namespace

std::optional<SamplePoint> find_point(const SemiAlgebraicSet& s, const Config& cfg) {
  for (const auto& c : s.disjuncts)
    if (auto p = conjunction_point(c, s.n, cfg)) return p;
  return std::nullopt;
}

bool is_empty(const SemiAlgebraicSet& s, const Config& cfg) { return !find_point(s, cfg).has_value(); }

bool contains(const SemiAlgebraicSet& s, std::span<const Rational> point) { return s.contains(point); }

SemiAlgebraicSet set_union(const SemiAlgebraicSet& a, const SemiAlgebraicSet& b, const Config& cfg) {
  same_dim(a, b);
  return to_dnf(Formula::disj({a.to_formula(), b.to_formula()}), a.n, cfg.max_dnf);
}

SemiAlgebraicSet set_intersect(const SemiAlgebraicSet& a, const SemiAlgebraicSet& b, const Config& cfg) {
  same_dim(a, b);
  return to_dnf(Formula::conj({a.to_formula(), b.to_formula()}), a.n, cfg.max_dnf);
}

SemiAlgebraicSet set_complement(const SemiAlgebraicSet& a, const Config& cfg) {
  return to_dnf(Formula::negation(a.to_formula()), a.n, cfg.max_dnf);
}

SemiAlgebraicSet set_difference(const SemiAlgebraicSet& a, const SemiAlgebraicSet& b, const Config& cfg) {
  same_dim(a, b);
  return to_dnf(Formula::conj({a.to_formula(), Formula::negation(b.to_formula())}), a.n, cfg.max_dnf);
}

bool is_subset(const SemiAlgebraicSet& a, const SemiAlgebraicSet& b, const Config& cfg) {
  return is_empty(set_difference(a, b, cfg), cfg);
}

bool equivalent(const SemiAlgebraicSet& a, const SemiAlgebraicSet& b, const Config& cfg) {
  return is_subset(a, b, cfg) && is_subset(b, a, cfg);
}

SemiAlgebraicSet project(const SemiAlgebraicSet& s, int k, const Config& cfg) {
  if (k < 0 || k >= s.n) throw DomainError("project: need 0 <= k < n");
  if (s.trivially_empty()) return SemiAlgebraicSet::empty(k);
  Formula f = s.to_formula();
  for (int v = s.n - 1; v >= k; --v) f = Formula::exists(v, f);
  return eliminate_to_set(f, k, cfg);
}

Formula closure_formula(const SemiAlgebraicSet& s) {
  const int n = s.n;
  if (2 * n + 1 > kMaxVars) throw CapExceeded("closure: too many variables for the closure formula");
  const int eps = n;
  Formula in_s = s.to_formula().rename(shifted(n + 1));
  Polynomial dist2 = Polynomial(0);
  for (int i = 0; i < n; ++i) {
    Polynomial d = Polynomial::variable(i) - Polynomial::variable(n + 1 + i);
    dist2 += d * d;
  }
  Formula near = Formula::conj({in_s, Formula::atom(Polynomial::variable(eps) - dist2, Rel::Gt)});
  for (int i = n - 1; i >= 0; --i) near = Formula::exists(n + 1 + i, near);
  return Formula::forall(eps, Formula::implies(Formula::atom(Polynomial::variable(eps), Rel::Gt), near));
}

SemiAlgebraicSet closure(const SemiAlgebraicSet& s, const Config& cfg) {
  if (s.trivially_empty()) return s;
  return eliminate_to_set(closure_formula(s), s.n, cfg);
}

SemiAlgebraicSet image(const SemiAlgebraicSet& s, const Formula& graph, int m, int k, const Config& cfg) {
  if (s.n != m) throw DomainError("image: set dimension does not match the domain");
  Formula f = Formula::conj({graph, s.to_formula()});
  for (int v = m - 1; v >= 0; --v) f = Formula::exists(v, f);
  Formula g = eliminate_quantifiers(f, cfg);
  std::vector<int> down(kMaxVars);
  for (int v = 0; v < kMaxVars; ++v) down[v] = v >= m ? v - m : v;
  return to_dnf(g.rename(down), k, cfg.max_dnf);
}

SemiAlgebraicSet preimage(const SemiAlgebraicSet& t, const Formula& graph, int m, int k, const Config& cfg) {
  if (t.n != k) throw DomainError("preimage: set dimension does not match the codomain");
  Formula f = Formula::conj({graph, t.to_formula().rename(shifted(m))});
  for (int v = m + k - 1; v >= m; --v) f = Formula::exists(v, f);
  return eliminate_to_set(f, m, cfg);
}

}  // namespace tn
