#include "tn/section.hpp"
#include "tn/errors.hpp"
#include "tn/topology.hpp"

#include <functional>

namespace tn {

namespace {

Polynomial V(int i) { return Polynomial::variable(i); }

std::vector<int> var_map(const std::function<int(int)>& f) {
  std::vector<int> m(kMaxVars);
  for (int v = 0; v < kMaxVars; ++v) {
    int w = f(v);
    m[v] = (w >= 0 && w < kMaxVars) ? w : v;
  }
  return m;
}

std::vector<int> swap_map(int a, int b) {
  return var_map([=](int v) { return v == a ? b : v == b ? a : v; });
}

std::vector<int> shift_map(int from, int offset) {
  return var_map([=](int v) { return v >= from ? v + offset : v; });
}

void need_vars(int count) {
  if (count > kMaxVars) throw CapExceeded("section synthesis needs " + std::to_string(count) + " variables");
}

std::string point_string(const SamplePoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + p[i].to_decimal();
  return s + ")";
}

std::string point_string(const std::vector<Rational>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + to_string(p[i]);
  return s + ")";
}

bool in_set_at(const SemiAlgebraicSet& s, const SamplePoint& pt) {
  for (const auto& c : s.disjuncts) {
    bool all = true;
    for (const auto& a : c) all = all && holds(a.rel, sign_at_point(a.poly, pt));
    if (all) return true;
  }
  return false;
}

// McCallum first; Collins when the McCallum lifting is not valid.
Formula qe(const Formula& f, const Config& cfg) {
  if (cfg.projection == Projection::Collins) {
    Config fast = cfg;
    fast.projection = Projection::McCallum;
    try {
      return eliminate_quantifiers(f, fast);
    } catch (const NotWellOriented&) {
    }
  }
  return eliminate_quantifiers(f, cfg);
}

SemiAlgebraicSet qe_set(const Formula& f, int n, const Config& cfg) {
  for (int v : f.free_variables())
    if (v >= n) throw DomainError("free variable outside R^" + std::to_string(n));
  return to_dnf(qe(f, cfg), n, cfg.max_dnf);
}

}  // namespace

Formula stereographic_relation(int u, int t) {
  Polynomial w = V(u).scaled(2) - Polynomial(1);
  return Formula::conj({Formula::atom(w * w * (Polynomial(1) + V(t) * V(t)) - V(t) * V(t), Rel::Eq),
                        Formula::atom(w * V(t), Rel::Ge), Formula::atom(V(u), Rel::Gt),
                        Formula::atom(Polynomial(1) - V(u), Rel::Gt)});
}

SemiAlgebraicSet stereographic_embed(const SemiAlgebraicSet& s, int var, const Config& cfg) {
  const int t = s.n;
  need_vars(t + 1);
  Formula f = Formula::exists(t, Formula::conj({stereographic_relation(var, t), s.to_formula().rename(swap_map(var, t))}));
  return qe_set(f, s.n, cfg);
}

SemiAlgebraicSet stereographic_pullback(const SemiAlgebraicSet& s, int var, const Config& cfg) {
  const int u = s.n;
  need_vars(u + 1);
  Formula f = Formula::exists(u, Formula::conj({stereographic_relation(u, var), s.to_formula().rename(swap_map(var, u))}));
  return qe_set(f, s.n, cfg);
}

SectionResult section_case1(const SemiAlgebraicSet& g, const Config& cfg) {
  const int n = g.n;
  if (n < 2) throw DomainError("section_case1: need a fibre coordinate and at least one base coordinate");
  SemiAlgebraicSet outside{n, {{Atom{-V(0), Rel::Gt}}, {Atom{V(0) - Polynomial(1), Rel::Gt}}}};
  if (auto w = find_point(set_intersect(g, outside, cfg), cfg))
    throw DomainError("section_case1: fibre coordinate leaves [0,1] at " + point_string(*w));
  const int a = n, b = n + 1, tp = n + 2, e = n + 3;
  need_vars(n + 4);
  SectionResult res;
  Formula gf = g.to_formula();
  Formula gtp = gf.rename(swap_map(0, tp));

  // a = min of the closure of the fibre: a lower bound that is approached.
  Formula lower = qe(
      Formula::forall(tp, Formula::implies(gtp, Formula::atom(V(tp) - V(a), Rel::Ge))), cfg);
  Formula approached = qe(
      Formula::forall(e, Formula::implies(Formula::atom(V(e), Rel::Gt),
                                          Formula::exists(tp, Formula::conj({gtp, Formula::atom(V(a) + V(e) - V(tp), Rel::Gt)})))),
      cfg);
  res.trace.push_back("case 1: s1(y) = min of the fibre closure");

  // (a, b) lies in the fibre; b is the largest such bound.
  Formula run = qe(
      Formula::forall(tp, Formula::implies(Formula::conj({Formula::atom(V(tp) - V(a), Rel::Gt), Formula::atom(V(b) - V(tp), Rel::Gt)}),
                                           gtp)),
      cfg);
  Formula run_tp = run.rename(swap_map(b, tp));
  Formula right = qe(
      Formula::conj({run, Formula::forall(tp, Formula::implies(run_tp, Formula::atom(V(b) - V(tp), Rel::Ge)))}), cfg);
  res.trace.push_back("case 1: I_y = maximal interval of the fibre starting at s1(y)");

  Formula centre = Formula::exists(
      a, Formula::exists(b, Formula::conj({lower, approached, right, Formula::atom(V(0).scaled(2) - V(a) - V(b), Rel::Eq)})));
  res.graph = qe_set(centre, n, cfg);
  res.trace.push_back("case 1: s(y) = centre of I_y");
  return res;
}

SemiAlgebraicSet project_last(const SemiAlgebraicSet& s, int k, const Config& cfg) {
  if (k <= 0 || k > s.n) throw DomainError("project_last: need 0 < k <= n");
  const int drop = s.n - k;
  if (drop == 0) return s;
  Formula f = s.to_formula();
  for (int v = drop - 1; v >= 0; --v) f = Formula::exists(v, f);
  Formula g = qe(f, cfg);
  return to_dnf(g.rename(shift_map(drop, -drop)), k, cfg.max_dnf);
}

SectionResult synthesize_section(const MapSpec& m, const SemiAlgebraicSet& base_region, const Config& cfg) {
  const int d = m.domain_dim, c = m.codomain_dim, N = d + c;
  if (d < 1 || c < 1) throw DomainError("synthesize_section: domain and codomain must be nonempty");
  if (m.graph.n != N) throw DomainError("synthesize_section: graph dimension does not match the map");
  if (base_region.n != c) throw DomainError("synthesize_section: base region must live in the codomain");
  SectionResult res;
  SemiAlgebraicSet g = set_intersect(m.graph, to_dnf(base_region.to_formula().rename(shift_map(0, d)), N, cfg.max_dnf), cfg);

  SemiAlgebraicSet image = project_last(g, c, cfg);
  if (auto w = find_point(set_difference(base_region, image, cfg), cfg))
    throw NotSurjective("map is not surjective onto the base region: empty fibre over y = " + point_string(*w), *w);
  res.trace.push_back("case 4: section of the graph projection R^" + std::to_string(N) + " -> R^" + std::to_string(c));

  std::vector<Formula> parts;
  SemiAlgebraicSet cur = g;
  for (int k = 0; k < d; ++k) {
    res.trace.push_back("case 3: fibre coordinate " + std::to_string(k + 1) + " of " + std::to_string(d));
    SemiAlgebraicSet sub = to_dnf(cur.to_formula().rename(shift_map(k, -k)), N - k, cfg.max_dnf);
    res.trace.push_back("case 2: stereographic embedding of fibre coordinate " + std::to_string(k + 1));
    SemiAlgebraicSet emb = stereographic_embed(sub, 0, cfg);
    SectionResult inner = section_case1(emb, cfg);
    for (auto& t : inner.trace) res.trace.push_back(t);
    SemiAlgebraicSet back = stereographic_pullback(inner.graph, 0, cfg);
    parts.push_back(back.to_formula().rename(shift_map(0, k)));
    if (k + 1 < d) cur = qe_set(Formula::exists(k, cur.to_formula()), N, cfg);
  }
  res.graph = to_dnf(Formula::conj(parts), N, cfg.max_dnf);
  return res;
}

SectionCheck verify_section(const MapSpec& m, const SemiAlgebraicSet& section_graph,
                            const std::vector<std::vector<Rational>>& samples, const Config& cfg) {
  const int d = m.domain_dim, c = m.codomain_dim;
  SectionCheck out;
  for (const auto& y : samples) {
    if (static_cast<int>(y.size()) != c) throw DomainError("verify_section: sample has the wrong dimension");
    Formula f = section_graph.to_formula();
    for (int i = 0; i < c; ++i) f = f.substitute(d + i, Polynomial(y[i]));
    auto cells = cells_of(to_dnf(f, d, cfg.max_dnf), cfg);
    if (cells.size() != 1 || cells[0].dim != 0) {
      out.ok = false;
      out.failures.push_back("y = " + point_string(y) + ": section fibre is not a single point (" +
                             std::to_string(cells.size()) + " cells)");
      continue;
    }
    SamplePoint full = cells[0].sample;
    for (const auto& v : y) full.emplace_back(v);
    if (!in_set_at(m.graph, full)) {
      out.ok = false;
      out.failures.push_back("y = " + point_string(y) + ": section point " + point_string(full) + " is not on the graph");
    }
  }
  return out;
}

bool is_functional(const SemiAlgebraicSet& graph, int domain_dim, int codomain_dim, const Config& cfg) {
  const int d = domain_dim, N = d + codomain_dim;
  need_vars(N + d);
  Formula h = graph.to_formula();
  Formula h2 = h.rename(var_map([=](int v) { return v < d ? N + v : v; }));
  std::vector<Formula> differ;
  for (int i = 0; i < d; ++i) differ.push_back(Formula::atom(V(i) - V(N + i), Rel::Ne));
  Formula f = Formula::conj({h, h2, Formula::disj(differ)});
  for (int v = N + d - 1; v >= 0; --v) f = Formula::exists(v, f);
  return !decide(f, cfg);
}

std::vector<Stratum> stratify_map(const MapSpec& m, const Config& cfg) {
  const int d = m.domain_dim, N = d + m.codomain_dim;
  if (d < 1 || m.graph.n != N) throw DomainError("stratify_map: graph dimension does not match the map");
  check_caps(m.graph.to_formula(), N, cfg);
  ProjectionSet base{N, std::vector<std::vector<Polynomial>>(N)};
  for (const auto& c : m.graph.disjuncts)
    for (const auto& a : c) base.add(a.poly);
  std::set<int> closed;
  for (int l = 0; l < d; ++l) closed.insert(l);
  CadTree tree(compute_projection(std::move(base), cfg.projection, closed), cfg.projection);
  std::vector<std::vector<std::pair<FactoredPoly, Rel>>> conds;
  for (const auto& c : m.graph.disjuncts) {
    std::vector<std::pair<FactoredPoly, Rel>> fc;
    for (const auto& a : c) fc.push_back({tree.factor(a.poly), a.rel});
    conds.push_back(std::move(fc));
  }
  auto member = [&](int id) {
    for (const auto& c : conds) {
      bool all = true;
      for (const auto& [fp, rel] : c) all = all && holds(rel, tree.sign(id, fp));
      if (all) return true;
    }
    return false;
  };

  std::vector<Stratum> out;
  for (int id : tree.cells_at_level(d)) {
    Stratum s;
    std::vector<int> stack{id};
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      if (tree.node(cur).level == N) {
        if (member(cur)) s.branches.push_back(tree.node(cur).index);
        continue;
      }
      const std::vector<int> ch = tree.children(cur);
      for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
    }
    if (s.branches.empty()) continue;
    SignCondition cond;
    for (int l = 0; l < d; ++l)
      for (int i = 0; i < static_cast<int>(tree.projection().levels[l].size()); ++i) {
        int sg = tree.factor_sign(id, l, i);
        cond.push_back({tree.projection().levels[l][i], sg > 0 ? Rel::Gt : sg < 0 ? Rel::Lt : Rel::Eq});
      }
    s.set = SemiAlgebraicSet{d, {cond}};
    s.dim = tree.node(id).dim();
    s.sample = tree.node(id).sample;
    out.push_back(std::move(s));
  }
  return out;
}

bool single_branch(const Stratum& s, int domain_dim) {
  for (const auto& idx : s.branches)
    for (std::size_t i = domain_dim; i < idx.size(); ++i)
      if (idx[i] % 2 == 0) return false;
  return true;
}

}  // namespace tn
