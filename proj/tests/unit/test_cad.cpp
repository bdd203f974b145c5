#include "doctest.h"

#include "tn/cad.hpp"
#include "tn/errors.hpp"
#include "tn/poly_ops.hpp"
#include "tn/text.hpp"

#include <random>

using namespace tn;

namespace {

VarNames xyz() { return VarNames({"x", "y", "z"}); }

Polynomial P(const char* s) {
  VarNames n = xyz();
  return parse_polynomial(s, n);
}

Formula F(const char* s) {
  VarNames n = xyz();
  return parse_formula(s, n);
}

SemiAlgebraicSet S(const char* s, int n, const Config& cfg = {}) { return set_from_formula(F(s), n, cfg); }

Config wide(int vars) {
  Config c;
  c.max_vars = vars;
  return c;
}

// Sign of an atom polynomial that has become univariate (or constant) in var.
int univariate_sign(const Polynomial& p, int var, const AlgebraicNumber& a) {
  if (p.is_constant()) return sgn(p.constant_value());
  return sign_at(UPoly::from_polynomial(p, var), a);
}

bool eval_fiber(const Formula& f, int var, const AlgebraicNumber& a) {
  switch (f.kind()) {
    case Formula::Kind::True: return true;
    case Formula::Kind::False: return false;
    case Formula::Kind::Atom: return holds(f.as_atom().rel, univariate_sign(f.as_atom().poly, var, a));
    case Formula::Kind::Not: return !eval_fiber(f.body(), var, a);
    case Formula::Kind::And:
      for (const auto& c : f.children())
        if (!eval_fiber(c, var, a)) return false;
      return true;
    case Formula::Kind::Or:
      for (const auto& c : f.children())
        if (eval_fiber(c, var, a)) return true;
      return false;
    default: throw InternalError("eval_fiber: nested quantifier");
  }
}

// Brute-force value of "Q v. body" at a rational point of the free variables:
// the body is evaluated at every root of its substituted atoms and at a
// rational between, below and above them.
bool quantifier_oracle(const Formula& f, std::span<const Rational> point) {
  bool ex = f.kind() == Formula::Kind::Exists;
  int v = f.bound_var();
  Formula body = f.body();
  for (int w : f.free_variables()) body = body.substitute(w, Polynomial(point[w]));
  std::vector<AlgebraicNumber> roots;
  for (const auto& p : body.polynomials()) {
    if (p.is_constant()) continue;
    for (auto& r : AlgebraicNumber::roots_of(UPoly::from_polynomial(p, v))) {
      bool dup = false;
      for (const auto& q : roots) dup = dup || q == r;
      if (!dup) roots.push_back(r);
    }
  }
  std::sort(roots.begin(), roots.end());
  std::vector<AlgebraicNumber> samples;
  if (roots.empty()) samples.emplace_back(Rational(0));
  for (std::size_t i = 0; i < roots.size(); ++i) {
    samples.emplace_back(i == 0 ? rational_below(roots[0]) : rational_between(roots[i - 1], roots[i]));
    samples.push_back(roots[i]);
  }
  if (!roots.empty()) samples.emplace_back(rational_above(roots.back()));
  for (const auto& s : samples) {
    bool t = eval_fiber(body, v, s);
    if (ex && t) return true;
    if (!ex && !t) return false;
  }
  return !ex;
}

const std::vector<Rational> kGrid = {Rational(-3), Rational(-2), Rational(-1), Rational(-1, 2), Rational(0),
                                     Rational(1, 3), Rational(1), Rational(2), Rational(3)};

void check_against_oracle(const char* text) {
  CAPTURE(text);
  Formula f = F(text);
  Formula g = eliminate_quantifiers(f);
  CHECK(g.is_quantifier_free());
  auto fv = f.free_variables();
  for (int v : g.free_variables()) CHECK(fv.count(v) == 1);
  std::vector<int> vars(fv.begin(), fv.end());
  int top = vars.empty() ? 0 : vars.back() + 1;
  std::vector<Rational> point(top + 1, Rational(0));
  std::size_t total = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) total *= kGrid.size();
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t r = idx;
    for (int v : vars) {
      point[v] = kGrid[r % kGrid.size()];
      r /= kGrid.size();
    }
    CAPTURE(g.to_string(xyz()));
    CHECK(eval_qf(g, point) == quantifier_oracle(f, point));
  }
}

SemiAlgebraicSet random_set(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> c(-2, 2), rel(0, 5), count(1, 2);
  SemiAlgebraicSet s{n, {}};
  int k = count(rng);
  for (int d = 0; d < k; ++d) {
    SignCondition cond;
    int atoms = count(rng);
    for (int a = 0; a < atoms; ++a) {
      Polynomial p(c(rng));
      for (int v = 0; v < n; ++v) p += Polynomial::variable(v).pow(1 + (c(rng) & 1)).scaled(c(rng));
      if (p.is_constant()) p += Polynomial::variable(0);
      cond.push_back({p, static_cast<Rel>(rel(rng))});
    }
    s.disjuncts.push_back(cond);
  }
  return s;
}

}  // namespace

TEST_CASE("decompose examples") {
  Decomposition d1 = decompose({P("x")}, 1);
  REQUIRE(d1.cells.size() == 3);
  CHECK(d1.cells[0].signs == std::vector<int>{-1});
  CHECK(d1.cells[1].signs == std::vector<int>{0});
  CHECK(d1.cells[1].dim == 0);
  CHECK(d1.cells[2].signs == std::vector<int>{1});

  Decomposition circle = decompose({P("x^2 + y^2 - 1")}, 2);
  CHECK(circle.cells.size() == 13);
  int zeros = 0;
  for (const auto& c : circle.cells) zeros += c.signs[0] == 0;
  CHECK(zeros == 4);

  Decomposition whole = decompose({}, 2);
  REQUIRE(whole.cells.size() == 1);
  CHECK(whole.cells[0].dim == 2);

  Config mc;
  mc.projection = Projection::McCallum;
  CHECK(decompose({P("x^2 + y^2 - 1")}, 2, mc).cells.size() == 13);
}

TEST_CASE("decompose: sample signs, dims and coverage") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int round = 0; round < 12; ++round) {
    std::vector<Polynomial> polys;
    for (int k = 0; k < 2; ++k)
      polys.push_back(P("x^2 + y^2").scaled(c(rng)) + P("x*y").scaled(c(rng)) + P("x").scaled(c(rng)) +
                      P("y").scaled(c(rng) == 0 ? 1 : c(rng)) + Polynomial(c(rng)));
    Decomposition d = decompose(polys, 2);
    for (const auto& cell : d.cells) {
      int dim = 0;
      for (int i : cell.index) dim += i % 2 == 0;
      CHECK(dim == cell.dim);
      for (std::size_t j = 0; j < polys.size(); ++j) CHECK(sign_at_point(polys[j], cell.sample) == cell.signs[j]);
    }
    for (int t = 0; t < 20; ++t) {
      std::vector<Rational> q{Rational(c(rng), 1 + (t % 3)), Rational(c(rng), 1 + (t % 2))};
      std::vector<int> signs;
      for (const auto& p : polys) signs.push_back(sgn(p.evaluate(q)));
      bool found = false;
      for (const auto& cell : d.cells) found = found || cell.signs == signs;
      CHECK(found);
    }
  }
}

TEST_CASE("exact signs at algebraic points") {
  auto r2 = AlgebraicNumber::roots_of(UPoly::from_polynomial(P("x^2 - 2"), 0));
  auto r3 = AlgebraicNumber::roots_of(UPoly::from_polynomial(P("x^2 - 3"), 0));
  SamplePoint pt{r2[1], r3[1]};
  CHECK(sign_at_point(P("x^2*y^2 - 6"), pt) == 0);
  CHECK(sign_at_point(P("(x + y)^2 - 5 - 2*x*y"), pt) == 0);
  CHECK(sign_at_point(P("x*y - 2449/1000"), pt) == 1);
  CHECK(sign_at_point(P("x*y - 2450/1000"), pt) == -1);
  // sqrt2 + sqrt3 is a root of t^4 - 10 t^2 + 1.
  auto t = AlgebraicNumber::root_of(UPoly::from_polynomial(P("x^4 - 10*x^2 + 1"), 0), 3, 4);
  SamplePoint p3{r2[1], r3[1], t};
  CHECK(sign_at_point(P("z - x - y"), p3) == 0);
  CHECK(sign_at_point(P("z - x - y - 1/1000000000000"), p3) == -1);
  CHECK(sign_at_point(P("z^2 - 5 - 2*x*y"), p3) == 0);
}

TEST_CASE("decompose: caps and McCallum nullification") {
  CHECK_THROWS_AS(decompose({P("x")}, 4), CapExceeded);
  CHECK_THROWS_AS(decompose({P("x^7")}, 1), CapExceeded);
  Config mc = wide(4);
  mc.projection = Projection::McCallum;
  // x*x4 + y vanishes identically over the z-axis, a 1-cell of R^3.
  CHECK_THROWS_AS(decompose({P("x*x4 + y")}, 4, mc), NotWellOriented);
  CHECK(decompose({P("x*x4 + y")}, 4, wide(4)).cells.size() > 0);
  // Over a point of R^2 nullification is harmless.
  CHECK_NOTHROW(decompose({P("x*z - y")}, 3, mc));
}

TEST_CASE("quantifier elimination examples") {
  SemiAlgebraicSet a = set_from_formula(eliminate_quantifiers(F("E y. x*y = 1")), 1);
  CHECK(equivalent(a, S("x != 0", 1)));
  SemiAlgebraicSet b = set_from_formula(eliminate_quantifiers(F("E y. y^2 = x")), 1);
  CHECK(equivalent(b, S("x >= 0", 1)));
  Formula qf = F("x > 0 & y < x^2");
  CHECK(eliminate_quantifiers(qf) == qf);
  CHECK(decide(F("E x. x^2 = 2")));
  CHECK_FALSE(decide(F("E x. x^2 < 0")));
  CHECK(decide(F("A x. E y. y > x")));
  CHECK_FALSE(decide(F("E y. A x. y > x")));
  CHECK(decide(F("A x. A y. x^2 + y^2 >= 2*x*y")));
  SemiAlgebraicSet disc = set_from_formula(F("A x. x^2 + y*x + z > 0"), 3);
  CHECK(equivalent(disc, S("y^2 - 4*z < 0", 3)));
}

TEST_CASE("quantifier elimination agrees with the brute-force oracle") {
  const char* corpus[] = {
      "E y. x*y = 1",
      "E y. y^2 = x",
      "A y. x^2 + y*x + z > 0",
      "E y. y^2 + x^2 < 1",
      "E y. y^2 + x^2 = 1 & y > 0",
      "A y. y^2 + x*y + 1 > 0",
      "E y. x*y^2 + y + 1 = 0",
      "E y. y^3 - y = x",
      "E y. (y - x)*(y + x) = 0 & y > 1",
      "A y. y^2 >= x",
      "E y. y > 0 & y < x",
      "E y. x*y > 1 & y < 1",
      "E y. y^2 = x & y^2 = 2 - x",
      "A y. (y > x -> y^2 > x^2)",
      "E y. z*y^2 + x*y + 1 = 0",
      "E y. x^2 + y^2 + z^2 < 1",
      "A y. x*y + z >= 0",
      "E y. y^4 - x*y^2 + z = 0",
      "E y. x*y = z & y^2 = 1",
      "E y. (x - y)^2 + (z - y)^2 < 1",
  };
  for (const char* text : corpus) check_against_oracle(text);
}

TEST_CASE("set_from_formula, projection, membership") {
  CHECK(S("x > 0", 1).disjuncts.size() == 1);
  CHECK(S("false", 1).trivially_empty());
  CHECK(equivalent(S("E y. x = y^2", 1), S("x >= 0", 1)));
  CHECK(equivalent(project(S("x^2 + y^2 = 1", 2), 1), S("x >= -1 & x <= 1", 1)));
  CHECK(equivalent(project(S("x*y = 1", 2), 1), S("x != 0", 1)));
  CHECK(project(SemiAlgebraicSet::empty(2), 1).trivially_empty());
  std::vector<Rational> origin{Rational(0), Rational(0)};
  CHECK(contains(S("x^2 + y^2 < 1", 2), origin));
  CHECK_THROWS_AS(project(S("x > 0", 1), 1), DomainError);
}

TEST_CASE("set operations") {
  auto a = S("x > 0", 1);
  CHECK(equivalent(set_union(a, SemiAlgebraicSet::empty(1)), a));
  CHECK(equivalent(set_complement(a), S("x <= 0", 1)));
  CHECK(equivalent(set_intersect(a, S("x < 1", 1)), S("0 < x & x < 1", 1)));
  CHECK(is_empty(set_difference(S("x > 1", 1), a)));
  CHECK_FALSE(is_empty(set_difference(a, S("x > 1", 1))));
  CHECK(is_subset(S("x > 1", 1), a));
  CHECK_THROWS_AS(set_union(a, S("y > 0", 2)), DomainError);
}

TEST_CASE("emptiness and witnesses") {
  CHECK(is_empty(S("x^2 < 0", 1)));
  auto root2 = S("x^2 = 2", 1);
  CHECK_FALSE(is_empty(root2));
  auto w = find_point(root2);
  REQUIRE(w);
  CHECK(sign_at_point(P("x^2 - 2"), *w) == 0);
  CHECK((*w)[0].to_decimal() == "-1.414214");
  CHECK(is_empty(S("x^2 + y^2 < 1 & x + y > 2", 2)));
  auto pw = find_point(S("y^2 = x & x = 2 & y > 0", 2));
  REQUIRE(pw);
  CHECK((*pw)[0] == AlgebraicNumber(2));
  CHECK((*pw)[1].to_decimal() == "1.414214");
  CHECK(find_point(S("z > 1", 3)).has_value());
}

TEST_CASE("closure examples") {
  CHECK(equivalent(closure(S("0 < x & x < 1", 1)), S("0 <= x & x <= 1", 1)));
  CHECK(equivalent(closure(S("x >= 0", 1)), S("x >= 0", 1)));
  CHECK(equivalent(closure(S("x > 0 & x != 1", 1)), S("x >= 0", 1)));
  CHECK(equivalent(closure(S("x^2 > 1", 1)), S("x^2 >= 1", 1)));
  CHECK(equivalent(closure(S("x != 0", 1)), SemiAlgebraicSet::whole(1)));
  CHECK_THROWS_AS(closure(S("x > 0 & y > 0", 2)), CapExceeded);
  Config c5 = wide(5);
  CHECK(equivalent(closure(S("x > 0 & y > 0", 2), c5), S("x >= 0 & y >= 0", 2)));
  Formula psi = closure_formula(S("x > 0", 1));
  CHECK(psi.kind() == Formula::Kind::ForAll);
  CHECK(psi.free_variables() == std::set<int>{0});
}

TEST_CASE("closure properties on random intervals") {
  std::mt19937 rng(11);
  for (int round = 0; round < 8; ++round) {
    auto s = random_set(rng, 1);
    auto c = closure(s);
    CHECK(is_subset(s, c));
    CHECK(equivalent(closure(c), c));
  }
}

TEST_CASE("image and preimage") {
  Formula sq = F("y = x^2");
  CHECK(equivalent(image(SemiAlgebraicSet::whole(1), sq, 1, 1), S("x >= 0", 1)));
  CHECK(equivalent(preimage(S("x = 1", 1), sq, 1, 1), S("x = 1 | x = -1", 1)));
  CHECK(equivalent(image(S("0 < x & x < 1", 1), F("y = 2*x"), 1, 1), S("0 < x & x < 2", 1)));
}

TEST_CASE("double complement and projection monotonicity") {
  std::mt19937 rng(3);
  for (int round = 0; round < 10; ++round) {
    auto a = random_set(rng, 2);
    CHECK(equivalent(set_complement(set_complement(a)), a));
    auto b = set_union(a, random_set(rng, 2));
    CHECK(is_subset(project(a, 1), project(b, 1)));
  }
}

TEST_CASE("caps") {
  CHECK_THROWS_AS(eliminate_quantifiers(F("E y. E z. E w. x*y*z*w > 0")), CapExceeded);
  CHECK_THROWS_AS(eliminate_quantifiers(F("E y. y^7 = x")), CapExceeded);
  Config small;
  small.max_dnf = 2;
  CHECK_THROWS_AS(set_union(S("x > 1", 1), S("x < -1 | x = 0", 1), small), CapExceeded);
}
