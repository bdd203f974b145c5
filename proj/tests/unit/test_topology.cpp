#include "doctest.h"

#include "tn/errors.hpp"
#include "tn/topology.hpp"

#include <algorithm>
#include <random>

using namespace tn;

namespace {

SemiAlgebraicSet S(const char* s, int n) {
  VarNames names({"x", "y", "z"});
  return set_from_formula(parse_formula(s, names), n);
}

}  // namespace

TEST_CASE("connected components: golden counts") {
  CHECK(connected_components(S("x^2 = 1", 1)).count == 2);
  CHECK(connected_components(S("x^2 + y^2 = 1", 2)).count == 1);
  CHECK(connected_components(S("x^2 + y^2 != 1", 2)).count == 2);
  CHECK(connected_components(S("x*(x-1)*(x-2) > 0", 1)).count == 2);
}

TEST_CASE("connected components: hand-derived planar examples") {
  struct Case {
    const char* set;
    int count;
  } cases[] = {
      {"x*y > 0", 2},
      {"x*y >= 0", 1},
      {"x*y = 1", 2},
      {"x*y = 0", 1},
      {"x*y != 0", 4},
      {"x*y = 1 | x = 0", 3},
      {"x^2 + y^2 < 1 | (x-3)^2 + y^2 < 1", 2},
      {"x^2 + y^2 < 1 | (x-2)^2 + y^2 < 1", 2},
      {"x^2 + y^2 <= 1 | (x-2)^2 + y^2 <= 1", 1},
      {"(x^2 + y^2 - 1)*(x^2 + y^2 - 4) = 0", 2},
      {"y^2 = x^3", 1},
      {"y^2 = x^2*(x+1)", 1},
      {"y^2 = x^2*(x-1)", 2},
      {"y > x^2 & y < 1", 1},
      {"y^2 < x^2*(x+1)", 2},
      {"false", 0},
  };
  for (const auto& c : cases) {
    CAPTURE(c.set);
    auto rep = connected_components(S(c.set, 2));
    CHECK(rep.count == c.count);
    CHECK(rep.representatives.size() == static_cast<std::size_t>(c.count));
  }
}

TEST_CASE("connected components: representatives lie in the set and are pairwise separated") {
  auto s = S("x*y != 0", 2);
  auto rep = connected_components(s);
  REQUIRE(rep.count == 4);
  std::vector<std::pair<int, int>> quadrants;
  for (const auto& p : rep.representatives) {
    REQUIRE(p[0].is_rational());
    REQUIRE(p[1].is_rational());
    std::vector<Rational> q{p[0].rational_value(), p[1].rational_value()};
    CHECK(contains(s, q));
    quadrants.push_back({sgn(q[0]), sgn(q[1])});
  }
  std::sort(quadrants.begin(), quadrants.end());
  CHECK(std::unique(quadrants.begin(), quadrants.end()) == quadrants.end());
}

TEST_CASE("connected components: invariance and errors") {
  auto a = S("x^2 + y^2 < 1 | (x-3)^2 + y^2 < 1 | y = 5", 2);
  SemiAlgebraicSet b{2, {a.disjuncts.rbegin(), a.disjuncts.rend()}};
  CHECK(connected_components(a).count == connected_components(b).count);
  CHECK(connected_components(S("0 < x & x < 1 & 0 < y & y < 1", 2)).count == 1);
  CHECK_THROWS_AS(connected_components(S("x > 0", 3)), DomainError);
}

TEST_CASE("euler characteristic with compact supports") {
  CHECK(euler_characteristic_c(SemiAlgebraicSet::whole(1)) == -1);
  CHECK(euler_characteristic_c(SemiAlgebraicSet::whole(2)) == 1);
  CHECK(euler_characteristic_c(SemiAlgebraicSet::whole(3)) == -1);
  CHECK(euler_characteristic_c(S("x^2 + y^2 = 1", 2)) == 0);
  CHECK(euler_characteristic_c(S("x^2 + y^2 <= 1", 2)) == 1);
  CHECK(euler_characteristic_c(S("x^2 + y^2 < 1", 2)) == 1);
  CHECK(euler_characteristic_c(S("0 < x & x < 1 & 0 < y & y < 1 & 0 < z & z < 1", 3)) == -1);
  CHECK(euler_characteristic_c(S("x^2 = 1", 1)) == 2);
  CHECK(euler_characteristic_c(S("false", 2)) == 0);
}

TEST_CASE("euler characteristic: additivity and order independence") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> c(-2, 2), rel(0, 5);
  auto rnd = [&]() {
    Polynomial p = Polynomial::variable(0).pow(2).scaled(c(rng)) + Polynomial::variable(1).scaled(c(rng) == 0 ? 1 : 2) +
                   Polynomial::variable(0).scaled(c(rng)) + Polynomial(c(rng));
    return SemiAlgebraicSet{2, {{Atom{p, static_cast<Rel>(rel(rng))}}}};
  };
  for (int round = 0; round < 15; ++round) {
    auto a = rnd(), b = rnd();
    auto bo = set_difference(b, a);
    CHECK(is_empty(set_intersect(a, bo)));
    CHECK(euler_characteristic_c(set_union(a, bo)) == euler_characteristic_c(a) + euler_characteristic_c(bo));
    auto u = set_union(a, b);
    SemiAlgebraicSet rev{2, {u.disjuncts.rbegin(), u.disjuncts.rend()}};
    CHECK(euler_characteristic_c(u) == euler_characteristic_c(rev));
  }
}

TEST_CASE("dimension") {
  CHECK(dimension(S("x^2 + y^2 = 1", 2)) == 1);
  CHECK(dimension(S("x = 0 & y = 0", 2)) == 0);
  CHECK(dimension(S("x^2 + y^2 <= 1", 2)) == 2);
  CHECK(dimension(S("x^2 + y^2 < 0", 2)) == -1);
  auto a = S("x = 0 & y > 0", 2), b = S("x >= 0", 2);
  CHECK(is_subset(a, b));
  CHECK(dimension(a) <= dimension(b));
}
