#include "doctest.h"

#include "tn/errors.hpp"
#include "tn/section.hpp"

using namespace tn;

namespace {

SemiAlgebraicSet S(const char* s, int n, VarNames names = VarNames({"t", "y"})) {
  return set_from_formula(parse_formula(s, names), n);
}

Config caps(int vars) {
  Config c;
  c.max_vars = vars;
  return c;
}

MapSpec map_of(const char* graph) { return MapSpec{1, 1, S(graph, 2)}; }

}  // namespace

TEST_CASE("stereographic embedding") {
  VarNames x({"x"});
  CHECK(equivalent(stereographic_embed(S("x > 0", 1, x), 0), S("2*x > 1 & x < 1", 1, x)));
  CHECK(equivalent(stereographic_embed(SemiAlgebraicSet::whole(1), 0), S("x > 0 & x < 1", 1, x)));
  CHECK(equivalent(stereographic_pullback(stereographic_embed(S("x = 0", 1, x), 0), 0), S("x = 0", 1, x)));
  auto e = stereographic_embed(S("x = 1", 1, x), 0);
  auto w = find_point(e);
  REQUIRE(w);
  // u = 1/2 + 1/(2 sqrt 2)
  CHECK((*w)[0].to_decimal() == "0.853553");
  auto band = S("t^2 <= y & y < 1", 2);
  CHECK(equivalent(stereographic_pullback(stereographic_embed(band, 0), 0), band));
}

TEST_CASE("case 1 recipe") {
  Config c4 = caps(4);
  auto cyl = section_case1(S("t >= 0 & t <= 1", 2), c4);
  CHECK(equivalent(cyl.graph, S("2*t = 1", 2)));
  CHECK_FALSE(cyl.trace.empty());

  // t in [-1,1] rescaled to [0,1]: fibre {(1 - sqrt y)/2, (1 + sqrt y)/2}.
  auto par = section_case1(S("(2*t - 1)^2 = y & y >= 0 & y <= 1", 2), c4);
  CHECK(equivalent(par.graph, S("(2*t - 1)^2 = y & 2*t <= 1 & y <= 1", 2)));
  MapSpec m{1, 1, S("(2*t - 1)^2 = y & y >= 0 & y <= 1", 2)};
  auto chk = verify_section(m, par.graph, {{Rational(1, 4)}});
  CHECK(chk.ok);
  CHECK(contains(par.graph, std::vector<Rational>{Rational(1, 4), Rational(1, 4)}));

  // Half-open runs and isolated points.
  auto mixed = section_case1(S("(t > 1/4 & t <= 1/2) | t = 1", 2), c4);
  CHECK(equivalent(mixed.graph, S("8*t = 3", 2)));
  auto iso = section_case1(S("t = 0 | (t >= 1/2 & t <= 1)", 2), c4);
  CHECK(equivalent(iso.graph, S("t = 0", 2)));

  CHECK_THROWS_AS(section_case1(S("t >= 0 & t <= 2", 2), c4), DomainError);
}

TEST_CASE("synthesize_section: identity, parabola, two branches, cylinder") {
  Config c4 = caps(4);
  auto id = map_of("t = y");
  auto sid = synthesize_section(id, SemiAlgebraicSet::whole(1), c4);
  CHECK(equivalent(sid.graph, S("t = y", 2)));
  CHECK(verify_section(id, sid.graph, {{Rational(7)}}).ok);

  auto par = map_of("t^2 = y & y >= 0 & y <= 1");
  auto base = S("t >= 0 & t <= 1", 1);
  auto spar = synthesize_section(par, base, c4);
  CHECK(equivalent(spar.graph, S("t^2 = y & t <= 0 & y <= 1", 2)));
  auto chk = verify_section(par, spar.graph, {{Rational(0)}, {Rational(1, 4)}, {Rational(1)}});
  CHECK(chk.ok);
  CHECK(is_functional(spar.graph, 1, 1));

  auto two = map_of("t = y | t = y + 1");
  auto stwo = synthesize_section(two, SemiAlgebraicSet::whole(1), c4);
  CHECK(equivalent(stwo.graph, S("t = y", 2)));

  auto cyl = map_of("t >= 0 & t <= 1");
  auto scyl = synthesize_section(cyl, SemiAlgebraicSet::whole(1), c4);
  CHECK(is_functional(scyl.graph, 1, 1));
  CHECK(is_empty(set_difference(scyl.graph, cyl.graph)));
  CHECK(equivalent(project_last(scyl.graph, 1), SemiAlgebraicSet::whole(1)));
  CHECK(verify_section(cyl, scyl.graph, {{Rational(-3)}, {Rational(0)}, {Rational(5, 2)}}).ok);
}

TEST_CASE("synthesize_section: errors and negative controls") {
  Config c4 = caps(4);
  auto par = map_of("t^2 = y");
  try {
    synthesize_section(par, SemiAlgebraicSet::whole(1), c4);
    FAIL("expected NotSurjective");
  } catch (const NotSurjective& e) {
    REQUIRE(e.witness().size() == 1);
    CHECK(e.witness()[0] < AlgebraicNumber(0));
  }
  CHECK_THROWS_AS(synthesize_section(map_of("t = y"), SemiAlgebraicSet::whole(1)), CapExceeded);

  auto corrupt = S("t^2 = y", 2);
  auto chk = verify_section(par, corrupt, {{Rational(1, 4)}});
  CHECK_FALSE(chk.ok);
  REQUIRE(chk.failures.size() == 1);
  auto wrong = S("t = y + 1", 2);
  CHECK_FALSE(verify_section(par, wrong, {{Rational(1)}}).ok);
  CHECK_FALSE(is_functional(corrupt, 1, 1));
}

TEST_CASE("stratify_map") {
  // Domain coordinate y first, value t second.
  VarNames yt({"y", "t"});
  auto strata_of = [&](const char* g) { return stratify_map(MapSpec{1, 1, S(g, 2, yt)}); };

  auto sq = strata_of("t^2 = y & y >= 0");
  REQUIRE(sq.size() == 2);
  CHECK(equivalent(sq[0].set, S("y = 0", 1, yt)));
  CHECK(equivalent(sq[1].set, S("y > 0", 1, yt)));
  CHECK(sq[0].branches.size() == 1);
  CHECK(sq[1].branches.size() == 2);
  for (const auto& s : sq) CHECK(single_branch(s, 1));

  auto poly = strata_of("t = y^2");
  REQUIRE(poly.size() == 1);
  CHECK(equivalent(poly[0].set, SemiAlgebraicSet::whole(1)));

  auto pw = strata_of("(t = y & y <= 0) | (t = 2*y & y > 0)");
  REQUIRE(pw.size() == 3);
  CHECK(equivalent(pw[0].set, S("y < 0", 1, yt)));
  CHECK(equivalent(pw[1].set, S("y = 0", 1, yt)));
  CHECK(equivalent(pw[2].set, S("y > 0", 1, yt)));
  for (const auto& s : pw) {
    CHECK(s.branches.size() == 1);
    CHECK(single_branch(s, 1));
  }
  for (std::size_t i = 0; i < pw.size(); ++i)
    for (std::size_t j = i + 1; j < pw.size(); ++j) CHECK(is_empty(set_intersect(pw[i].set, pw[j].set)));
}
