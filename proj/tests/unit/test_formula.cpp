#include "doctest.h"

#include "tn/errors.hpp"
#include "tn/formula.hpp"
#include "tn/text.hpp"

#include <random>

using namespace tn;

namespace {

Polynomial P(const char* s, VarNames names = VarNames({"x", "y"})) { return parse_polynomial(s, names); }

std::vector<Rational> pt(std::initializer_list<Rational> xs) { return std::vector<Rational>(xs); }

Formula random_qf(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : 4), rel(0, 5), c(-2, 2);
  switch (pick(rng)) {
    case 0:
    case 1: {
      Polynomial p = Polynomial::variable(0).scaled(c(rng)) + Polynomial::variable(1).pow(1 + (c(rng) & 1)) +
                     Polynomial(c(rng));
      return Formula::atom(p, static_cast<Rel>(rel(rng)));
    }
    case 2: return Formula::conj({random_qf(rng, depth - 1), random_qf(rng, depth - 1)});
    case 3: return Formula::disj({random_qf(rng, depth - 1), random_qf(rng, depth - 1)});
    default: return Formula::negation(random_qf(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("parse examples") {
  VarNames names;
  Formula f = parse_formula("E y. x*y = 1", names);
  CHECK(names.find("x") == 0);
  CHECK(names.find("y") == 1);
  REQUIRE(f.kind() == Formula::Kind::Exists);
  CHECK(f.bound_var() == 1);
  CHECK(f.body() == Formula::atom(P("x*y - 1"), Rel::Eq));

  Formula g = parse_formula("x > 0 & x < 1");
  CHECK(g == Formula::conj({Formula::atom(P("x"), Rel::Gt), Formula::atom(P("1 - x"), Rel::Gt)}));

  VarNames n2;
  Formula h = parse_formula("A e. e > 0 -> E y. (y > 0 & y < 1) & (x-y)^2 < e", n2);
  CHECK(n2.find("x") == 0);
  CHECK(n2.find("e") == 1);
  CHECK(n2.find("y") == 2);
  REQUIRE(h.kind() == Formula::Kind::ForAll);
  const Formula& imp = h.body();
  REQUIRE(imp.kind() == Formula::Kind::Or);
  CHECK(imp.children()[1].kind() == Formula::Kind::Exists);
  CHECK(h.free_variables() == std::set<int>{0});
}

TEST_CASE("parse: variables, comments, constants, errors") {
  VarNames n;
  Formula f = parse_formula("# comment\nx2 > y # trailing\n", n);
  CHECK(n.find("x2") == 1);
  CHECK(n.find("y") == 0);
  CHECK(parse_formula("true & x1 > 0") == parse_formula("x1 > 0"));
  CHECK(parse_formula("false | x1 > 0") == parse_formula("x1 > 0"));
  CHECK(parse_formula("!(x1 > 0)").kind() == Formula::Kind::Not);
  CHECK(parse_formula("(x1 + 1)^2 >= 0").kind() == Formula::Kind::Atom);
  CHECK(parse_formula("((x1 > 0))") == parse_formula("x1 > 0"));
  CHECK(parse_formula("x1 > 0 -> x2 > 0 -> x3 > 0") == parse_formula("!(x1 > 0) | (!(x2 > 0) | x3 > 0)"));
  CHECK_THROWS_AS(parse_formula("x1 >"), ParseError);
  CHECK_THROWS_AS(parse_formula("x1 > 0 &"), ParseError);
  CHECK_THROWS_AS(parse_formula("(x1 > 0"), ParseError);
  CHECK_THROWS_AS(parse_formula("x1 + 2"), ParseError);
  try {
    parse_formula("x1 > 0 &\n  & x2 < 0");
    FAIL("expected error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("print/parse round trip (property)") {
  std::mt19937 rng(29);
  for (int i = 0; i < 300; ++i) {
    Formula f = random_qf(rng, 3);
    if (i % 3 == 0) f = Formula::exists(2, Formula::conj({f, Formula::atom(P("x1 - x3", {}), Rel::Ge)}));
    if (i % 5 == 0) f = Formula::forall(3, Formula::disj({f, Formula::atom(P("x4", {}), Rel::Lt)}));
    std::string s = f.to_string();
    VarNames names;
    Formula g = parse_formula(s, names);
    CHECK_MESSAGE(g == f, s);
  }
}

TEST_CASE("eval_qf examples") {
  CHECK(eval_qf(parse_formula("x^2 + y^2 < 1"), pt({0, 0})));
  CHECK_FALSE(eval_qf(parse_formula("x > 0"), pt({-1})));
  CHECK_FALSE(eval_qf(parse_formula("(x-1)*(x-2) > 0"), pt({Rational(3, 2)})));
  CHECK_THROWS_AS(eval_qf(parse_formula("E y. y > x"), pt({0, 0})), DomainError);
}

TEST_CASE("to_prenex examples") {
  Formula qf = parse_formula("x1 > 0 & x2 < 1");
  CHECK(to_prenex(qf) == qf);
  Formula f = parse_formula("!(E x2. x2*x1 = 1)");
  Formula g = to_prenex(f);
  REQUIRE(g.kind() == Formula::Kind::ForAll);
  CHECK(g.bound_var() == 1);
  CHECK(g.body() == Formula::atom(P("x1*x2 - 1", {}), Rel::Ne));
  // (E x. phi) & psi with x free in psi: the bound copy gets a fresh index
  Formula h = to_prenex(parse_formula("(E x1. x1 > x2) & x1 > 0"));
  REQUIRE(h.kind() == Formula::Kind::Exists);
  CHECK(h.bound_var() == 2);
  CHECK(h.body() == Formula::conj({Formula::atom(P("x3 - x2", {}), Rel::Gt), Formula::atom(P("x1", {}), Rel::Gt)}));
  CHECK(h.free_variables() == std::set<int>{0, 1});
}

TEST_CASE("to_dnf examples") {
  SemiAlgebraicSet a = to_dnf(parse_formula("!(x > 0)"), 1);
  REQUIRE(a.disjuncts.size() == 1);
  CHECK(a.disjuncts[0] == SignCondition{{P("x"), Rel::Le}});
  SemiAlgebraicSet b = to_dnf(parse_formula("(x > 0 | y > 0) & x < 3"), 2);
  CHECK(b.disjuncts.size() == 2);
  SemiAlgebraicSet c = to_dnf(parse_formula("!(x = 0 | x > 1)"), 1);
  REQUIRE(c.disjuncts.size() == 1);
  CHECK(c.disjuncts[0].size() == 2);
  for (Rational x : {Rational(-1), Rational(0), Rational(1, 2), Rational(2)})
    CHECK(c.contains(pt({x})) == (x != 0 && x <= 1));
  CHECK(to_dnf(parse_formula("false"), 2).trivially_empty());
  CHECK(to_dnf(parse_formula("x > 0 & x < 0"), 1).trivially_empty());
  CHECK(to_dnf(parse_formula("x >= 0 & x <= 0"), 1).disjuncts[0] == SignCondition{{P("x"), Rel::Eq}});
  CHECK(to_dnf(parse_formula("x > 0 | x <= 0 | y = 1"), 2).disjuncts.size() == 3);
  CHECK_THROWS_AS(to_dnf(parse_formula("(x>0|y>0)&(x>1|y>1)&(x>2|y>2)"), 2, 4), CapExceeded);
}

TEST_CASE("to_dnf preserves truth values and removes negations (property)") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int i = 0; i < 200; ++i) {
    Formula f = random_qf(rng, 4);
    SemiAlgebraicSet s = to_dnf(f, 2);
    Formula back = s.to_formula();
    std::function<bool(const Formula&)> no_not = [&](const Formula& g) {
      if (g.kind() == Formula::Kind::Not) return false;
      for (const auto& ch : g.children())
        if (!no_not(ch)) return false;
      return true;
    };
    CHECK(no_not(back));
    for (int k = 0; k < 10; ++k) {
      auto p = pt({Rational(c(rng), 2), Rational(c(rng))});
      CHECK(s.contains(p) == eval_qf(f, p));
      CHECK(eval_qf(to_nnf(f), p) == eval_qf(f, p));
    }
  }
}
