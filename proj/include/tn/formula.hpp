#pragma once

#include "tn/polynomial.hpp"

#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tn {

enum class Rel { Eq, Ne, Gt, Ge, Lt, Le };

Rel negate(Rel r);
/// Relation obtained when the polynomial is negated: p rel 0 <=> -p flip(rel) 0.
Rel flip(Rel r);
bool holds(Rel r, int sign);
const char* to_string(Rel r);

/// p rel 0
struct Atom {
  Polynomial poly;
  Rel rel;
  bool operator==(const Atom&) const = default;
  std::strong_ordering operator<=>(const Atom& o) const;
};

class Formula {
 public:
  enum class Kind { True, False, Atom, And, Or, Not, Exists, ForAll };

  Formula();  // True
  static Formula truth(bool value);
  static Formula atom(Polynomial p, Rel rel);
  static Formula atom(Atom a) { return atom(std::move(a.poly), a.rel); }
  static Formula conj(std::vector<Formula> parts);
  static Formula disj(std::vector<Formula> parts);
  static Formula negation(Formula f);
  static Formula implies(Formula a, Formula b);
  static Formula iff(Formula a, Formula b);
  static Formula exists(int var, Formula body);
  static Formula forall(int var, Formula body);

  Kind kind() const;
  const Atom& as_atom() const;
  const std::vector<Formula>& children() const;  // And/Or: operands; Not/quantifiers: one child
  int bound_var() const;                         // quantifiers only
  const Formula& body() const { return children().front(); }

  bool is_quantifier_free() const;
  std::set<int> free_variables() const;
  std::set<int> all_variables() const;  // free, bound and quantified
  std::vector<Polynomial> polynomials() const;  // distinct atom polynomials, first-occurrence order

  Formula rename(std::span<const int> map) const;  // applied to every variable including bound ones
  /// Replaces free occurrences of var by value (no capture checks: value's variables must not be bound in *this).
  Formula substitute(int var, const Polynomial& value) const;

  bool operator==(const Formula& other) const;

  std::string to_string(const VarNames& names = {}) const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Parses the formula grammar. `xK` names denote variable K-1; other names
/// are given the lowest free indices, free variables first (in order of first
/// appearance), then bound ones. names receives every assignment.
/// Atoms `a rel b` become `(a - b) rel 0`, except `<` and `<=` with a nonzero
/// right side, which become `(b - a) > 0` and `(b - a) >= 0`.
Formula parse_formula(std::string_view text, VarNames& names);
Formula parse_formula(std::string_view text);

/// Quantifiers outermost, negations pushed to atoms; bound variables that
/// clash are renamed to the lowest unused index.
Formula to_prenex(const Formula& f);
/// Negation normal form without quantifier movement.
Formula to_nnf(const Formula& f);

/// Exact evaluation; point[i] is the value of variable i.
bool eval_qf(const Formula& f, std::span<const Rational> point);

using SignCondition = std::vector<Atom>;

/// Finite union of sign conditions in R^n. No disjuncts is the empty set; an
/// empty conjunction is all of R^n.
struct SemiAlgebraicSet {
  int n = 0;
  std::vector<SignCondition> disjuncts;

  static SemiAlgebraicSet empty(int n) { return {n, {}}; }
  static SemiAlgebraicSet whole(int n) { return {n, {SignCondition{}}}; }
  bool trivially_empty() const { return disjuncts.empty(); }
  bool contains(std::span<const Rational> point) const;
  Formula to_formula() const;
  std::string to_string(const VarNames& names = {}) const;
};

/// DNF with negations removed by relation flips. Constant atoms are
/// evaluated and repeated atoms or conjunctions are dropped. Throws
/// CapExceeded beyond max_disjuncts.
SemiAlgebraicSet to_dnf(const Formula& f, int n, std::size_t max_disjuncts = 4096);

}  // namespace tn
