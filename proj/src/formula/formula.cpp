#include "tn/formula.hpp"

#include "tn/errors.hpp"
#include "tn/poly_ops.hpp"

#include <algorithm>
#include <map>

namespace tn {

Rel negate(Rel r) {
  switch (r) {
    case Rel::Eq: return Rel::Ne;
    case Rel::Ne: return Rel::Eq;
    case Rel::Gt: return Rel::Le;
    case Rel::Ge: return Rel::Lt;
    case Rel::Lt: return Rel::Ge;
    case Rel::Le: return Rel::Gt;
  }
  throw InternalError("bad relation");
}

Rel flip(Rel r) {
  switch (r) {
    case Rel::Eq: return Rel::Eq;
    case Rel::Ne: return Rel::Ne;
    case Rel::Gt: return Rel::Lt;
    case Rel::Ge: return Rel::Le;
    case Rel::Lt: return Rel::Gt;
    case Rel::Le: return Rel::Ge;
  }
  throw InternalError("bad relation");
}

bool holds(Rel r, int s) {
  switch (r) {
    case Rel::Eq: return s == 0;
    case Rel::Ne: return s != 0;
    case Rel::Gt: return s > 0;
    case Rel::Ge: return s >= 0;
    case Rel::Lt: return s < 0;
    case Rel::Le: return s <= 0;
  }
  throw InternalError("bad relation");
}

const char* to_string(Rel r) {
  switch (r) {
    case Rel::Eq: return "=";
    case Rel::Ne: return "!=";
    case Rel::Gt: return ">";
    case Rel::Ge: return ">=";
    case Rel::Lt: return "<";
    case Rel::Le: return "<=";
  }
  throw InternalError("bad relation");
}

std::strong_ordering Atom::operator<=>(const Atom& o) const {
  if (auto c = poly <=> o.poly; c != 0) return c;
  return static_cast<int>(rel) <=> static_cast<int>(o.rel);
}

struct Formula::Node {
  Kind kind;
  Atom atom{};
  std::vector<Formula> children;
  int var = -1;
};

Formula::Formula() : node_(std::make_shared<const Node>(Node{Kind::True, {}, {}, -1})) {}

Formula Formula::truth(bool value) {
  return Formula(std::make_shared<const Node>(Node{value ? Kind::True : Kind::False, {}, {}, -1}));
}

Formula Formula::atom(Polynomial p, Rel rel) {
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, Atom{std::move(p), rel}, {}, -1}));
}

Formula Formula::conj(std::vector<Formula> parts) {
  std::vector<Formula> flat;
  for (auto& f : parts) {
    if (f.kind() == Kind::True) continue;
    if (f.kind() == Kind::False) return truth(false);
    if (f.kind() == Kind::And) {
      for (const auto& c : f.children()) flat.push_back(c);
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (flat.empty()) return truth(true);
  if (flat.size() == 1) return flat.front();
  return Formula(std::make_shared<const Node>(Node{Kind::And, {}, std::move(flat), -1}));
}

Formula Formula::disj(std::vector<Formula> parts) {
  std::vector<Formula> flat;
  for (auto& f : parts) {
    if (f.kind() == Kind::False) continue;
    if (f.kind() == Kind::True) return truth(true);
    if (f.kind() == Kind::Or) {
      for (const auto& c : f.children()) flat.push_back(c);
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (flat.empty()) return truth(false);
  if (flat.size() == 1) return flat.front();
  return Formula(std::make_shared<const Node>(Node{Kind::Or, {}, std::move(flat), -1}));
}

Formula Formula::negation(Formula f) {
  switch (f.kind()) {
    case Kind::True: return truth(false);
    case Kind::False: return truth(true);
    case Kind::Not: return f.body();
    default: break;
  }
  return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, {std::move(f)}, -1}));
}

Formula Formula::implies(Formula a, Formula b) { return disj({negation(std::move(a)), std::move(b)}); }

Formula Formula::iff(Formula a, Formula b) { return conj({implies(a, b), implies(b, a)}); }

Formula Formula::exists(int var, Formula body) {
  if (var < 0 || var >= kMaxVars) throw CapExceeded("variable index exceeds the hard limit");
  return Formula(std::make_shared<const Node>(Node{Kind::Exists, {}, {std::move(body)}, var}));
}

Formula Formula::forall(int var, Formula body) {
  if (var < 0 || var >= kMaxVars) throw CapExceeded("variable index exceeds the hard limit");
  return Formula(std::make_shared<const Node>(Node{Kind::ForAll, {}, {std::move(body)}, var}));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const Atom& Formula::as_atom() const {
  if (kind() != Kind::Atom) throw InternalError("not an atom");
  return node_->atom;
}

const std::vector<Formula>& Formula::children() const { return node_->children; }

int Formula::bound_var() const { return node_->var; }

bool Formula::is_quantifier_free() const {
  switch (kind()) {
    case Kind::Exists:
    case Kind::ForAll: return false;
    default: break;
  }
  for (const auto& c : children())
    if (!c.is_quantifier_free()) return false;
  return true;
}

namespace {

void collect_free(const Formula& f, std::set<int>& bound, std::set<int>& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom:
      for (int v : f.as_atom().poly.variables())
        if (!bound.count(v)) out.insert(v);
      return;
    case K::Exists:
    case K::ForAll: {
      bool inserted = bound.insert(f.bound_var()).second;
      collect_free(f.body(), bound, out);
      if (inserted) bound.erase(f.bound_var());
      return;
    }
    default:
      for (const auto& c : f.children()) collect_free(c, bound, out);
  }
}

void collect_all(const Formula& f, std::set<int>& out) {
  if (f.kind() == Formula::Kind::Atom) {
    for (int v : f.as_atom().poly.variables()) out.insert(v);
    return;
  }
  if (f.kind() == Formula::Kind::Exists || f.kind() == Formula::Kind::ForAll) out.insert(f.bound_var());
  for (const auto& c : f.children()) collect_all(c, out);
}

void collect_polys(const Formula& f, std::vector<Polynomial>& out) {
  if (f.kind() == Formula::Kind::Atom) {
    const auto& p = f.as_atom().poly;
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    return;
  }
  for (const auto& c : f.children()) collect_polys(c, out);
}

}  // namespace

std::set<int> Formula::free_variables() const {
  std::set<int> bound, out;
  collect_free(*this, bound, out);
  return out;
}

std::set<int> Formula::all_variables() const {
  std::set<int> out;
  collect_all(*this, out);
  return out;
}

std::vector<Polynomial> Formula::polynomials() const {
  std::vector<Polynomial> out;
  collect_polys(*this, out);
  return out;
}

Formula Formula::rename(std::span<const int> map) const {
  switch (kind()) {
    case Kind::True:
    case Kind::False: return *this;
    case Kind::Atom: return atom(as_atom().poly.rename(map), as_atom().rel);
    case Kind::Exists:
    case Kind::ForAll: {
      int v = bound_var();
      if (v >= static_cast<int>(map.size())) throw InternalError("rename: bound variable not covered");
      Formula b = body().rename(map);
      return kind() == Kind::Exists ? exists(map[v], b) : forall(map[v], b);
    }
    case Kind::Not: return negation(body().rename(map));
    case Kind::And:
    case Kind::Or: {
      std::vector<Formula> parts;
      for (const auto& c : children()) parts.push_back(c.rename(map));
      return kind() == Kind::And ? conj(std::move(parts)) : disj(std::move(parts));
    }
  }
  throw InternalError("bad formula kind");
}

Formula Formula::substitute(int var, const Polynomial& value) const {
  switch (kind()) {
    case Kind::True:
    case Kind::False: return *this;
    case Kind::Atom: return atom(as_atom().poly.substitute(var, value), as_atom().rel);
    case Kind::Exists:
    case Kind::ForAll:
      if (bound_var() == var) return *this;
      return kind() == Kind::Exists ? exists(bound_var(), body().substitute(var, value))
                                    : forall(bound_var(), body().substitute(var, value));
    case Kind::Not: return negation(body().substitute(var, value));
    case Kind::And:
    case Kind::Or: {
      std::vector<Formula> parts;
      for (const auto& c : children()) parts.push_back(c.substitute(var, value));
      return kind() == Kind::And ? conj(std::move(parts)) : disj(std::move(parts));
    }
  }
  throw InternalError("bad formula kind");
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::True:
    case Kind::False: return true;
    case Kind::Atom: return as_atom() == other.as_atom();
    case Kind::Exists:
    case Kind::ForAll:
      if (bound_var() != other.bound_var()) return false;
      break;
    default: break;
  }
  return children() == other.children();
}

namespace {

std::string print(const Formula& f, const VarNames& names);

std::string print_operand(const Formula& f, const VarNames& names, Formula::Kind parent) {
  using K = Formula::Kind;
  bool wrap = f.kind() == K::Exists || f.kind() == K::ForAll || (parent == K::And && f.kind() == K::Or);
  std::string s = print(f, names);
  return wrap ? "(" + s + ")" : s;
}

std::string print(const Formula& f, const VarNames& names) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True: return "true";
    case K::False: return "false";
    case K::Atom:
      return f.as_atom().poly.to_string(names) + " " + to_string(f.as_atom().rel) + " 0";
    case K::Not: return "!(" + print(f.body(), names) + ")";
    case K::Exists: return "E " + names.name(f.bound_var()) + ". " + print(f.body(), names);
    case K::ForAll: return "A " + names.name(f.bound_var()) + ". " + print(f.body(), names);
    case K::And:
    case K::Or: {
      std::string out;
      for (const auto& c : f.children()) {
        if (!out.empty()) out += f.kind() == K::And ? " & " : " | ";
        out += print_operand(c, names, f.kind());
      }
      return out;
    }
  }
  throw InternalError("bad formula kind");
}

}  // namespace

std::string Formula::to_string(const VarNames& names) const { return print(*this, names); }

Formula to_nnf(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True:
    case K::False:
    case K::Atom: return f;
    case K::Exists: return Formula::exists(f.bound_var(), to_nnf(f.body()));
    case K::ForAll: return Formula::forall(f.bound_var(), to_nnf(f.body()));
    case K::And:
    case K::Or: {
      std::vector<Formula> parts;
      for (const auto& c : f.children()) parts.push_back(to_nnf(c));
      return f.kind() == K::And ? Formula::conj(std::move(parts)) : Formula::disj(std::move(parts));
    }
    case K::Not: break;
  }
  const Formula& g = f.body();
  switch (g.kind()) {
    case K::True: return Formula::truth(false);
    case K::False: return Formula::truth(true);
    case K::Atom: return Formula::atom(g.as_atom().poly, negate(g.as_atom().rel));
    case K::Not: return to_nnf(g.body());
    case K::Exists: return Formula::forall(g.bound_var(), to_nnf(Formula::negation(g.body())));
    case K::ForAll: return Formula::exists(g.bound_var(), to_nnf(Formula::negation(g.body())));
    case K::And:
    case K::Or: {
      std::vector<Formula> parts;
      for (const auto& c : g.children()) parts.push_back(to_nnf(Formula::negation(c)));
      return g.kind() == K::And ? Formula::disj(std::move(parts)) : Formula::conj(std::move(parts));
    }
  }
  throw InternalError("bad formula kind");
}

namespace {

struct Prenex {
  std::vector<std::pair<bool, int>> prefix;  // (is_exists, var), outermost first
  Formula matrix;
};

int fresh_var(std::set<int>& used) {
  int v = 0;
  while (used.count(v)) ++v;
  if (v >= kMaxVars) throw CapExceeded("no fresh variable index available");
  used.insert(v);
  return v;
}

void rename_bound(Prenex& p, std::size_t pos, int to) {
  int from = p.prefix[pos].second;
  std::vector<int> map(kMaxVars);
  for (int i = 0; i < kMaxVars; ++i) map[i] = i;
  map[from] = to;
  p.prefix[pos].second = to;
  p.matrix = p.matrix.rename(map);
}

Prenex pull(const Formula& f, std::set<int>& used) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Exists:
    case K::ForAll: {
      Prenex inner = pull(f.body(), used);
      int v = f.bound_var();
      for (std::size_t i = 0; i < inner.prefix.size(); ++i)
        if (inner.prefix[i].second == v) rename_bound(inner, i, fresh_var(used));
      inner.prefix.insert(inner.prefix.begin(), {f.kind() == K::Exists, v});
      return inner;
    }
    case K::And:
    case K::Or: {
      std::set<int> taken = f.free_variables();
      Prenex out;
      std::vector<Formula> parts;
      for (const auto& c : f.children()) {
        Prenex p = pull(c, used);
        for (std::size_t i = 0; i < p.prefix.size(); ++i) {
          if (taken.count(p.prefix[i].second)) rename_bound(p, i, fresh_var(used));
          taken.insert(p.prefix[i].second);
          out.prefix.push_back(p.prefix[i]);
        }
        parts.push_back(p.matrix);
      }
      out.matrix = f.kind() == K::And ? Formula::conj(std::move(parts)) : Formula::disj(std::move(parts));
      return out;
    }
    default: return Prenex{{}, f};
  }
}

}  // namespace

Formula to_prenex(const Formula& f) {
  Formula g = to_nnf(f);
  std::set<int> used = g.all_variables();
  Prenex p = pull(g, used);
  Formula out = p.matrix;
  for (auto it = p.prefix.rbegin(); it != p.prefix.rend(); ++it)
    out = it->first ? Formula::exists(it->second, out) : Formula::forall(it->second, out);
  return out;
}

bool eval_qf(const Formula& f, std::span<const Rational> point) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True: return true;
    case K::False: return false;
    case K::Atom: return holds(f.as_atom().rel, sgn(f.as_atom().poly.evaluate(point)));
    case K::Not: return !eval_qf(f.body(), point);
    case K::And:
      for (const auto& c : f.children())
        if (!eval_qf(c, point)) return false;
      return true;
    case K::Or:
      for (const auto& c : f.children())
        if (eval_qf(c, point)) return true;
      return false;
    case K::Exists:
    case K::ForAll: throw DomainError("eval_qf: formula has quantifiers");
  }
  throw InternalError("bad formula kind");
}

namespace {

// Allowed sign set as a bit mask: bit0 = negative, bit1 = zero, bit2 = positive.
unsigned rel_mask(Rel r) {
  switch (r) {
    case Rel::Eq: return 2;
    case Rel::Ne: return 5;
    case Rel::Gt: return 4;
    case Rel::Ge: return 6;
    case Rel::Lt: return 1;
    case Rel::Le: return 3;
  }
  throw InternalError("bad relation");
}

Rel mask_rel(unsigned m) {
  switch (m) {
    case 2: return Rel::Eq;
    case 5: return Rel::Ne;
    case 4: return Rel::Gt;
    case 6: return Rel::Ge;
    case 1: return Rel::Lt;
    case 3: return Rel::Le;
  }
  throw InternalError("mask has no relation");
}

// Returns false when the conjunction is unsatisfiable on its face.
bool simplify_conjunction(SignCondition& c) {
  std::map<Polynomial, unsigned> masks;
  for (const auto& a : c) {
    auto [it, inserted] = masks.emplace(a.poly, 7u);
    it->second &= rel_mask(a.rel);
  }
  SignCondition out;
  for (const auto& [p, m] : masks) {
    if (m == 0) return false;
    if (m == 7) continue;
    out.push_back({p, mask_rel(m)});
  }
  c = std::move(out);
  return true;
}

using Dnf = std::vector<SignCondition>;

void dedupe(Dnf& d) {
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  for (const auto& c : d)
    if (c.empty()) {
      d = {SignCondition{}};
      return;
    }
}

Dnf dnf(const Formula& f, std::size_t cap) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True: return {SignCondition{}};
    case K::False: return {};
    case K::Atom: {
      const Atom& a = f.as_atom();
      if (a.poly.is_constant()) {
        if (holds(a.rel, sgn(a.poly.constant_value()))) return {SignCondition{}};
        return {};
      }
      auto [c, q] = integer_primitive(a.poly);
      return {SignCondition{Atom{q, c < 0 ? flip(a.rel) : a.rel}}};
    }
    case K::Or: {
      Dnf out;
      for (const auto& ch : f.children()) {
        Dnf d = dnf(ch, cap);
        out.insert(out.end(), d.begin(), d.end());
        dedupe(out);
        if (out.size() > cap) throw CapExceeded("DNF exceeds " + std::to_string(cap) + " disjuncts");
      }
      return out;
    }
    case K::And: {
      Dnf out{SignCondition{}};
      for (const auto& ch : f.children()) {
        Dnf d = dnf(ch, cap);
        if (out.size() * d.size() > cap * 4) throw CapExceeded("DNF exceeds " + std::to_string(cap) + " disjuncts");
        Dnf next;
        for (const auto& x : out)
          for (const auto& y : d) {
            SignCondition c = x;
            c.insert(c.end(), y.begin(), y.end());
            if (simplify_conjunction(c)) next.push_back(std::move(c));
          }
        dedupe(next);
        if (next.size() > cap) throw CapExceeded("DNF exceeds " + std::to_string(cap) + " disjuncts");
        out = std::move(next);
        if (out.empty()) break;
      }
      return out;
    }
    case K::Not: return dnf(to_nnf(f), cap);
    case K::Exists:
    case K::ForAll: throw DomainError("to_dnf: formula has quantifiers");
  }
  throw InternalError("bad formula kind");
}

}  // namespace

SemiAlgebraicSet to_dnf(const Formula& f, int n, std::size_t max_disjuncts) {
  return SemiAlgebraicSet{n, dnf(f, max_disjuncts)};
}

bool SemiAlgebraicSet::contains(std::span<const Rational> point) const {
  for (const auto& c : disjuncts) {
    bool all = true;
    for (const auto& a : c)
      if (!holds(a.rel, sgn(a.poly.evaluate(point)))) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

Formula SemiAlgebraicSet::to_formula() const {
  std::vector<Formula> ors;
  for (const auto& c : disjuncts) {
    std::vector<Formula> ands;
    for (const auto& a : c) ands.push_back(Formula::atom(a));
    ors.push_back(Formula::conj(std::move(ands)));
  }
  return Formula::disj(std::move(ors));
}

std::string SemiAlgebraicSet::to_string(const VarNames& names) const { return to_formula().to_string(names); }

}  // namespace tn
