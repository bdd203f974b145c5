#include "tn/errors.hpp"
#include "tn/formula.hpp"
#include "tn/text.hpp"

#include <algorithm>
#include <optional>

namespace tn {

namespace {

class FormulaParser {
 public:
  FormulaParser(std::string_view text, VarNames& names) : cur_(text), names_(names) {}

  Formula parse() {
    Formula f = formula();
    if (!cur_.at_end()) cur_.fail("unexpected trailing input");
    return f;
  }

 private:
  int resolve(const std::string& name) {
    int v = names_.find(name);
    if (v >= 0) return v;
    v = default_resolver(names_)(name);
    if (v >= kMaxVars) throw CapExceeded("more than " + std::to_string(kMaxVars) + " variables");
    return v;
  }

  std::optional<std::pair<bool, int>> quantifier() {
    std::size_t start = cur_.position();
    if (!cur_.at_identifier()) return std::nullopt;
    std::string q = cur_.identifier();
    if ((q == "E" || q == "A") && cur_.at_identifier()) {
      std::string var = cur_.identifier();
      if (cur_.accept(".")) return std::make_pair(q == "E", resolve(var));
    }
    cur_.reset(start);
    return std::nullopt;
  }

  Formula formula() {
    Formula lhs = disjunction();
    if (cur_.accept("->")) return Formula::implies(lhs, formula());
    return lhs;
  }

  Formula disjunction() {
    std::vector<Formula> parts{conjunction()};
    while (cur_.accept("|")) parts.push_back(conjunction());
    return Formula::disj(std::move(parts));
  }

  Formula conjunction() {
    std::vector<Formula> parts{unit()};
    while (cur_.accept("&")) parts.push_back(unit());
    return Formula::conj(std::move(parts));
  }

  Formula unit() {
    if (cur_.lookahead("!") && !cur_.lookahead("!=")) {
      cur_.accept("!");
      return Formula::negation(unit());
    }
    if (auto q = quantifier()) {
      Formula body = formula();
      return q->first ? Formula::exists(q->second, body) : Formula::forall(q->second, body);
    }
    if (cur_.peek() == '(') {
      std::size_t start = cur_.position();
      try {
        return atom();
      } catch (const ParseError&) {
        cur_.reset(start);
        cur_.expect("(");
        Formula f = formula();
        cur_.expect(")");
        return f;
      }
    }
    if (cur_.at_identifier()) {
      std::size_t start = cur_.position();
      std::string word = cur_.identifier();
      if (word == "true") return Formula::truth(true);
      if (word == "false") return Formula::truth(false);
      cur_.reset(start);
    }
    return atom();
  }

  Formula atom() {
    auto resolver = [this](const std::string& n) { return resolve(n); };
    Polynomial lhs = read_polynomial(cur_, resolver);
    Rel rel;
    if (cur_.accept("<=")) rel = Rel::Le;
    else if (cur_.accept(">=")) rel = Rel::Ge;
    else if (cur_.accept("!=")) rel = Rel::Ne;
    else if (cur_.accept("=")) rel = Rel::Eq;
    else if (cur_.accept("<")) rel = Rel::Lt;
    else if (cur_.accept(">")) rel = Rel::Gt;
    else cur_.fail("expected relation");
    Polynomial rhs = read_polynomial(cur_, resolver);
    if (rhs.is_zero()) return Formula::atom(lhs, rel);
    if (rel == Rel::Lt) return Formula::atom(rhs - lhs, Rel::Gt);
    if (rel == Rel::Le) return Formula::atom(rhs - lhs, Rel::Ge);
    return Formula::atom(lhs - rhs, rel);
  }

  TextCursor cur_;
  VarNames& names_;
};

}  // namespace

Formula parse_formula(std::string_view text, VarNames& names) {
  // First pass: explicit xK names keep index K-1; others get provisional slots.
  VarNames provisional = names;
  reserve_indexed_names(text, provisional);
  Formula f = FormulaParser(text, provisional).parse();

  // Second pass: renumber the named (non-xK, not pre-declared) variables so
  // that free ones come first.
  std::vector<int> named;
  for (int v = 0; v < static_cast<int>(provisional.size()); ++v)
    if (provisional.has(v) && !names.has(v) && provisional.name(v) != "x" + std::to_string(v + 1))
      named.push_back(v);
  std::set<int> free = f.free_variables();
  std::vector<int> order;
  for (int v : named)
    if (free.count(v)) order.push_back(v);
  for (int v : named)
    if (!free.count(v)) order.push_back(v);

  std::vector<int> map(kMaxVars);
  for (int i = 0; i < kMaxVars; ++i) map[i] = i;
  std::set<int> taken;
  for (int v = 0; v < static_cast<int>(provisional.size()); ++v)
    if (provisional.has(v) && std::find(named.begin(), named.end(), v) == named.end()) taken.insert(v);
  VarNames result = names;
  for (int v : taken) result.set(v, provisional.name(v));
  int next = 0;
  for (int v : order) {
    while (taken.count(next)) ++next;
    map[v] = next;
    taken.insert(next);
    result.set(next, provisional.name(v));
  }
  names = result;
  return f.rename(map);
}

Formula parse_formula(std::string_view text) {
  VarNames names;
  return parse_formula(text, names);
}

}  // namespace tn
