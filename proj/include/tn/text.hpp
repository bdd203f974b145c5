#pragma once

#include "tn/errors.hpp"
#include "tn/polynomial.hpp"

#include <functional>
#include <string>
#include <string_view>

namespace tn {

class ParseError : public DomainError {
 public:
  ParseError(const std::string& msg, int line, int column)
      : DomainError("syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": " +
                    msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Character cursor with line/column tracking. Whitespace and `#` comments
/// are skipped by skip_space().
class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  void skip_space();
  bool at_end();
  char peek();                          // after skipping space; '\0' at end
  bool accept(std::string_view token);  // consumes token if present
  void expect(std::string_view token);
  bool lookahead(std::string_view token);
  std::string identifier();             // [A-Za-z_][A-Za-z0-9_]*
  bool at_identifier();
  Rational number();                    // digits, optionally /digits

  std::size_t position() const { return pos_; }
  void reset(std::size_t pos);
  [[noreturn]] void fail(const std::string& msg) const;

 private:
  void advance();
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

using VarResolver = std::function<int(const std::string&)>;

/// Reads `expr := term (("+"|"-") term)*`, `term := factor ("*" factor)*`,
/// `factor := ("-"|"+") factor | base ("^" int)?`, `base := number | name | "(" expr ")"`.
Polynomial read_polynomial(TextCursor& cur, const VarResolver& resolve);

/// Pre-assigns every `xK` identifier in text to index K-1 so that named
/// variables never take a slot an explicit `xK` needs later.
void reserve_indexed_names(std::string_view text, VarNames& names);

/// Resolver for the `x1..xN` convention: `xK` maps to index K-1; any other
/// name is allocated the next unused index and recorded in `names`.
VarResolver default_resolver(VarNames& names);

}  // namespace tn
