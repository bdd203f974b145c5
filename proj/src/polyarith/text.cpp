#include "tn/text.hpp"

#include <cctype>

namespace tn {

void TextCursor::advance() {
  if (text_[pos_] == '\n') {
    ++line_;
    col_ = 1;
  } else {
    ++col_;
  }
  ++pos_;
}

void TextCursor::skip_space() {
  while (pos_ < text_.size()) {
    char c = text_[pos_];
    if (c == '#') {
      while (pos_ < text_.size() && text_[pos_] != '\n') advance();
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
    } else {
      break;
    }
  }
}

bool TextCursor::at_end() {
  skip_space();
  return pos_ >= text_.size();
}

char TextCursor::peek() {
  skip_space();
  return pos_ < text_.size() ? text_[pos_] : '\0';
}

bool TextCursor::lookahead(std::string_view token) {
  skip_space();
  return text_.substr(pos_, token.size()) == token;
}

bool TextCursor::accept(std::string_view token) {
  if (!lookahead(token)) return false;
  for (std::size_t i = 0; i < token.size(); ++i) advance();
  return true;
}

void TextCursor::expect(std::string_view token) {
  if (!accept(token)) fail("expected '" + std::string(token) + "'");
}

bool TextCursor::at_identifier() {
  char c = peek();
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

std::string TextCursor::identifier() {
  if (!at_identifier()) fail("expected identifier");
  std::string out;
  while (pos_ < text_.size() &&
         (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
    out += text_[pos_];
    advance();
  }
  return out;
}

Rational TextCursor::number() {
  skip_space();
  auto digits = [&] {
    std::string d;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      d += text_[pos_];
      advance();
    }
    return d;
  };
  std::string num = digits();
  if (num.empty()) fail("expected number");
  if (pos_ < text_.size() && text_[pos_] == '/') {
    advance();
    std::string den = digits();
    if (den.empty()) fail("expected denominator");
    if (Integer(den) == 0) fail("zero denominator");
    return make_rational(Integer(num), Integer(den));
  }
  return Rational(Integer(num));
}

void TextCursor::reset(std::size_t pos) {
  // Recompute line/column from the start; resets are rare (parser backtracking).
  pos_ = 0;
  line_ = 1;
  col_ = 1;
  while (pos_ < pos) advance();
}

void TextCursor::fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

namespace {

Polynomial read_expr(TextCursor& cur, const VarResolver& resolve);

Polynomial read_base(TextCursor& cur, const VarResolver& resolve) {
  char c = cur.peek();
  if (c == '(') {
    cur.expect("(");
    Polynomial p = read_expr(cur, resolve);
    cur.expect(")");
    return p;
  }
  if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial(cur.number());
  if (cur.at_identifier()) {
    std::string name = cur.identifier();
    int v = resolve(name);
    if (v < 0 || v >= kMaxVars) cur.fail("too many variables (limit " + std::to_string(kMaxVars) + ")");
    return Polynomial::variable(v);
  }
  cur.fail("expected polynomial");
}

Polynomial read_factor(TextCursor& cur, const VarResolver& resolve) {
  if (cur.accept("-")) return -read_factor(cur, resolve);
  if (cur.accept("+")) return read_factor(cur, resolve);
  Polynomial base = read_base(cur, resolve);
  if (cur.accept("^")) {
    Rational e = cur.number();
    if (e.get_den() != 1 || e > 64) cur.fail("exponent must be a positive integer <= 64");
    base = base.pow(static_cast<unsigned>(e.get_num().get_ui()));
  }
  return base;
}

Polynomial read_term(TextCursor& cur, const VarResolver& resolve) {
  Polynomial p = read_factor(cur, resolve);
  while (cur.accept("*")) p *= read_factor(cur, resolve);
  return p;
}

Polynomial read_expr(TextCursor& cur, const VarResolver& resolve) {
  Polynomial p = read_term(cur, resolve);
  while (true) {
    // "->" is an implication, never a subtraction.
    if (cur.lookahead("->")) break;
    if (cur.accept("+")) {
      p += read_term(cur, resolve);
    } else if (cur.accept("-")) {
      p -= read_term(cur, resolve);
    } else {
      break;
    }
  }
  return p;
}

}  // namespace

Polynomial read_polynomial(TextCursor& cur, const VarResolver& resolve) { return read_expr(cur, resolve); }

namespace {

int indexed_name(const std::string& name) {
  if (name.size() < 2 || name.size() > 4 || name[0] != 'x' || name[1] == '0') return -1;
  if (name.find_first_not_of("0123456789", 1) != std::string::npos) return -1;
  return std::stoi(name.substr(1)) - 1;
}

}  // namespace

void reserve_indexed_names(std::string_view text, VarNames& names) {
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      std::string name(text.substr(i, j - i));
      int v = indexed_name(name);
      if (v >= 0 && v < kMaxVars && !names.has(v)) names.set(v, name);
      i = j;
    } else {
      ++i;
    }
  }
}

VarResolver default_resolver(VarNames& names) {
  return [&names](const std::string& name) {
    int found = names.find(name);
    if (found >= 0) return found;
    int v = indexed_name(name);
    if (v >= 0) {
      if (v < kMaxVars && names.has(v))
        throw DomainError("variable '" + name + "' clashes with '" + names.name(v) + "'");
      if (v < kMaxVars) names.set(v, name);
      return v;
    }
    v = 0;
    while (names.has(v)) ++v;
    if (v < kMaxVars) names.set(v, name);
    return v;
  };
}

Polynomial parse_polynomial(std::string_view text, VarNames& names) {
  reserve_indexed_names(text, names);
  TextCursor cur(text);
  Polynomial p = read_polynomial(cur, default_resolver(names));
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  return p;
}

}  // namespace tn
