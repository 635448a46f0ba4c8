// Recursive-descent parser for the expression grammar shared by every input:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' positive-integer)?
//   primary := integer ('/' integer)? | identifier | '(' expr ')'
//
// Implicit multiplication is rejected. U+2212 is accepted as a minus sign.

#include "germforge/errors.hpp"
#include "germforge/poly.hpp"

#include <algorithm>
#include <cctype>

namespace germforge {

namespace {

class Parser {
public:
  Parser(std::string_view text, ContextPtr ctx) : text_(text), ctx_(std::move(ctx)) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == text_.size()) {
      throw syntax_error("empty expression", pos_);
    }
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) {
      throw syntax_error(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return p;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  // Returns '+', '-', '*', '^', '/', '(', ')', 0 at end, or the raw character.
  char peek() {
    skip_ws();
    if (pos_ >= text_.size()) {
      return 0;
    }
    if (text_.compare(pos_, 3, "\xE2\x88\x92") == 0) {
      return '-';
    }
    return text_[pos_];
  }

  void advance() {
    if (text_.compare(pos_, 3, "\xE2\x88\x92") == 0) {
      pos_ += 3;
    } else {
      ++pos_;
    }
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        advance();
        acc += term();
      } else if (c == '-') {
        advance();
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (peek() == '*') {
      advance();
      acc = acc * unary();
    }
    const char c = peek();
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(') {
      throw syntax_error("implicit multiplication is not allowed", pos_);
    }
    return acc;
  }

  Polynomial unary() {
    const char c = peek();
    if (c == '-') {
      advance();
      return -unary();
    }
    if (c == '+') {
      advance();
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (peek() == '^') {
      advance();
      skip_ws();
      const auto start = pos_;
      const auto digits = read_digits();
      if (digits.empty()) {
        throw syntax_error("exponent must be a positive integer", start);
      }
      if (digits.size() > 4) {
        throw syntax_error("exponent too large", start);
      }
      const unsigned e = static_cast<unsigned>(std::stoul(digits));
      if (e == 0) {
        throw syntax_error("exponent must be a positive integer", start);
      }
      if (peek() == '^') {
        throw syntax_error("chained exponents need parentheses", pos_);
      }
      return base.pow(e);
    }
    return base;
  }

  std::string read_digits() {
    const auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial primary() {
    const char c = peek();
    const auto start = pos_;
    if (c == '(') {
      advance();
      Polynomial inner = expr();
      if (peek() != ')') {
        throw syntax_error("expected ')'", pos_);
      }
      advance();
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      if (peek() == '/') {
        advance();
        skip_ws();
        const auto den_pos = pos_;
        std::string den = read_digits();
        if (den.empty()) {
          throw syntax_error("expected denominator", den_pos);
        }
        if (den.find_first_not_of('0') == std::string::npos) {
          throw syntax_error("zero denominator", den_pos);
        }
        num += "/" + den;
      }
      return Polynomial::constant(ctx_, parse_rat(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      if (!ctx_->index_of(name)) {
        throw unknown_variable(name);
      }
      return Polynomial::variable(ctx_, name);
    }
    if (c == 0) {
      throw syntax_error("unexpected end of expression", pos_);
    }
    throw syntax_error(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  ContextPtr ctx_;
  std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_poly(std::string_view text, ContextPtr ctx) { return Parser(text, std::move(ctx)).parse(); }

std::vector<std::string> variables_in(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const auto start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        ++i;
      }
      std::string name(text.substr(start, i - start));
      if (std::find(out.begin(), out.end(), name) == out.end()) {
        out.push_back(std::move(name));
      }
      continue;
    }
    ++i;
  }
  return out;
}

} // namespace germforge
