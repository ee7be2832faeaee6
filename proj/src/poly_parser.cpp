#include "normbasis/poly_parser.hpp"

#include <cctype>

namespace normbasis {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  UniPoly parse() {
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    UniPoly p = expr();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    skip();
    return true;
  }

  bool starts_factor() const {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'x' || c == 'X' || c == '(';
  }

  UniPoly expr() {
    UniPoly p = term();
    for (;;) {
      if (accept('+'))
        p += term();
      else if (accept('-'))
        p -= term();
      else
        return p;
    }
  }

  UniPoly term() {
    UniPoly p = unary();
    for (;;) {
      if (accept('*')) {
        p = p * unary();
      } else if (accept('/')) {
        const UniPoly d = unary();
        if (d.degree() != 0) fail("division by a non-constant");
        p *= Rational(1) / d.leading();
      } else if (starts_factor()) {
        p = p * power();
      } else {
        return p;
      }
    }
  }

  UniPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  UniPoly power() {
    UniPoly base = primary();
    if (!accept('^')) return base;
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer exponent");
    const std::string digits(s_.substr(start, pos_ - start));
    if (digits.size() > 4) fail("exponent too large");
    skip();
    return poly_pow(base, static_cast<unsigned>(std::stoul(digits)));
  }

  UniPoly primary() {
    if (accept('(')) {
      UniPoly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (peek() == 'x' || peek() == 'X') {
      ++pos_;
      skip();
      return UniPoly::x();
    }
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::string text(s_.substr(start, pos_ - start));
    if (peek() == '.') {
      ++pos_;
      const std::size_t frac = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      const std::string f(s_.substr(frac, pos_ - frac));
      if (text.empty() && f.empty()) fail("expected a number");
      Integer den = 1;
      for (std::size_t i = 0; i < f.size(); ++i) den *= 10;
      skip();
      return UniPoly::constant(make_rational(Integer((text.empty() ? "0" : text) + f), den));
    }
    if (text.empty()) fail("expected a number, x or '('");
    skip();
    return UniPoly::constant(Rational(Integer(text)));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

UniPoly parse_polynomial(std::string_view text) { return Parser(text).parse(); }

}  // namespace normbasis
