#pragma once

#include "mpoly.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace infl {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace detail {

/// Recursive-descent reader for polynomial expressions over Q.
/// Accepts + - * / ^ (or **), parentheses or braces, juxtaposition as
/// multiplication, integer literals and the global variable names.
class PolyReader {
 public:
  explicit PolyReader(std::string_view s) : s_(s) {}

  Poly read() {
    Poly p = expr();
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  Poly expr() {
    skip();
    Poly acc;
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = s_[i_++] == '-';
    acc = term();
    if (neg) acc = -acc;
    for (;;) {
      skip();
      char c = peek();
      if (c != '+' && c != '-') return acc;
      ++i_;
      Poly t = term();
      acc = c == '+' ? acc + t : acc - t;
    }
  }

  Poly term() {
    Poly acc = power();
    for (;;) {
      skip();
      char c = peek();
      if (c == '*' && !(i_ + 1 < s_.size() && s_[i_ + 1] == '*')) {
        ++i_;
        acc = acc * power();
      } else if (c == '/') {
        ++i_;
        Poly d = power();
        if (!d.is_constant() || d.is_zero_poly()) fail("division only by nonzero constants");
        acc = acc.scaled(d.constant_term().inverse());
      } else if (c == '(' || c == '{' || std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
                 static_cast<unsigned char>(c) >= 0x80) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  Poly power() {
    Poly base = primary();
    skip();
    bool caret = peek() == '^';
    bool stars = peek() == '*' && i_ + 1 < s_.size() && s_[i_ + 1] == '*';
    if (!caret && !stars) return base;
    i_ += caret ? 1 : 2;
    skip();
    bool braced = peek() == '{' || peek() == '(';
    if (braced) ++i_;
    skip();
    std::size_t start = i_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
    if (start == i_) fail("exponent expected");
    unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, i_ - start))));
    if (braced) {
      skip();
      if (peek() != '}' && peek() != ')') fail("closing bracket expected after exponent");
      ++i_;
    }
    return pow(base, e);
  }

  Poly primary() {
    skip();
    char c = peek();
    if (c == '(' || c == '{') {
      char close = c == '(' ? ')' : '}';
      ++i_;
      Poly p = expr();
      skip();
      if (peek() != close) fail("unbalanced bracket");
      ++i_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
      return Poly(Rational(mpz_class(std::string(s_.substr(start, i_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || static_cast<unsigned char>(c) >= 0x80) {
      std::size_t start = i_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' ||
             static_cast<unsigned char>(peek()) >= 0x80)
        ++i_;
      std::string_view name = s_.substr(start, i_ - start);
      auto v = var_by_name(name);
      if (!v) fail("unknown variable '" + std::string(name) + "'");
      return Poly::variable(*v);
    }
    fail(c ? std::string("unexpected '") + c + "'" : "unexpected end of input");
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse error at offset " + std::to_string(i_) + ": " + what);
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline Poly parse_poly(std::string_view text) { return detail::PolyReader(text).read(); }

namespace literals {
inline Poly operator""_p(const char* s, std::size_t n) { return parse_poly(std::string_view(s, n)); }
}  // namespace literals

}  // namespace infl
