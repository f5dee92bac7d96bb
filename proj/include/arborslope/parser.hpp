#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "arborslope/error.hpp"
#include "arborslope/fraction.hpp"
#include "arborslope/tangle.hpp"

namespace arborslope {

namespace detail {

// expr := sum ('o' sum)*      (tangle product, lowest precedence)
// sum  := term ('+' term)*
// term := '(' expr ')' | fraction
// fraction := ['-'] int ['/' int]
class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  TangleExpr parse() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError(ErrorCode::EmptyInput, 0, "empty tangle expression");
    TangleExpr e = parse_product();
    skip_ws();
    if (pos_ != text_.size()) {
      if (text_[pos_] == ')') throw ParseError(ErrorCode::UnbalancedParens, pos_, "unmatched ')'");
      throw ParseError(ErrorCode::UnexpectedToken, pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    return e;
  }

 private:
  TangleExpr parse_product() {
    TangleExpr e = parse_sum();
    while (peek() == 'o') {
      ++pos_;
      e = TangleExpr::product(e, parse_sum());
    }
    return e;
  }

  TangleExpr parse_sum() {
    TangleExpr e = parse_term();
    while (peek() == '+') {
      ++pos_;
      e = TangleExpr::sum(e, parse_term());
    }
    return e;
  }

  TangleExpr parse_term() {
    const char c = peek();
    if (c == '(') {
      const std::size_t open = pos_++;
      TangleExpr e = parse_product();
      if (peek() != ')') {
        if (pos_ == text_.size()) throw ParseError(ErrorCode::UnbalancedParens, open, "unclosed '('");
        throw ParseError(ErrorCode::UnexpectedToken, pos_, "expected ')'");
      }
      ++pos_;
      return e;
    }
    return parse_fraction();
  }

  TangleExpr parse_fraction() {
    const std::size_t start = pos_;
    if (pos_ == text_.size()) throw ParseError(ErrorCode::UnexpectedToken, pos_, "expected a fraction, found end of input");
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    const std::int64_t p = parse_int();
    std::int64_t q = 1;
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t den_pos = pos_;
      q = parse_int();
      if (q == 0) throw ParseError(ErrorCode::ZeroDenominator, den_pos, "zero denominator");
    }
    const Fraction f(negative ? -p : p, q);
    if (f.is_zero()) throw ParseError(ErrorCode::InvalidLeaf, start, "rational tangle slope must be nonzero");
    return TangleExpr::leaf(f);
  }

  std::int64_t parse_int() {
    skip_ws();
    const std::size_t begin = pos_;
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::int64_t next;
      if (__builtin_mul_overflow(v, 10, &next) || __builtin_add_overflow(next, text_[pos_] - '0', &next))
        throw ParseError(ErrorCode::Overflow, begin, "integer too large");
      v = next;
      ++pos_;
    }
    if (pos_ == begin) {
      if (pos_ == text_.size()) throw ParseError(ErrorCode::UnexpectedToken, pos_, "expected an integer, found end of input");
      if (text_[pos_] == ')') throw ParseError(ErrorCode::UnbalancedParens, pos_, "unexpected ')'");
      throw ParseError(ErrorCode::UnexpectedToken, pos_, "expected an integer, found '" + std::string(1, text_[pos_]) + "'");
    }
    return v;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse a tangle expression such as "(-1/2 + 1/3) o (-1/2 + 1/3)".
inline TangleExpr parse(std::string_view text) { return detail::ExprParser(text).parse(); }

}  // namespace arborslope
