#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "arborslope/error.hpp"

namespace arborslope {

namespace detail {

__extension__ using wide = __int128;

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer multiplication");
  return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer subtraction");
  return r;
}

}  // namespace detail

/// Exact reduced rational num/den with den >= 1. Zero is 0/1.
///
/// All arithmetic is overflow-checked on 64-bit integers; an overflow raises
/// Error(Overflow) rather than wrapping.
class Fraction {
 public:
  constexpr Fraction() = default;
  constexpr Fraction(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit from integers is intended

  Fraction(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (d == 0) throw Error(ErrorCode::ZeroDenominator, "fraction with zero denominator");
    normalize();
  }

  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }

  constexpr bool is_integer() const noexcept { return den_ == 1; }
  constexpr bool is_zero() const noexcept { return num_ == 0; }
  constexpr int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  Fraction operator-() const { return Fraction(detail::checked_sub(0, num_), den_, Reduced{}); }

  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    const std::int64_t g = std::gcd(a.den_, b.den_);
    const std::int64_t ad = a.den_ / g;
    const std::int64_t bd = b.den_ / g;
    return Fraction(detail::checked_add(detail::checked_mul(a.num_, bd), detail::checked_mul(b.num_, ad)),
                    detail::checked_mul(a.den_, bd));
  }
  friend Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }

  friend Fraction operator*(const Fraction& a, const Fraction& b) {
    const std::int64_t g1 = std::gcd(a.num_, b.den_);
    const std::int64_t g2 = std::gcd(b.num_, a.den_);
    const std::int64_t n = detail::checked_mul(a.num_ / g1, b.num_ / g2);
    const std::int64_t d = detail::checked_mul(a.den_ / g2, b.den_ / g1);
    return Fraction(n, d);
  }

  friend Fraction operator/(const Fraction& a, const Fraction& b) {
    if (b.num_ == 0) throw Error(ErrorCode::ZeroDenominator, "division by zero fraction");
    return a * Fraction(b.den_, b.num_);
  }

  Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
  Fraction& operator-=(const Fraction& o) { return *this = *this - o; }
  Fraction& operator*=(const Fraction& o) { return *this = *this * o; }
  Fraction& operator/=(const Fraction& o) { return *this = *this / o; }

  friend bool operator==(const Fraction&, const Fraction&) = default;

  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    const detail::wide lhs = static_cast<detail::wide>(a.num_) * b.den_;
    const detail::wide rhs = static_cast<detail::wide>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Fraction abs() const { return sign() < 0 ? -*this : *this; }

  /// Largest integer <= this.
  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Inverse of str(); accepts "p", "-p", "p/q". Throws Error on malformed text.
  static Fraction parse(std::string_view text);

 private:
  struct Reduced {};
  constexpr Fraction(std::int64_t n, std::int64_t d, Reduced) : num_(n), den_(d) {}

  void normalize() {
    if (den_ < 0) {
      num_ = detail::checked_sub(0, num_);
      den_ = detail::checked_sub(0, den_);
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }

inline Fraction Fraction::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) -> std::int64_t {
    if (s.empty()) throw Error(ErrorCode::UnexpectedToken, "empty integer in fraction text");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-') {
      neg = true;
      i = 1;
    }
    if (i == s.size()) throw Error(ErrorCode::UnexpectedToken, "bare sign in fraction text");
    std::int64_t v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw Error(ErrorCode::UnexpectedToken, "non-digit in fraction text");
      v = detail::checked_add(detail::checked_mul(v, 10), s[i] - '0');
    }
    return neg ? -v : v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Fraction(parse_int(text));
  return Fraction(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

}  // namespace arborslope
