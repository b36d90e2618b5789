#ifndef LONELY_EXACT_ARITH_HPP
#define LONELY_EXACT_ARITH_HPP

// Checked 64-bit integer helpers and an always-reduced rational type. Every
// time value, polyhedron coefficient and landmark in the library is a
// Rational; nothing here ever wraps silently.

#include <lonely/error.hpp>

#include <charconv>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

namespace lonely {

using i64 = std::int64_t;
using i128 = __int128;

namespace checked {

inline i64 add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline i64 sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline i64 mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline i64 narrow(i128 v) {
  if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) throw OverflowError("value exceeds 64-bit range");
  return static_cast<i64>(v);
}

} // namespace checked

inline i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Floor division for a positive divisor.
inline i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

inline i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

/// Remainder of a on division by m, in [0, m).
inline i64 mod_int(i64 a, i64 m) {
  if (m < 1) throw InvalidInput("modulus must be positive");
  if (a < 0) throw InvalidInput("mod_int expects a non-negative dividend");
  return a % m;
}

class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(i64 value) : num_(value) {} // NOLINT(google-explicit-constructor)

  Rational(i64 num, i64 den) { assign(num, den); }

  /// Builds from wide intermediates, reducing first and then narrowing.
  static Rational from_wide(i128 num, i128 den) {
    Rational r;
    r.assign(num, den);
    return r;
  }

  i64 num() const { return num_; }
  i64 den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_negative() const { return num_ < 0; }
  bool is_zero() const { return num_ == 0; }

  i64 floor() const { return static_cast<i64>(floor_div(num_, den_)); }
  i64 ceil() const { return static_cast<i64>(ceil_div(num_, den_)); }

  Rational operator-() const { return from_wide(-i128(num_), den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return from_wide(i128(a.num_) + b.num_, a.den_);
    return from_wide(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return from_wide(i128(a.num_) - b.num_, a.den_);
    return from_wide(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw InvalidInput("division by zero");
    return from_wide(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational&, const Rational&) = default;

  // Cross-multiplication in 128 bits cannot overflow for 64-bit fields.
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
  }

  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  /// Accepts "p/q" or a bare integer "p".
  static Rational parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
      i64 v = 0;
      if (!s.empty() && s.front() == '+') s.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw InvalidInput("malformed rational: '" + std::string(text) + "'");
      return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    i64 den = parse_int(text.substr(slash + 1));
    if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash)), den);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

private:
  void assign(i128 num, i128 den) {
    if (den == 0) throw InvalidInput("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    num_ = checked::narrow(num);
    den_ = checked::narrow(den);
  }

  i64 num_ = 0;
  i64 den_ = 1;
};

/// Fractional part {q} = q - floor(q), defined for q >= 0 only.
inline Rational frac(const Rational& q) {
  if (q.is_negative()) throw InvalidInput("fractional part is defined for non-negative values only");
  return Rational(q.num() % q.den(), q.den());
}

inline Rational abs(const Rational& q) { return q.is_negative() ? -q : q; }

} // namespace lonely

template <>
struct std::hash<lonely::Rational> {
  std::size_t operator()(const lonely::Rational& q) const noexcept {
    std::size_t h = std::hash<lonely::i64>{}(q.num());
    return h ^ (std::hash<lonely::i64>{}(q.den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};

#endif // LONELY_EXACT_ARITH_HPP
