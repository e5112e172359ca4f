// Exact integer and rational arithmetic used by every other module.
//
// All integers are fixed-width 64-bit values with checked arithmetic: an
// operation that would overflow throws error(errc::overflow) instead of
// wrapping.  Rationals are always stored in lowest terms with a positive
// denominator, so equality is structural and ordering is exact.

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace hnstrata {

using i64 = std::int64_t;

enum class errc {
  overflow,
  invalid_modulus,
  invalid_rational,
  invalid_rank,
  slope_order,
  convexity,
  incomparable_context,
  unsupported_genus,
  index_out_of_range,
  ambiguous_bundle,
  work_limit,
  parse_error,
  internal,
};

/// Library-wide exception type.  code() identifies the violated contract.
class error : public std::runtime_error {
public:
  error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) fail(errc::overflow, "integer overflow in addition");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) fail(errc::overflow, "integer overflow in subtraction");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) fail(errc::overflow, "integer overflow in multiplication");
  return r;
}

inline i64 checked_neg(i64 a) { return checked_sub(0, a); }

/// Floor division with b > 0 (rounds toward negative infinity).
inline i64 floor_div(i64 a, i64 b) {
  if (b <= 0) fail(errc::invalid_modulus, "floor_div requires a positive divisor");
  i64 q = a / b;
  if (a % b != 0 && (a < 0)) --q;
  return q;
}

/// gcd on non-negative magnitudes; gcd(n, 0) = n.
inline i64 gcd_i64(i64 a, i64 b) {
  auto mag = [](i64 v) -> std::uint64_t {
    return v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
  };
  std::uint64_t x = mag(a), y = mag(b);
  while (y != 0) {
    std::uint64_t t = x % y;
    x = y;
    y = t;
  }
  if (x > static_cast<std::uint64_t>(INT64_MAX)) fail(errc::overflow, "gcd overflow");
  return static_cast<i64>(x);
}

/// [r]_n: the unique integer v with 1 <= v <= n and v == r (mod n).
/// In particular residue(0, n) = n.
inline i64 residue(i64 r, i64 n) {
  if (n <= 0) fail(errc::invalid_modulus, "residue requires a positive modulus");
  i64 v = r % n;
  if (v <= 0) v += n;
  return v;
}

/// Exact rational number, normalized on construction.
class Rational {
public:
  constexpr Rational() = default;
  Rational(i64 value) : num_(value) {}  // NOLINT: implicit by design
  Rational(i64 num, i64 den) : num_(num), den_(den) { normalize(); }

  i64 num() const noexcept { return num_; }
  i64 den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_i128(w(a.num_) * b.den_ + w(b.num_) * a.den_, w(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_i128(w(a.num_) * b.den_ - w(b.num_) * a.den_, w(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_i128(w(a.num_) * b.num_, w(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) fail(errc::invalid_rational, "division by zero rational");
    return from_i128(w(a.num_) * b.den_, w(a.den_) * b.num_);
  }
  Rational operator-() const { return Rational(checked_neg(num_), den_); }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) noexcept {
    return w(a.num_) * b.den_ < w(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) noexcept { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) noexcept { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) noexcept { return !(a < b); }
  friend bool operator!=(const Rational& a, const Rational& b) noexcept { return !(a == b); }

  /// Lowest-terms rendering: "p/q", or just "p" when the value is an integer.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  i64 floor() const { return floor_div(num_, den_); }

private:
  using i128 = __int128;
  static i128 w(i64 v) { return static_cast<i128>(v); }

  static Rational from_i128(i128 num, i128 den) {
    if (den == 0) fail(errc::invalid_rational, "zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i128 a = num < 0 ? -num : num;
    i128 b = den;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    if (a != 0) {
      num /= a;
      den /= a;
    }
    if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX)
      fail(errc::overflow, "rational overflow");
    Rational r;
    r.num_ = static_cast<i64>(num);
    r.den_ = static_cast<i64>(den);
    return r;
  }

  void normalize() {
    Rational r = from_i128(w(num_), w(den_));
    num_ = r.num_;
    den_ = r.den_;
  }

  i64 num_ = 0;
  i64 den_ = 1;
};

/// Smallest integer strictly greater than a; for integer a this is a + 1.
inline i64 ceil_strict(const Rational& a) { return checked_add(a.floor(), 1); }

}  // namespace hnstrata

template <>
struct std::hash<hnstrata::Rational> {
  std::size_t operator()(const hnstrata::Rational& r) const noexcept {
    std::size_t h = std::hash<hnstrata::i64>{}(r.num());
    return h ^ (std::hash<hnstrata::i64>{}(r.den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};
