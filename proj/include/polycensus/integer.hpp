#pragma once

// Exact integers: a checked 128-bit value type for the fast paths and a GMP
// alias for the arbitrary-precision fallback.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "polycensus/errors.hpp"

namespace polycensus {

using int128 = __int128;

/// Signed 128-bit integer whose arithmetic throws OverflowError instead of
/// wrapping.
class Int {
 public:
  constexpr Int() noexcept = default;
  constexpr Int(long long v) noexcept : v_(v) {}  // NOLINT(implicit)
  constexpr Int(long v) noexcept : v_(v) {}       // NOLINT(implicit)
  constexpr Int(int v) noexcept : v_(v) {}        // NOLINT(implicit)

  static constexpr Int from_raw(int128 v) noexcept {
    Int r;
    r.v_ = v;
    return r;
  }
  constexpr int128 raw() const noexcept { return v_; }

  friend Int operator+(Int a, Int b) {
    int128 r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError("Int: addition overflows 128 bits");
    return from_raw(r);
  }
  friend Int operator-(Int a, Int b) {
    int128 r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowError("Int: subtraction overflows 128 bits");
    return from_raw(r);
  }
  friend Int operator*(Int a, Int b) {
    int128 r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowError("Int: multiplication overflows 128 bits");
    return from_raw(r);
  }
  /// Truncating division, as for built-in integers.
  friend Int operator/(Int a, Int b) {
    if (b.v_ == 0) throw PreconditionError("Int: division by zero");
    if (b.v_ == -1) return -a;
    return from_raw(a.v_ / b.v_);
  }
  friend Int operator%(Int a, Int b) {
    if (b.v_ == 0) throw PreconditionError("Int: division by zero");
    if (b.v_ == -1) return Int{};
    return from_raw(a.v_ % b.v_);
  }
  Int operator-() const {
    if (v_ == min_raw()) throw OverflowError("Int: negation overflows 128 bits");
    return from_raw(-v_);
  }
  Int& operator+=(Int o) { return *this = *this + o; }
  Int& operator-=(Int o) { return *this = *this - o; }
  Int& operator*=(Int o) { return *this = *this * o; }
  Int& operator/=(Int o) { return *this = *this / o; }

  friend constexpr bool operator==(Int a, Int b) noexcept { return a.v_ == b.v_; }
  friend constexpr std::strong_ordering operator<=>(Int a, Int b) noexcept {
    return a.v_ <=> b.v_;
  }

  constexpr bool is_zero() const noexcept { return v_ == 0; }
  constexpr int sign() const noexcept { return (v_ > 0) - (v_ < 0); }

  double to_double() const noexcept { return static_cast<double>(v_); }
  long double to_long_double() const noexcept { return static_cast<long double>(v_); }
  /// Checked narrowing to 64 bits.
  std::int64_t to_int64() const;
  bool fits_int64() const noexcept {
    return v_ >= INT64_MIN && v_ <= INT64_MAX;
  }

  std::string to_string() const;
  /// Parses an optionally signed decimal literal; throws PreconditionError on
  /// malformed text and OverflowError when the value needs more than 128 bits.
  static Int parse(std::string_view text);

  static constexpr int128 max_raw() noexcept {
    return static_cast<int128>((~static_cast<unsigned __int128>(0)) >> 1);
  }
  static constexpr int128 min_raw() noexcept { return -max_raw() - 1; }

 private:
  int128 v_ = 0;
};

Int abs(Int a);
Int gcd(Int a, Int b);
/// Floor and ceiling of a / b for b != 0.
Int floor_div(Int a, Int b);
Int ceil_div(Int a, Int b);
/// Checked power with nonnegative exponent.
Int pow(Int base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, Int v);

using BigInt = mpz_class;

BigInt to_big(Int v);
/// Throws OverflowError if the value does not fit in 128 bits.
Int from_big(const BigInt& v);

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}
inline BigInt abs(const BigInt& a) { return ::abs(a); }
inline bool is_zero(const BigInt& a) { return sgn(a) == 0; }
inline bool is_zero(Int a) { return a.is_zero(); }
inline int sign_of(const BigInt& a) { return sgn(a); }
inline int sign_of(Int a) { return a.sign(); }
inline double to_double(const BigInt& a) { return a.get_d(); }
inline double to_double(Int a) { return a.to_double(); }
inline std::string to_string(Int a) { return a.to_string(); }
inline std::string to_string(const BigInt& a) { return a.get_str(); }

}  // namespace polycensus
