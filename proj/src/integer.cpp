#include "polycensus/integer.hpp"

#include <algorithm>
#include <ostream>

namespace polycensus {

std::int64_t Int::to_int64() const {
  if (!fits_int64()) throw OverflowError("Int: value does not fit in 64 bits");
  return static_cast<std::int64_t>(v_);
}

std::string Int::to_string() const {
  if (v_ == 0) return "0";
  // Work with the negative magnitude so that min_raw() needs no special case.
  int128 x = v_ > 0 ? -v_ : v_;
  std::string out;
  while (x != 0) {
    out.push_back(static_cast<char>('0' - static_cast<int>(x % 10)));
    x /= 10;
  }
  if (v_ < 0) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

Int Int::parse(std::string_view text) {
  if (text.empty()) throw PreconditionError("integer literal is empty");
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw PreconditionError("integer literal has no digits: '" + std::string(text) + "'");
  int128 acc = 0;  // accumulated as a nonpositive number
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') {
      throw PreconditionError("invalid character in integer literal: '" + std::string(text) + "'");
    }
    if (__builtin_mul_overflow(acc, 10, &acc) || __builtin_sub_overflow(acc, c - '0', &acc)) {
      throw OverflowError("integer literal exceeds 128 bits: '" + std::string(text) + "'");
    }
  }
  if (!negative) {
    if (acc == min_raw()) throw OverflowError("integer literal exceeds 128 bits: '" + std::string(text) + "'");
    acc = -acc;
  }
  return from_raw(acc);
}

Int abs(Int a) { return a.sign() < 0 ? -a : a; }

Int gcd(Int a, Int b) {
  // Magnitudes as unsigned so that gcd(min, 0) is still representable or
  // reported.
  auto mag = [](int128 v) {
    return v < 0 ? static_cast<unsigned __int128>(0) - static_cast<unsigned __int128>(v)
                 : static_cast<unsigned __int128>(v);
  };
  unsigned __int128 x = mag(a.raw());
  unsigned __int128 y = mag(b.raw());
  while (y != 0) {
    const unsigned __int128 t = x % y;
    x = y;
    y = t;
  }
  if (x > static_cast<unsigned __int128>(Int::max_raw())) throw OverflowError("gcd: result exceeds 128 bits");
  return Int::from_raw(static_cast<int128>(x));
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b).sign() != 0 && ((a.sign() < 0) != (b.sign() < 0))) q -= 1;
  return q;
}

Int ceil_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b).sign() != 0 && ((a.sign() < 0) == (b.sign() < 0))) q += 1;
  return q;
}

Int pow(Int base, unsigned exponent) {
  Int result = 1;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, Int v) { return os << v.to_string(); }

BigInt to_big(Int v) { return BigInt(v.to_string()); }

Int from_big(const BigInt& v) {
  if (mpz_sizeinbase(v.get_mpz_t(), 2) > 127) throw OverflowError("value exceeds 128 bits");
  return Int::parse(v.get_str());
}

}  // namespace polycensus
