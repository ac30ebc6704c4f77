#include "polycensus/bounds.hpp"

#include <cmath>
#include <string>

namespace polycensus {
namespace {

// Relative widening applied before flooring so that rounding in long double
// can only make a box larger.
constexpr long double kWiden = 1.0L + 1e-12L;

Int floor_to_int(long double x) {
  if (!(x < 1e36L)) throw OverflowError("enumeration bound exceeds 128 bits");
  return Int::from_raw(static_cast<int128>(std::floor(x)));
}

long double binom(int m, int j) {
  long double r = 1;
  for (int i = 1; i <= j; ++i) r = r * static_cast<long double>(m - j + i) / static_cast<long double>(i);
  return r;
}

}  // namespace

ExplicitConstants explicit_constants(int m, int n) {
  if (m < 2 || n < 2) {
    throw PreconditionError("explicit_constants: m and n must be at least 2, got (" + std::to_string(m) + "," +
                            std::to_string(n) + ")");
  }
  const int d = m * n;
  const double root = std::pow(static_cast<double>(n + 1), static_cast<double>(m) / 2.0);
  return {std::ldexp(1.0, d) * root, std::ldexp(1.0, m) * root * std::sqrt(static_cast<double>(d + 1))};
}

EnumBox::EnumBox(int m, int n, Int height) : m_(m), n_(n), height_(height), k_(explicit_constants(m, n)) {
  if (height.sign() < 0) throw PreconditionError("EnumBox: negative height");
}

Int EnumBox::b_max(Int lead_g) const {
  const long double a = abs(lead_g).to_long_double();
  if (a == 0) throw PreconditionError("EnumBox::b_max: zero leading coefficient");
  const long double limit = static_cast<long double>(k_.k1) * height_.to_long_double() * kWiden;
  Int b = floor_to_int(std::pow(limit / a, 1.0L / static_cast<long double>(m_)));
  // Correct the floating estimate in both directions against the widened limit.
  auto fits = [&](Int x) { return a * std::pow(x.to_long_double(), static_cast<long double>(m_)) <= limit; };
  while (b.sign() > 0 && !fits(b)) b -= 1;
  while (fits(b + 1)) b += 1;
  return b;
}

Int EnumBox::g_coeff_bound(int j, Int b) const {
  if (j < 0 || j > m_) throw PreconditionError("g_coeff_bound: index out of range");
  if (b.sign() <= 0) throw PreconditionError("g_coeff_bound: H(h) must be positive");
  const long double bound = binom(m_, j) * static_cast<long double>(k_.k1) * height_.to_long_double() /
                            std::pow(b.to_long_double(), static_cast<long double>(j)) * kWiden;
  return floor_to_int(bound);
}

}  // namespace polycensus
