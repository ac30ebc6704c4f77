#pragma once

#include <random>
#include <vector>

#include "polycensus/poly.hpp"

namespace polycensus::testing {

inline IntPoly random_poly(std::mt19937_64& rng, int degree, long long bound) {
  std::uniform_int_distribution<long long> coeff(-bound, bound);
  std::vector<Int> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = coeff(rng);
  while (c.back().is_zero()) c.back() = coeff(rng);
  return IntPoly(std::move(c));
}

/// Random polynomial with zero constant term and positive leading
/// coefficient; monic when requested.
inline IntPoly random_inner(std::mt19937_64& rng, int degree, long long bound, bool monic) {
  IntPoly p = random_poly(rng, degree, bound);
  std::vector<Int> c = p.coeffs();
  c[0] = 0;
  if (monic) c.back() = 1;
  if (c.back().sign() < 0) c.back() = -c.back();
  return IntPoly(std::move(c));
}

inline IntPoly random_outer(std::mt19937_64& rng, int degree, long long bound, bool monic) {
  IntPoly p = random_poly(rng, degree, bound);
  if (!monic) return p;
  std::vector<Int> c = p.coeffs();
  c.back() = 1;
  return IntPoly(std::move(c));
}

}  // namespace polycensus::testing
