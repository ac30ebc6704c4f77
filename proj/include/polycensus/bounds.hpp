#pragma once

// Explicit coefficient bounds for f = g o h with h(0) = 0:
//
//   |lead g| * H(h)^m <= K1 * H(f),      H(g) <= K2 * H(f),
//
// with d = m n, K1 = 2^d (n+1)^{m/2} and K2 = 2^m (n+1)^{m/2} sqrt(d+1).
//
// Only K1 is used to bound enumeration. It dominates 2^d sqrt(d+1), which
// follows from the height/measure inequalities
//   H(p) 2^{-deg p} <= M(p) <= H(p) sqrt(deg p + 1)
// applied to M(f) = |a| prod M(h - alpha_i) and H(h - alpha_i) >= H(h).
// The same argument bounds every coefficient of g:
//   |a_j| <= binom(m, j) K1 H(f) / H(h)^j.

#include <cstdint>

#include "polycensus/integer.hpp"

namespace polycensus {

struct ExplicitConstants {
  double k1 = 0;
  double k2 = 0;
};

ExplicitConstants explicit_constants(int m, int n);

/// Coefficient box that contains every normalized decomposition
/// f = g o h of split (m, n) with H(f) <= height.
class EnumBox {
 public:
  EnumBox(int m, int n, Int height);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  Int height() const noexcept { return height_; }
  const ExplicitConstants& constants() const noexcept { return k_; }

  /// Largest b with |lead_g| * b^m <= K1 * height; 0 if none.
  Int b_max(Int lead_g) const;
  /// Bound on |a_j| given H(h) = b >= 1.
  Int g_coeff_bound(int j, Int b) const;

 private:
  int m_;
  int n_;
  Int height_;
  ExplicitConstants k_;
};

}  // namespace polycensus
