#pragma once

// Functional decomposition f = g o h of integer polynomials.
//
// For a split (m, n) the inner polynomial is pinned down by its top n
// coefficients: once h is normalized to be monic with h(0) = 0 it is unique
// over a field of characteristic 0, so a single candidate per split decides
// the question. Integer decomposability agrees with decomposability over the
// complex numbers (Turnwald), which is what makes the rational test
// conclusive for Z[x].

#include <optional>
#include <vector>

#include "polycensus/poly.hpp"

namespace polycensus {

enum class OverflowPolicy {
  Report,   ///< propagate OverflowError from the 128-bit path
  Promote,  ///< retry the computation with arbitrary-precision integers
};

/// A normalized witness f = g o h: h(0) = 0, lead(h) > 0 and h primitive.
/// When f is monic, g and h are both monic.
struct Decomposition {
  IntPoly g;
  IntPoly h;
  int m = 0;  ///< deg g
  int n = 0;  ///< deg h

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// The monic degree-n rational h with h(0) = 0 whose m-th power, scaled by
/// lead(f), agrees with f in the coefficients of x^{d-1}, ..., x^{d-n+1}.
RatPoly candidate_h(const IntPoly& f, int m, int n);

/// Digits c_0, ..., c_k of f in base h: f = sum c_i h^i, deg c_i < deg h.
std::vector<RatPoly> hadic_coefficients(const IntPoly& f, const RatPoly& h);

std::optional<Decomposition> decompose_split(const IntPoly& f, int m, int n,
                                             OverflowPolicy policy = OverflowPolicy::Promote);

bool is_decomposable(const IntPoly& f, OverflowPolicy policy = OverflowPolicy::Promote);

/// Indecomposable factors f_1, ..., f_k with f = f_1 o ... o f_k. The
/// innermost factor is peeled off first, always at the smallest inner degree
/// that admits a decomposition.
std::vector<IntPoly> full_decomposition(const IntPoly& f, OverflowPolicy policy = OverflowPolicy::Promote);

/// Ordered splits (m, n), m * n = d, m, n >= 2, by increasing n.
std::vector<std::pair<int, int>> splits_of(int d);

}  // namespace polycensus
