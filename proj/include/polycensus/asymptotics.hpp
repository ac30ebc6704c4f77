#pragma once

// Predicted growth rates of the census counts and empirical power-law fits.

#include <optional>
#include <utility>
#include <vector>

#include "polycensus/census.hpp"

namespace polycensus {

inline int spf(int d) { return smallest_prime_factor(d); }

enum class PredictionKind {
  TwoSided,   ///< count is bounded above and below by constant multiples of the rate
  UpperOnly,  ///< only an upper bound is known
  Vanishing,  ///< prime degree: the count is identically 0
};

/// count ~ H^exponent, times log H when log_factor is set.
struct Prediction {
  Rat exponent{0};
  bool log_factor = false;
  PredictionKind kind = PredictionKind::TwoSided;

  double exponent_value() const { return exponent.num().to_double() / exponent.den().to_double(); }
  friend bool operator==(const Prediction&, const Prediction&) = default;
};

/// Growth of D_d(H) (monic) or D*_d(H) for the Total variant, and of the
/// per-split counts for Split. IndecompPair follows the dominant split
/// (d/l, l).
Prediction predicted_growth(int d, bool monic, Variant variant, int m = 0, int n = 0);

/// Growth of D - I (remainder after the indecomposable-pair count).
Prediction predicted_remainder(int d, bool monic);

struct GrowthFit {
  double exponent = 0;  ///< from the preferred model
  bool log_model_preferred = false;
  bool log_conclusive = false;  ///< false when fewer than 4 points were fitted
  double constant = 0;          ///< count ~ constant * H^exponent (* ln H)
  double rms_residual = 0;      ///< of the preferred model, in log space
  int points_used = 0;
  double power_exponent = 0;
  double power_rms = 0;
  double log_exponent = 0;
  double log_rms = 0;
};

struct FitOptions {
  double min_count = 50;
};

/// Least squares of log(count) on log(H) (power model) and of
/// log(count) - log(log H) on log(H) (power-log model). Points with
/// count < min_count are dropped; at least 3 must remain.
GrowthFit fit_growth(const std::vector<std::pair<double, double>>& points, const FitOptions& options = {});

struct RemainderRow {
  Int height = 0;
  Int total = 0;     ///< D
  Int indecomp = 0;  ///< I
  Int remainder = 0;  ///< D - I
  double ratio = 0;   ///< (D - I) / D
};

struct RemainderReport {
  int d = 0;
  bool monic = true;
  std::vector<RemainderRow> rows;
  Prediction predicted;
  std::optional<GrowthFit> fit;  ///< absent when too few positive remainders
};

RemainderReport remainder_report(int d, bool monic, const std::vector<Int>& grid, int workers,
                                 const CensusConfig& config = CensusConfig::from_env());

}  // namespace polycensus
