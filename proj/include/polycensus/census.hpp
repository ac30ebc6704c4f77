#pragma once

// Exact counts of decomposable integer polynomials of degree d and height at
// most H.
//
// Two independent routes produce every count:
//  * count_bruteforce walks the whole coefficient box serially and asks the
//    decomposition test about each polynomial. It is the reference.
//  * count_forward generates f = g o h from normalized pairs inside the
//    EnumBox, pruning on coefficients as soon as they are final, and
//    deduplicates on the exact coefficient vector. It runs in parallel over
//    inner-polynomial shards.
//
// Since h(0) = 0 the constant of f is the constant of g, free in [-H, H] and
// irrelevant to decomposability, so the forward route deduplicates on
// coefficients 1..d and multiplies by 2H + 1.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polycensus/bounds.hpp"
#include "polycensus/decompose.hpp"
#include "polycensus/poly.hpp"

namespace polycensus {

enum class Variant { Total, Split, IndecompPair };
enum class Method { Oracle, Forward };

struct CountQuery {
  int d = 0;
  Int height = 0;
  bool monic = true;
  Variant variant = Variant::Total;
  int m = 0;  ///< Split only
  int n = 0;  ///< Split only

  /// Throws PreconditionError unless d, H >= 2 and a Split has m n = d,
  /// m, n >= 2.
  void validate() const;
};

struct CountResult {
  Int count = 0;
  CountQuery query;
  Method method = Method::Forward;
  double elapsed_seconds = 0;
  int workers = 1;
};

struct CensusConfig {
  /// Largest coefficient box the oracle will walk.
  std::uint64_t oracle_budget = 50'000'000;
  /// Cap on distinct entries in the forward deduplication set.
  std::uint64_t set_budget = 200'000'000;

  /// Defaults, with set_budget overridden by POLYCENSUS_BUDGET when set.
  static CensusConfig from_env();
};

/// Everything one forward pass learns about (d, H, monic).
struct ForwardTally {
  std::vector<std::pair<int, int>> splits;  ///< enumerated splits
  std::vector<std::uint64_t> split_upper;   ///< distinct f (mod constant) per split
  std::vector<std::uint64_t> raw_pairs;     ///< (g, h) pairs generated per split
  std::uint64_t total_upper = 0;            ///< distinct over all enumerated splits
  std::uint64_t indecomp_upper = 0;         ///< in split (d/l, l) with g indecomposable
  Int constant_choices = 0;                 ///< 2H + 1

  Int total() const { return constant_choices * Int(static_cast<long long>(total_upper)); }
  Int split(int m, int n) const;
  Int indecomp_pair() const { return constant_choices * Int(static_cast<long long>(indecomp_upper)); }
};

struct ForwardOptions {
  int workers = 1;
  /// Restrict to these splits; empty means all splits of d.
  std::vector<std::pair<int, int>> splits;
  bool track_indecomposable = false;
  CensusConfig config{};
};

/// Called once per generated pair (with g's constant term 0). Only honoured
/// with workers == 1.
using PairVisitor = std::function<void(const IntPoly& g, const IntPoly& h)>;

ForwardTally forward_tally(int d, Int height, bool monic, const ForwardOptions& options,
                           const PairVisitor& visit = nullptr);

CountResult count_forward(const CountQuery& q, int workers = 1, const CensusConfig& config = CensusConfig::from_env());

/// Called for every polynomial the oracle finds decomposable, with the witness
/// that decided it.
using WitnessVisitor = std::function<void(const IntPoly& f, const Decomposition& w)>;

CountResult count_bruteforce(const CountQuery& q, const CensusConfig& config = CensusConfig::from_env(),
                             const WitnessVisitor& visit = nullptr);

/// Number of polynomials the oracle would visit for q.
double oracle_box_size(const CountQuery& q);

/// count_forward at every grid point, in grid order. on_row fires as each
/// point completes.
std::vector<CountResult> census_sweep(const CountQuery& base, const std::vector<Int>& grid, int workers,
                                      const CensusConfig& config = CensusConfig::from_env(),
                                      const std::function<void(const CountResult&)>& on_row = nullptr);

int smallest_prime_factor(int d);

std::string to_string(Variant v);
std::string to_string(Method m);

}  // namespace polycensus
