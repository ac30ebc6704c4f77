#include <chrono>
#include <cmath>
#include <cstdlib>
#include <string>

#include "polycensus/census.hpp"

namespace polycensus {
namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool is_prime(int d) { return d >= 2 && smallest_prime_factor(d) == d; }

}  // namespace

int smallest_prime_factor(int d) {
  if (d < 2) throw PreconditionError("smallest_prime_factor: argument must be at least 2");
  for (int p = 2; p * p <= d; ++p) {
    if (d % p == 0) return p;
  }
  return d;
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::Total:
      return "total";
    case Variant::Split:
      return "split";
    case Variant::IndecompPair:
      return "indecomp_pair";
  }
  return "?";
}

std::string to_string(Method m) { return m == Method::Oracle ? "oracle" : "forward"; }

void CountQuery::validate() const {
  if (d < 2) throw PreconditionError("degree must be at least 2");
  if (height < Int(2)) throw PreconditionError("height must be at least 2");
  if (variant == Variant::Split && (m < 2 || n < 2 || m * n != d)) {
    throw PreconditionError("invalid split (" + std::to_string(m) + "," + std::to_string(n) + ") for degree " +
                            std::to_string(d));
  }
}

CensusConfig CensusConfig::from_env() {
  CensusConfig c;
  if (const char* env = std::getenv("POLYCENSUS_BUDGET"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') throw PreconditionError(std::string("POLYCENSUS_BUDGET is not an integer: ") + env);
    c.set_budget = v;
  }
  return c;
}

CountResult count_forward(const CountQuery& q, int workers, const CensusConfig& config) {
  q.validate();
  const auto start = std::chrono::steady_clock::now();
  CountResult result{0, q, Method::Forward, 0, workers};
  if (is_prime(q.d)) {
    result.elapsed_seconds = seconds_since(start);
    return result;
  }
  ForwardOptions opts;
  opts.workers = workers;
  opts.config = config;
  if (q.variant == Variant::Split) {
    opts.splits = {{q.m, q.n}};
  } else if (q.variant == Variant::IndecompPair) {
    const int ell = smallest_prime_factor(q.d);
    opts.splits = {{q.d / ell, ell}};
    opts.track_indecomposable = true;
  }
  const ForwardTally tally = forward_tally(q.d, q.height, q.monic, opts);
  switch (q.variant) {
    case Variant::Total:
      result.count = tally.total();
      break;
    case Variant::Split:
      result.count = tally.split(q.m, q.n);
      break;
    case Variant::IndecompPair:
      result.count = tally.indecomp_pair();
      break;
  }
  result.elapsed_seconds = seconds_since(start);
  return result;
}

double oracle_box_size(const CountQuery& q) {
  const double side = 2.0 * q.height.to_double() + 1.0;
  return q.monic ? std::pow(side, q.d) : std::pow(side, q.d) * (side - 1.0);
}

CountResult count_bruteforce(const CountQuery& q, const CensusConfig& config, const WitnessVisitor& visit) {
  q.validate();
  const double box = oracle_box_size(q);
  if (box > static_cast<double>(config.oracle_budget)) {
    throw BudgetExceeded("oracle: box of " + std::to_string(static_cast<unsigned long long>(box)) +
                             " polynomials exceeds budget of " + std::to_string(config.oracle_budget),
                         box);
  }
  const auto start = std::chrono::steady_clock::now();
  CountResult result{0, q, Method::Oracle, 0, 1};

  const int ell = smallest_prime_factor(q.d);
  const long long h = q.height.to_int64();
  // Odometer over coefficients 0..d-1 (and d when not monic).
  const std::size_t free = static_cast<std::size_t>(q.d) + (q.monic ? 0 : 1);
  std::vector<Int> coeffs(static_cast<std::size_t>(q.d) + 1, Int(-h));
  if (q.monic) coeffs[static_cast<std::size_t>(q.d)] = 1;
  long long count = 0;

  while (true) {
    const IntPoly f(coeffs);
    if (f.degree() == q.d) {
      std::optional<Decomposition> w;
      bool hit = false;
      switch (q.variant) {
        case Variant::Total:
          for (const auto& [m, n] : splits_of(q.d)) {
            if ((w = decompose_split(f, m, n))) break;
          }
          hit = w.has_value();
          break;
        case Variant::Split:
          w = decompose_split(f, q.m, q.n);
          hit = w.has_value();
          break;
        case Variant::IndecompPair:
          if (!is_prime(q.d)) {
            w = decompose_split(f, q.d / ell, ell);
            hit = w && (is_prime(w->m) || !is_decomposable(w->g));
          }
          break;
      }
      if (hit) {
        ++count;
        if (visit) visit(f, *w);
      }
    }
    std::size_t i = 0;
    while (i < free && coeffs[i] == Int(h)) coeffs[i++] = Int(-h);
    if (i == free) break;
    coeffs[i] += 1;
  }
  result.count = Int(count);
  result.elapsed_seconds = seconds_since(start);
  return result;
}

std::vector<CountResult> census_sweep(const CountQuery& base, const std::vector<Int>& grid, int workers,
                                      const CensusConfig& config,
                                      const std::function<void(const CountResult&)>& on_row) {
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i - 1] < grid[i])) throw PreconditionError("census_sweep: grid must be strictly ascending");
  }
  std::vector<CountResult> rows;
  rows.reserve(grid.size());
  for (const Int& H : grid) {
    CountQuery q = base;
    q.height = H;
    rows.push_back(count_forward(q, workers, config));
    if (on_row) on_row(rows.back());
  }
  return rows;
}

}  // namespace polycensus
