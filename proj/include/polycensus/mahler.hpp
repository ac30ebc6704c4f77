#pragma once

// Mahler measure M(f) = |lead f| * prod max(1, |alpha_i|) from numerically
// computed roots, and checks of the height/measure inequalities.

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "polycensus/poly.hpp"

namespace polycensus {

struct RootOptions {
  double tol = 1e-12;
  int max_iterations = 200;
};

struct MahlerResult {
  std::vector<std::complex<double>> roots;  ///< with multiplicity, deg f entries
  std::vector<double> residuals;            ///< |f(alpha_i)| per root
  double measure = 0;
  /// tol * ||f||_1 * max(1, max |alpha|)^d: every residual is at most this.
  double residual_bound = 0;
  int iterations = 0;
};

/// The root finder hit its iteration cap without meeting the residual
/// contract. Carries the best iterate.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, MahlerResult best) : std::runtime_error(what), best_(std::move(best)) {}
  const MahlerResult& best() const noexcept { return best_; }

 private:
  MahlerResult best_;
};

/// Aberth-Ehrlich simultaneous iteration. Every returned root satisfies
/// |f(alpha)| <= tol * ||f||_1 * max(1, |alpha|)^deg f.
MahlerResult roots(const IntPoly& f, const RootOptions& options = {});

double mahler_measure(const IntPoly& f, const RootOptions& options = {});

/// One inequality lhs <= rhs. slack = (rhs - lhs) / rhs.
struct InequalityCheck {
  std::string name;
  double lhs = 0;
  double rhs = 0;
  double slack = 0;
  bool holds(double tolerance = 0) const { return slack >= -tolerance; }
};

enum class Relation { Product, Composition };

struct InequalityReport {
  Relation relation = Relation::Product;
  /// H 2^{-d} <= M and M <= H sqrt(d+1), for f, g and h in that order.
  std::vector<InequalityCheck> height_measure;
  /// Product only: |M(f) - M(g) M(h)| / M(f).
  double product_rel_error = 0;
  /// Composition only: |a| H(h)^m <= K1 H(f) and H(g) <= K2 H(f).
  std::vector<InequalityCheck> coefficient_bounds;
  double mf = 0;
  double mg = 0;
  double mh = 0;
};

/// The two height/measure inequalities for f.
std::vector<InequalityCheck> height_measure_checks(const IntPoly& f, double measure);

/// With Relation::Product f must equal g*h exactly; with
/// Relation::Composition f must equal g o h exactly and h(0) = 0.
InequalityReport check_inequalities(const IntPoly& f, const IntPoly& g, const IntPoly& h, Relation relation,
                                    const RootOptions& options = {});

}  // namespace polycensus
