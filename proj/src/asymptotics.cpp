#include "polycensus/asymptotics.hpp"

#include <cmath>
#include <string>

namespace polycensus {
namespace {

bool prime(int d) { return spf(d) == d; }

Prediction two_sided(Rat e, bool log = false) { return {e, log, PredictionKind::TwoSided}; }
Prediction upper_only(Rat e, bool log = false) { return {e, log, PredictionKind::UpperOnly}; }

struct Line {
  double slope = 0;
  double intercept = 0;
  double rms = 0;
};

Line least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<double>(x.size());
  double mx = 0;
  double my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0;
  double sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  Line l;
  l.slope = sxy / sxx;
  l.intercept = my - l.slope * mx;
  double ss = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (l.slope * x[i] + l.intercept);
    ss += r * r;
  }
  l.rms = std::sqrt(ss / n);
  return l;
}

}  // namespace

Prediction predicted_growth(int d, bool monic, Variant variant, int m, int n) {
  if (d < 2) throw PreconditionError("predicted_growth: degree must be at least 2");
  if (prime(d)) return {Rat(0), false, PredictionKind::Vanishing};
  const int ell = spf(d);
  if (variant != Variant::Split) {
    if (monic) return d == 4 ? two_sided(2, true) : two_sided(d / ell);
    return two_sided(d / ell + 1);
  }
  if (m < 2 || n < 2 || m * n != d) {
    throw PreconditionError("predicted_growth: invalid split (" + std::to_string(m) + "," + std::to_string(n) +
                            ") for degree " + std::to_string(d));
  }
  const int mm1 = m * (m - 1);
  const int mp1 = m * (m + 1);
  if (monic) {
    if (m == 2 && n == 2) return two_sided(2, true);
    if (mm1 >= 2 * n) return two_sided(m);
    if (mm1 == 2 * (n - 1)) return upper_only(m, true);
    // m(m-1) <= 2(n-2): exponent (m+1)/2 + (n-1)/m
    return upper_only(Rat(Int(m + 1), Int(2)) + Rat(Int(n - 1), Int(m)));
  }
  if (mp1 >= 2 * (n + 1)) return two_sided(m + 1);
  if (mp1 == 2 * n) return upper_only(m + 1, true);
  // m(m+1) <= 2(n-1): exponent (m+1)/2 + n/m
  return upper_only(Rat(Int(m + 1), Int(2)) + Rat(Int(n), Int(m)));
}

Prediction predicted_remainder(int d, bool monic) {
  if (d < 4 || prime(d)) throw PreconditionError("predicted_remainder: degree must be composite");
  const int ell = spf(d);
  if (monic) return d == 6 ? upper_only(Rat(Int(5), Int(2))) : upper_only(d / ell - 1);
  return d == 6 ? upper_only(3, true) : upper_only(d / ell);
}

GrowthFit fit_growth(const std::vector<std::pair<double, double>>& points, const FitOptions& options) {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> ylog;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto [h, c] = points[i];
    if (i > 0 && !(points[i - 1].first <= h)) throw PreconditionError("fit_growth: H must be ascending");
    if (!(h > 1)) throw PreconditionError("fit_growth: H must exceed 1");
    if (c < options.min_count || !(c > 0)) continue;
    x.push_back(std::log(h));
    y.push_back(std::log(c));
    ylog.push_back(std::log(c) - std::log(std::log(h)));
  }
  if (x.size() < 3) {
    throw PreconditionError("fit_growth: need at least 3 points with count >= " + std::to_string(options.min_count) +
                            ", got " + std::to_string(x.size()));
  }
  if (x.front() == x.back()) throw PreconditionError("fit_growth: all points share the same H");

  const Line pw = least_squares(x, y);
  const Line lg = least_squares(x, ylog);
  GrowthFit fit;
  fit.points_used = static_cast<int>(x.size());
  fit.power_exponent = pw.slope;
  fit.power_rms = pw.rms;
  fit.log_exponent = lg.slope;
  fit.log_rms = lg.rms;
  fit.log_conclusive = x.size() >= 4;
  fit.log_model_preferred = fit.log_conclusive && lg.rms < pw.rms;
  const Line& best = fit.log_model_preferred ? lg : pw;
  fit.exponent = best.slope;
  fit.constant = std::exp(best.intercept);
  fit.rms_residual = best.rms;
  return fit;
}

RemainderReport remainder_report(int d, bool monic, const std::vector<Int>& grid, int workers,
                                 const CensusConfig& config) {
  RemainderReport report;
  report.d = d;
  report.monic = monic;
  report.predicted = predicted_remainder(d, monic);
  ForwardOptions opts;
  opts.workers = workers;
  opts.track_indecomposable = true;
  opts.config = config;
  std::vector<std::pair<double, double>> positive;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i > 0 && !(grid[i - 1] < grid[i])) throw PreconditionError("remainder_report: grid must be ascending");
    const ForwardTally t = forward_tally(d, grid[i], monic, opts);
    RemainderRow row;
    row.height = grid[i];
    row.total = t.total();
    row.indecomp = t.indecomp_pair();
    row.remainder = row.total - row.indecomp;
    row.ratio = row.total.is_zero() ? 0.0 : row.remainder.to_double() / row.total.to_double();
    report.rows.push_back(row);
    positive.emplace_back(grid[i].to_double(), row.remainder.to_double());
  }
  try {
    report.fit = fit_growth(positive);
  } catch (const PreconditionError&) {
    report.fit.reset();
  }
  return report;
}

}  // namespace polycensus
