#include "polycensus/mahler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polycensus/bounds.hpp"

namespace polycensus {
namespace {

using cplx = std::complex<double>;

struct Eval {
  cplx p;
  cplx dp;
};

Eval horner(const std::vector<double>& a, cplx z) {
  cplx p = a.back();
  cplx dp = 0;
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[i];
  }
  return {p, dp};
}

double abs_sum(const IntPoly& f) {
  double s = 0;
  for (const Int& c : f.coeffs()) s += std::fabs(c.to_double());
  return s;
}

double residual_limit(double tol, double norm1, int degree, cplx z) {
  return tol * norm1 * std::pow(std::max(1.0, std::abs(z)), degree);
}

}  // namespace

MahlerResult roots(const IntPoly& f, const RootOptions& options) {
  const int d = f.degree();
  if (d < 1) throw PreconditionError("roots: degree must be at least 1");

  MahlerResult out;
  // Exact zero roots first.
  std::size_t zeros = 0;
  while (f[zeros].is_zero()) ++zeros;
  std::vector<double> a;
  for (std::size_t i = zeros; i < f.size(); ++i) a.push_back(f[i].to_double());
  const int k = static_cast<int>(a.size()) - 1;

  std::vector<cplx> z(static_cast<std::size_t>(k));
  if (k == 1) {
    z[0] = -a[0] / a[1];
  } else if (k > 1) {
    double hmax = 0;
    for (double c : a) hmax = std::max(hmax, std::fabs(c));
    const double radius = 1.0 + hmax / std::fabs(a.back());
    for (int i = 0; i < k; ++i) {
      const double theta = 2.0 * std::numbers::pi * i / k + 0.4;
      z[static_cast<std::size_t>(i)] = std::polar(radius, theta);
    }
    int it = 0;
    int quiet = 0;
    for (; it < options.max_iterations; ++it) {
      double worst = 0;
      for (int i = 0; i < k; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        const Eval e = horner(a, z[ui]);
        if (e.p == cplx(0)) continue;
        const cplx ratio = e.p / e.dp;
        cplx repulse = 0;
        for (int j = 0; j < k; ++j) {
          if (j != i) repulse += 1.0 / (z[ui] - z[static_cast<std::size_t>(j)]);
        }
        const cplx step = ratio / (1.0 - ratio * repulse);
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
        z[ui] -= step;
        worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[ui])));
      }
      // Two consecutive sweeps at rounding level: converged.
      quiet = worst < 1e-14 ? quiet + 1 : 0;
      if (quiet >= 2) break;
    }
    out.iterations = it;
  }

  out.roots.assign(zeros, cplx(0));
  out.roots.insert(out.roots.end(), z.begin(), z.end());

  const double norm1 = abs_sum(f);
  std::vector<double> full(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) full[i] = f[i].to_double();
  bool ok = true;
  out.measure = std::fabs(f.lead().to_double());
  for (const cplx& r : out.roots) {
    const double res = std::abs(horner(full, r).p);
    const double limit = residual_limit(options.tol, norm1, d, r);
    out.residuals.push_back(res);
    out.residual_bound = std::max(out.residual_bound, limit);
    ok = ok && res <= limit;
    out.measure *= std::max(1.0, std::abs(r));
  }
  if (!ok) {
    throw ConvergenceError("roots: residual contract not met after " + std::to_string(out.iterations) + " iterations",
                           std::move(out));
  }
  return out;
}

double mahler_measure(const IntPoly& f, const RootOptions& options) {
  if (f.is_zero()) throw PreconditionError("mahler_measure: zero polynomial");
  if (f.degree() == 0) return std::fabs(f.lead().to_double());
  return roots(f, options).measure;
}

std::vector<InequalityCheck> height_measure_checks(const IntPoly& f, double measure) {
  const double h = height(f).to_double();
  const int d = f.degree();
  const double lower = std::ldexp(h, -d);
  const double upper = h * std::sqrt(static_cast<double>(d + 1));
  return {
      {"H 2^-d <= M", lower, measure, (measure - lower) / measure},
      {"M <= H sqrt(d+1)", measure, upper, (upper - measure) / upper},
  };
}

InequalityReport check_inequalities(const IntPoly& f, const IntPoly& g, const IntPoly& h, Relation relation,
                                    const RootOptions& options) {
  if (g.degree() < 1 || h.degree() < 1) throw PreconditionError("check_inequalities: g and h must be nonconstant");
  InequalityReport report;
  report.relation = relation;
  if (relation == Relation::Product) {
    if (!(g * h == f)) throw PreconditionError("check_inequalities: f is not the product g*h");
  } else {
    if (!h.coeff(0).is_zero()) throw PreconditionError("check_inequalities: h(0) must be 0");
    if (!(compose(g, h) == f)) throw PreconditionError("check_inequalities: f is not the composition g o h");
  }
  report.mf = mahler_measure(f, options);
  report.mg = mahler_measure(g, options);
  report.mh = mahler_measure(h, options);
  for (const auto& [p, mp] : {std::pair{&f, report.mf}, std::pair{&g, report.mg}, std::pair{&h, report.mh}}) {
    for (auto& c : height_measure_checks(*p, mp)) report.height_measure.push_back(std::move(c));
  }
  if (relation == Relation::Product) {
    report.product_rel_error = std::fabs(report.mf - report.mg * report.mh) / report.mf;
  } else {
    const int m = g.degree();
    const int n = h.degree();
    const ExplicitConstants k = explicit_constants(m, n);
    const double hf = height(f).to_double();
    const double lhs1 = std::fabs(g.lead().to_double()) * std::pow(height(h).to_double(), m);
    const double rhs1 = k.k1 * hf;
    const double lhs2 = height(g).to_double();
    const double rhs2 = k.k2 * hf;
    report.coefficient_bounds.push_back({"|a| H(h)^m <= K1 H(f)", lhs1, rhs1, (rhs1 - lhs1) / rhs1});
    report.coefficient_bounds.push_back({"H(g) <= K2 H(f)", lhs2, rhs2, (rhs2 - lhs2) / rhs2});
  }
  return report;
}

}  // namespace polycensus
