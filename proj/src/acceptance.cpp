#include "polycensus/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include "polycensus/asymptotics.hpp"
#include "polycensus/census.hpp"
#include "polycensus/decompose.hpp"
#include "polycensus/mahler.hpp"
#include "polycensus/report.hpp"

namespace polycensus {

namespace {

const char* const kTitles[] = {
    "oracle equivalence, monic d=4, H=2..12",
    "oracle equivalence, monic d=6, splits and total, H=2..4",
    "oracle equivalence, non-monic d=4, H=2..5",
    "prime degree counts vanish",
    "d=4 monic growth H^2 log H",
    "d=9 monic growth exponent 3",
    "non-monic d=4 growth exponent 3",
    "remainder D-I for d=8, and zero for d=4, 9",
    "explicit coefficient bounds K1, K2",
    "Mahler measure inequalities and product law",
    "decomposition round trip",
    "determinism across worker counts",
    "quartic lower-bound family membership at H=16",
};

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!passed) detail << "; ";
      passed = false;
      detail << "FAILED " << what;
    }
  }
};

CountQuery query(int d, long long H, bool monic, Variant v = Variant::Total, int m = 0, int n = 0) {
  return CountQuery{d, Int(H), monic, v, m, n};
}

IntPoly random_poly(std::mt19937_64& rng, int degree, long long bound) {
  std::uniform_int_distribution<long long> coeff(-bound, bound);
  std::vector<Int> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = coeff(rng);
  while (c.back().is_zero()) c.back() = coeff(rng);
  return IntPoly(std::move(c));
}

IntPoly random_inner(std::mt19937_64& rng, int degree, long long bound, bool monic) {
  std::vector<Int> c = random_poly(rng, degree, bound).coeffs();
  c[0] = 0;
  if (monic) c.back() = 1;
  if (c.back().sign() < 0) c.back() = -c.back();
  return IntPoly(std::move(c));
}

IntPoly random_outer(std::mt19937_64& rng, int degree, long long bound, bool monic) {
  std::vector<Int> c = random_poly(rng, degree, bound).coeffs();
  if (monic) c.back() = 1;
  return IntPoly(std::move(c));
}

std::vector<Int> grid_of(std::initializer_list<long long> hs) {
  std::vector<Int> g;
  for (long long h : hs) g.emplace_back(h);
  return g;
}

void check_equal(Outcome& out, const CountQuery& q, int workers) {
  const CensusConfig cfg = CensusConfig::from_env();
  const Int fwd = count_forward(q, workers, cfg).count;
  const Int orc = count_bruteforce(q, cfg).count;
  std::ostringstream what;
  what << "d=" << q.d << " H=" << q.height << " " << to_string(q.variant);
  if (q.variant == Variant::Split) what << "(" << q.m << "," << q.n << ")";
  what << ": forward " << fwd << " vs oracle " << orc;
  out.require(fwd == orc, what.str());
}

Outcome oracle_monic4(const AcceptanceOptions& o) {
  Outcome out;
  for (int H = 2; H <= 12; ++H) check_equal(out, query(4, H, true), o.workers);
  if (out.passed) out.detail << "11 heights equal, D_4(12) = " << count_forward(query(4, 12, true)).count;
  return out;
}

Outcome oracle_monic6(const AcceptanceOptions& o) {
  Outcome out;
  for (int H = 2; H <= 4; ++H) {
    check_equal(out, query(6, H, true), o.workers);
    for (auto [m, n] : splits_of(6)) check_equal(out, query(6, H, true, Variant::Split, m, n), o.workers);
  }
  if (out.passed) out.detail << "9 queries equal, D_6(4) = " << count_forward(query(6, 4, true)).count;
  return out;
}

Outcome oracle_nonmonic4(const AcceptanceOptions& o) {
  Outcome out;
  for (int H = 2; H <= 5; ++H) check_equal(out, query(4, H, false), o.workers);
  if (out.passed) out.detail << "4 heights equal, D*_4(5) = " << count_forward(query(4, 5, false)).count;
  return out;
}

Outcome prime_vanishing(const AcceptanceOptions& o) {
  Outcome out;
  const Int d5 = count_forward(query(5, 100, true), o.workers).count;
  const Int d7 = count_forward(query(7, 20, false), o.workers).count;
  out.require(d5.is_zero(), "D_5(100) = " + d5.to_string());
  out.require(d7.is_zero(), "D*_7(20) = " + d7.to_string());
  std::mt19937_64 rng(o.seed);
  int decomposable = 0;
  for (int t = 0; t < o.samples; ++t) {
    const bool five = t % 2 == 0;
    IntPoly f = five ? random_outer(rng, 5, 100, true) : random_poly(rng, 7, 20);
    if (is_decomposable(f)) ++decomposable;
  }
  out.require(decomposable == 0, std::to_string(decomposable) + " random prime-degree samples decomposable");
  if (out.passed) out.detail << "D_5(100) = 0, D*_7(20) = 0, " << o.samples << " samples indecomposable";
  return out;
}

std::string fmt(double x, int precision = 4) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(precision) << x;
  return s.str();
}

std::vector<std::pair<double, double>> points_of(const std::vector<CountResult>& rows) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : rows) pts.emplace_back(r.query.height.to_double(), r.count.to_double());
  return pts;
}

Outcome growth_d4(const AcceptanceOptions& o) {
  Outcome out;
  const auto rows = census_sweep(query(4, 2, true), grid_of({125, 250, 500, 1000, 2000}), o.workers);
  const GrowthFit fit = fit_growth(points_of(rows));
  std::vector<double> ratio;
  for (std::size_t i = rows.size() - 3; i < rows.size(); ++i) {
    const double H = rows[i].query.height.to_double();
    ratio.push_back(rows[i].count.to_double() / (H * H * std::log(H)));
  }
  const auto [lo, hi] = std::minmax_element(ratio.begin(), ratio.end());
  const double variation = (*hi - *lo) / *lo;
  out.require(fit.power_exponent >= 2.0 && fit.power_exponent <= 2.35,
              "power exponent " + fmt(fit.power_exponent) + " outside [2.00, 2.35]");
  out.require(fit.log_model_preferred, "log model not preferred");
  out.require(variation < 0.25, "ratio variation " + fmt(variation));
  out.detail << (out.passed ? "" : "; ") << "power exponent " << fmt(fit.power_exponent) << ", log model "
             << (fit.log_model_preferred ? "preferred" : "rejected") << " (rms " << fmt(fit.log_rms, 5) << " vs "
             << fmt(fit.power_rms, 5) << "), count/(H^2 ln H) in [" << fmt(*lo, 3) << ", " << fmt(*hi, 3)
             << "], variation " << fmt(100 * variation, 1) << "%";
  return out;
}

Outcome growth_exponent(const CountQuery& base, double target, double tol, const AcceptanceOptions& o) {
  Outcome out;
  const auto rows = census_sweep(base, grid_of({25, 50, 100, 200}), o.workers);
  const GrowthFit fit = fit_growth(points_of(rows));
  out.require(std::fabs(fit.exponent - target) <= tol,
              "exponent " + fmt(fit.exponent) + " not within " + fmt(tol, 2) + " of " + fmt(target, 0));
  out.detail << (out.passed ? "" : "; ") << "fitted exponent " << fmt(fit.exponent) << " ("
             << (fit.log_model_preferred ? "power-log" : "power") << " model), power " << fmt(fit.power_exponent)
             << ", count(200) = " << rows.back().count;
  return out;
}

Outcome remainder(const AcceptanceOptions& o) {
  Outcome out;
  const auto grid = grid_of({10, 20, 40, 80});
  const RemainderReport r8 = remainder_report(8, true, grid, o.workers);
  double prev = 2;
  for (const auto& row : r8.rows) {
    out.require(row.remainder.sign() >= 0, "negative remainder at H=" + row.height.to_string());
    out.require(row.ratio <= prev, "ratio increases at H=" + row.height.to_string());
    prev = row.ratio;
  }
  out.require(r8.fit.has_value(), "no fit for the d=8 remainder");
  if (r8.fit) out.require(r8.fit->exponent <= 3.3, "remainder exponent " + fmt(r8.fit->exponent));
  for (int d : {4, 9}) {
    for (const auto& row : remainder_report(d, true, grid, o.workers).rows) {
      out.require(row.remainder.is_zero(), "d=" + std::to_string(d) + " remainder nonzero at H=" + row.height.to_string());
    }
  }
  out.detail << (out.passed ? "" : "; ") << "d=8 (D-I)/D:";
  for (const auto& row : r8.rows) out.detail << " " << fmt(row.ratio, 5);
  if (r8.fit) out.detail << ", D-I exponent " << fmt(r8.fit->exponent);
  out.detail << ", d=4 and d=9 remainders zero";
  return out;
}

struct BoundTally {
  std::size_t checked = 0;
  std::size_t violations = 0;
  double worst_k1 = 0;  ///< largest lhs/rhs seen
  double worst_k2 = 0;

  void add(const IntPoly& f, const IntPoly& g, const IntPoly& h) {
    const int m = g.degree();
    const int n = h.degree();
    const ExplicitConstants k = explicit_constants(m, n);
    const long double hf = height(f).to_long_double();
    const long double lhs1 = abs(g.lead()).to_long_double() * std::pow(height(h).to_long_double(), m);
    const long double lhs2 = height(g).to_long_double();
    const double r1 = static_cast<double>(lhs1 / (k.k1 * hf));
    const double r2 = static_cast<double>(lhs2 / (k.k2 * hf));
    worst_k1 = std::max(worst_k1, r1);
    worst_k2 = std::max(worst_k2, r2);
    if (r1 > 1 || r2 > 1) ++violations;
    ++checked;
  }
};

Outcome explicit_bounds(const AcceptanceOptions& o) {
  Outcome out;
  BoundTally tally;
  const CensusConfig cfg = CensusConfig::from_env();
  std::vector<CountQuery> qs;
  for (int H = 2; H <= 12; ++H) qs.push_back(query(4, H, true));
  for (int H = 2; H <= 4; ++H) qs.push_back(query(6, H, true));
  for (int H = 2; H <= 5; ++H) qs.push_back(query(4, H, false));
  for (const auto& q : qs) {
    count_bruteforce(q, cfg, [&](const IntPoly& f, const Decomposition& w) { tally.add(f, w.g, w.h); });
    ForwardOptions fo;
    fo.config = cfg;
    forward_tally(q.d, q.height, q.monic, fo, [&](const IntPoly& g, const IntPoly& h) {
      tally.add(compose(g, h), g, h);
    });
  }
  const std::size_t from_census = tally.checked;
  std::mt19937_64 rng(o.seed + 9);
  const std::pair<int, int> splits[] = {{2, 2}, {2, 3}, {3, 2}, {2, 4}, {4, 2}, {3, 3}};
  for (int t = 0; t < o.samples; ++t) {
    const auto [m, n] = splits[t % 6];
    const bool monic = (t / 6) % 2 == 0;
    const IntPoly g = random_outer(rng, m, 1 + static_cast<long long>(rng() % 100), monic);
    const IntPoly h = random_inner(rng, n, 1 + static_cast<long long>(rng() % 10), monic);
    tally.add(compose(g, h), g, h);
  }
  out.require(tally.violations == 0, std::to_string(tally.violations) + " violations");
  out.detail << (out.passed ? "" : "; ") << tally.checked << " decompositions (" << from_census
             << " from criteria 1-3), worst ratio K1 " << fmt(tally.worst_k1) << ", K2 " << fmt(tally.worst_k2);
  return out;
}

Outcome mahler_suite(const AcceptanceOptions& o) {
  Outcome out;
  std::mt19937_64 rng(o.seed + 10);
  double worst_slack = 1;
  double worst_product = 0;
  int failures = 0;
  for (int t = 0; t < o.samples; ++t) {
    const IntPoly f = random_poly(rng, 1 + static_cast<int>(rng() % 10), 1 + static_cast<long long>(rng() % 1000));
    for (const auto& c : height_measure_checks(f, mahler_measure(f))) {
      worst_slack = std::min(worst_slack, c.slack);
      if (!c.holds(1e-9)) ++failures;
    }
  }
  for (int t = 0; t < o.samples; ++t) {
    const IntPoly g = random_poly(rng, 1 + static_cast<int>(rng() % 5), 1 + static_cast<long long>(rng() % 1000));
    const IntPoly h = random_poly(rng, 1 + static_cast<int>(rng() % 5), 1 + static_cast<long long>(rng() % 1000));
    const InequalityReport r = check_inequalities(g * h, g, h, Relation::Product);
    worst_product = std::max(worst_product, r.product_rel_error);
  }
  out.require(failures == 0, std::to_string(failures) + " height/measure violations");
  out.require(worst_product <= 1e-8, "product relative error " + std::to_string(worst_product));
  std::ostringstream e;
  e << std::scientific << std::setprecision(2) << worst_product;
  out.detail << (out.passed ? "" : "; ") << "min slack " << fmt(worst_slack, 6) << ", max product error "
             << e.str();
  return out;
}

Outcome round_trip(const AcceptanceOptions& o) {
  Outcome out;
  std::mt19937_64 rng(o.seed + 11);
  const std::pair<int, int> splits[] = {{2, 2}, {2, 3}, {3, 2}, {2, 4}, {4, 2}};
  int bad = 0;
  int bad_chain = 0;
  std::size_t factors = 0;
  for (int t = 0; t < o.samples; ++t) {
    const auto [m, n] = splits[t % 5];
    const bool monic = (t / 5) % 2 == 0;
    const IntPoly g = random_outer(rng, m, 40, monic);
    const IntPoly h = random_inner(rng, n, 6, monic);
    const IntPoly f = compose(g, h);
    const auto w = decompose_split(f, m, n);
    if (!w || compose(w->g, w->h) != f || (monic && (w->g != g || w->h != h))) ++bad;

    const auto chain = full_decomposition(f);
    IntPoly acc = chain.back();
    for (std::size_t i = chain.size() - 1; i-- > 0;) acc = compose(chain[i], acc);
    bool ok = acc == f && chain.size() >= 2;
    for (const auto& p : chain) ok = ok && !is_decomposable(p);
    if (!ok) ++bad_chain;
    factors += chain.size();
  }
  out.require(bad == 0, std::to_string(bad) + " witnesses not recovered");
  out.require(bad_chain == 0, std::to_string(bad_chain) + " bad full decompositions");
  out.detail << (out.passed ? "" : "; ") << o.samples << " pairs recovered, " << factors
             << " indecomposable factors recomposed";
  return out;
}

Outcome determinism(const AcceptanceOptions&) {
  Outcome out;
  const auto q = query(4, 100, true);
  const Int c1 = count_forward(q, 1).count;
  const Int c4 = count_forward(q, 4).count;
  const Int c8 = count_forward(q, 8).count;
  out.require(c1 == c4 && c4 == c8, "counts " + c1.to_string() + ", " + c4.to_string() + ", " + c8.to_string());
  auto body = [] {
    std::string s = csv_header() + "\n";
    for (const auto& r : census_sweep(query(6, 2, true), grid_of({10, 20, 40}), 4)) s += csv_row(r, false) + "\n";
    return s;
  };
  const std::string a = body();
  const std::string b = body();
  out.require(a == b, "CSV bodies differ");
  out.detail << (out.passed ? "" : "; ") << "D_4(100) = " << c1 << " for 1, 4, 8 workers; CSV bodies identical ("
             << a.size() << " bytes)";
  return out;
}

Outcome family(const AcceptanceOptions&) {
  Outcome out;
  const int H = 16;
  std::set<std::vector<Int>> seen;
  ForwardOptions fo;
  forward_tally(4, H, true, fo, [&](const IntPoly& g, const IntPoly& h) {
    std::vector<Int> c = g.coeffs();
    for (int a0 = -H; a0 <= H; ++a0) {
      c[0] = a0;
      seen.insert(compose(IntPoly(c), h).coeffs());
    }
  });
  std::size_t members = 0;
  std::size_t missing = 0;
  for (int b1 = 1; b1 * b1 <= H; ++b1) {
    for (int a0 = 1; a0 <= H; ++a0) {
      for (int a1 = -(H / b1); a1 <= -1; ++a1) {
        const IntPoly f = compose(IntPoly{a0, a1, 1}, IntPoly{0, b1, 1});
        ++members;
        if (height(f) > Int(H) || seen.count(f.coeffs()) == 0) ++missing;
      }
    }
  }
  const Int count = count_forward(query(4, H, true, Variant::Split, 2, 2)).count;
  out.require(missing == 0, std::to_string(missing) + " family members missing");
  out.require(count >= Int(static_cast<long long>(members)), "count below family size");
  out.require(Int(static_cast<long long>(seen.size())) == count, "visited set disagrees with the count");
  out.detail << (out.passed ? "" : "; ") << members << " family members present, D_4(2,2;16) = " << count;
  return out;
}

Outcome dispatch(int id, const AcceptanceOptions& o) {
  switch (id) {
    case 1: return oracle_monic4(o);
    case 2: return oracle_monic6(o);
    case 3: return oracle_nonmonic4(o);
    case 4: return prime_vanishing(o);
    case 5: return growth_d4(o);
    case 6: return growth_exponent(query(9, 2, true), 3.0, 0.15, o);
    case 7: return growth_exponent(query(4, 2, false), 3.0, 0.20, o);
    case 8: return remainder(o);
    case 9: return explicit_bounds(o);
    case 10: return mahler_suite(o);
    case 11: return round_trip(o);
    case 12: return determinism(o);
    case 13: return family(o);
    default: throw PreconditionError("no acceptance criterion " + std::to_string(id));
  }
}

}  // namespace

int acceptance_count() { return static_cast<int>(std::size(kTitles)); }

std::string acceptance_title(int id) {
  if (id < 1 || id > acceptance_count()) throw PreconditionError("no acceptance criterion " + std::to_string(id));
  return kTitles[id - 1];
}

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  CriterionResult r;
  r.id = id;
  r.title = acceptance_title(id);
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome out = dispatch(id, options);
    r.passed = out.passed;
    r.detail = out.detail.str();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids, const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id : ids) {
    out.push_back(run_criterion(id, options));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream s;
  s << (r.passed ? "PASS" : "FAIL") << " [" << std::setw(2) << r.id << "] " << r.title << " (" << std::fixed
    << std::setprecision(1) << r.seconds << " s): " << r.detail;
  return s.str();
}

}  // namespace polycensus
