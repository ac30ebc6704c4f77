#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "polycensus/bounds.hpp"
#include "polycensus/decompose.hpp"
#include "polycensus/mahler.hpp"
#include "test_support.hpp"

using namespace polycensus;

namespace {

bool has_root(const MahlerResult& r, std::complex<double> z, double eps = 1e-9) {
  return std::any_of(r.roots.begin(), r.roots.end(), [&](auto a) { return std::abs(a - z) < eps; });
}

}  // namespace

TEST_CASE("roots of small polynomials") {
  const MahlerResult a = roots(IntPoly{-4, 0, 1});
  REQUIRE(a.roots.size() == 2);
  CHECK(has_root(a, 2.0));
  CHECK(has_root(a, -2.0));

  const MahlerResult b = roots(IntPoly{1, 0, 1});
  CHECK(has_root(b, {0, 1}));
  CHECK(has_root(b, {0, -1}));

  const MahlerResult z = roots(IntPoly{0, 0, 0, 1, 1});
  CHECK(std::count(z.roots.begin(), z.roots.end(), std::complex<double>(0)) == 3);
  CHECK(has_root(z, -1.0));
  CHECK_THROWS_AS(roots(IntPoly{3}), PreconditionError);
}

TEST_CASE("residual contract on random sextics") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 500; ++t) {
    const IntPoly f = testing::random_poly(rng, 6, 1000);
    const MahlerResult r = roots(f);
    REQUIRE(r.roots.size() == 6);
    double norm1 = 0;
    for (const Int& c : f.coeffs()) norm1 += std::fabs(c.to_double());
    for (std::size_t i = 0; i < r.roots.size(); ++i) {
      CHECK(r.residuals[i] <= r.residual_bound);
      CHECK(r.residuals[i] <= 1e-12 * norm1 * std::pow(std::max(1.0, std::abs(r.roots[i])), 6));
    }
    CHECK(r.measure >= std::fabs(f.lead().to_double()));
  }
}

TEST_CASE("mahler_measure exact values") {
  CHECK(mahler_measure(IntPoly{-4, 0, 1}) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(mahler_measure(IntPoly{-6, 3}) == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(mahler_measure(IntPoly{1, 1, 1}) == doctest::Approx(1.0).epsilon(1e-12));
  // (2x - 1)(x - 3)(x + 5): 2 * 1 * 3 * 5
  CHECK(mahler_measure(IntPoly{-1, 2} * IntPoly{-3, 1} * IntPoly{5, 1}) ==
        doctest::Approx(30.0).epsilon(1e-12));
  CHECK(mahler_measure(IntPoly{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}) == doctest::Approx(1.0).epsilon(1e-9));
  // A root of multiplicity k is only resolved to about eps^(1/k).
  CHECK(mahler_measure(IntPoly{1, -2, 1}) == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(mahler_measure(IntPoly{1, -2, 1} * IntPoly{1, -2, 1}) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("measure properties on random polynomials") {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 1000; ++t) {
    const int d = 1 + static_cast<int>(rng() % 10);
    const IntPoly f = testing::random_poly(rng, d, 1000);
    const double m = mahler_measure(f);
    for (const auto& c : height_measure_checks(f, m)) CHECK(c.holds(1e-9));

    std::vector<Int> neg = f.coeffs();
    for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
    CHECK(mahler_measure(IntPoly(neg)) == doctest::Approx(m).epsilon(1e-9));
    CHECK(mahler_measure(Int(-7) * f) == doctest::Approx(7 * m).epsilon(1e-9));
  }
}

TEST_CASE("check_inequalities: product law") {
  const InequalityReport r = check_inequalities(IntPoly{-4, 0, 1}, IntPoly{-2, 1}, IntPoly{2, 1}, Relation::Product);
  CHECK(r.mf == doctest::Approx(4.0));
  CHECK(r.mg * r.mh == doctest::Approx(4.0));
  CHECK(r.product_rel_error < 1e-12);
  // H = 4, d = 2: 4 / 4 = 1 <= 4 <= 4 sqrt(3)
  REQUIRE(r.height_measure.size() == 6);
  CHECK(r.height_measure[0].lhs == doctest::Approx(1.0));
  CHECK(r.height_measure[1].rhs == doctest::Approx(4.0 * std::sqrt(3.0)));
  for (const auto& c : r.height_measure) CHECK(c.holds());

  CHECK_THROWS_AS(check_inequalities(IntPoly{-4, 0, 1}, IntPoly{-2, 1}, IntPoly{3, 1}, Relation::Product),
                  PreconditionError);
}

TEST_CASE("check_inequalities: composition preconditions") {
  const IntPoly g{5, 2, 1};
  const IntPoly h{0, 1, 1};
  const InequalityReport r = check_inequalities(compose(g, h), g, h, Relation::Composition);
  REQUIRE(r.coefficient_bounds.size() == 2);
  for (const auto& c : r.coefficient_bounds) CHECK(c.holds());
  CHECK_THROWS_AS(check_inequalities(compose(g, IntPoly{1, 1, 1}), g, IntPoly{1, 1, 1}, Relation::Composition),
                  PreconditionError);
  CHECK_THROWS_AS(check_inequalities(IntPoly{5, 2, 3, 2, 2}, g, h, Relation::Composition), PreconditionError);
}

TEST_CASE("explicit constants: exhaustive coefficient_bounds check on monic quartics, H <= 10") {
  // Every decomposable monic quartic of height <= 10 through its witness.
  const ExplicitConstants k = explicit_constants(2, 2);
  CHECK(k.k1 == doctest::Approx(48.0));
  std::vector<Int> c(5, Int(-10));
  c[4] = 1;
  std::size_t checked = 0;
  while (true) {
    const IntPoly f(c);
    if (auto w = decompose_split(f, 2, 2)) {
      const double hf = height(f).to_double();
      CHECK(std::fabs(w->g.lead().to_double()) * std::pow(height(w->h).to_double(), 2) <= 48.0 * hf);
      CHECK(height(w->g).to_double() <= k.k2 * hf);
      ++checked;
    }
    std::size_t i = 0;
    while (i < 4 && c[i] == Int(10)) c[i++] = -10;
    if (i == 4) break;
    c[i] += 1;
  }
  CHECK(checked > 0);
}

TEST_CASE("explicit constants: sextic spot check for split (3,2)") {
  const ExplicitConstants k = explicit_constants(3, 2);
  CHECK(k.k1 == doctest::Approx(64.0 * std::pow(3.0, 1.5)));
  std::mt19937_64 rng(32);
  for (int t = 0; t < 5000; ++t) {
    const bool monic = t % 2 == 0;
    const IntPoly g = testing::random_outer(rng, 3, 1 + static_cast<long long>(rng() % 50), monic);
    const IntPoly h = testing::random_inner(rng, 2, 1 + static_cast<long long>(rng() % 8), monic);
    const IntPoly f = compose(g, h);
    const InequalityReport r = check_inequalities(f, g, h, Relation::Composition);
    for (const auto& c : r.coefficient_bounds) CHECK(c.holds());
  }
}
