#include <doctest.h>

#include <cmath>

#include "polycensus/asymptotics.hpp"

using namespace polycensus;

TEST_CASE("spf") {
  CHECK(spf(4) == 2);
  CHECK(spf(9) == 3);
  CHECK(spf(15) == 3);
  CHECK(spf(13) == 13);
  for (int d = 2; d <= 200; ++d) {
    const int p = spf(d);
    CHECK(d % p == 0);
    CHECK(spf(p) == p);
  }
}

TEST_CASE("predicted_growth for totals") {
  CHECK(predicted_growth(4, true, Variant::Total) == Prediction{Rat(2), true, PredictionKind::TwoSided});
  CHECK(predicted_growth(9, true, Variant::Total) == Prediction{Rat(3), false, PredictionKind::TwoSided});
  CHECK(predicted_growth(6, false, Variant::Total) == Prediction{Rat(4), false, PredictionKind::TwoSided});
  CHECK(predicted_growth(7, true, Variant::Total).kind == PredictionKind::Vanishing);
}

TEST_CASE("predicted_growth per split") {
  // m = n = 2
  CHECK(predicted_growth(4, true, Variant::Split, 2, 2) == Prediction{Rat(2), true, PredictionKind::TwoSided});
  // m(m-1) = 2 <= 2(n-2) = 2 at (2,3): exponent 3/2 + 2/2
  CHECK(predicted_growth(6, true, Variant::Split, 2, 3) ==
        Prediction{Rat(Int(5), Int(2)), false, PredictionKind::UpperOnly});
  CHECK(predicted_growth(6, true, Variant::Split, 3, 2) == Prediction{Rat(3), false, PredictionKind::TwoSided});
  // m(m-1) = 6 = 2(n-1) at (3,4)
  CHECK(predicted_growth(12, true, Variant::Split, 3, 4) == Prediction{Rat(3), true, PredictionKind::UpperOnly});
  // non-monic: m(m+1) = 6 = 2n at (2,3)
  CHECK(predicted_growth(6, false, Variant::Split, 2, 3) == Prediction{Rat(3), true, PredictionKind::UpperOnly});
  // non-monic: m(m+1) = 6 <= 2(n-1) at (2,4): 3/2 + 4/2
  CHECK(predicted_growth(8, false, Variant::Split, 2, 4) ==
        Prediction{Rat(Int(7), Int(2)), false, PredictionKind::UpperOnly});
  CHECK(predicted_growth(8, false, Variant::Split, 4, 2) == Prediction{Rat(5), false, PredictionKind::TwoSided});
  CHECK_THROWS_AS(predicted_growth(8, true, Variant::Split, 3, 3), PreconditionError);
}

TEST_CASE("monic total prediction is the dominant two-sided split") {
  for (int d = 4; d <= 64; ++d) {
    if (spf(d) == d) continue;
    const Prediction total = predicted_growth(d, true, Variant::Total);
    const int ell = spf(d);
    CHECK(predicted_growth(d, true, Variant::Split, d / ell, ell) == total);
    for (const auto& [m, n] : splits_of(d)) {
      const Prediction p = predicted_growth(d, true, Variant::Split, m, n);
      CHECK(p.exponent_value() <= total.exponent_value());
      if (p.kind == PredictionKind::TwoSided && p.exponent_value() == total.exponent_value()) {
        CHECK(m == d / ell);
      }
    }
  }
}

TEST_CASE("fit_growth recovers synthetic exponents") {
  std::vector<std::pair<double, double>> pure;
  std::vector<std::pair<double, double>> logged;
  for (double H : {50.0, 100.0, 200.0, 400.0, 800.0}) {
    pure.emplace_back(H, 7 * H * H * H);
    logged.emplace_back(H, 5 * H * H * std::log(H));
  }
  const GrowthFit a = fit_growth(pure);
  CHECK(a.exponent == doctest::Approx(3.0).epsilon(1e-6));
  CHECK(a.constant == doctest::Approx(7.0).epsilon(1e-6));
  CHECK_FALSE(a.log_model_preferred);
  CHECK(a.points_used == 5);

  const GrowthFit b = fit_growth(logged);
  CHECK(b.log_model_preferred);
  CHECK(std::fabs(b.exponent - 2.0) < 1e-3);
  CHECK(b.power_exponent > 2.0);
}

TEST_CASE("fit_growth input handling") {
  // Only three points: power model, log detection inconclusive.
  const GrowthFit three = fit_growth({{10, 1000}, {20, 8000}, {40, 64000}});
  CHECK_FALSE(three.log_conclusive);
  CHECK_FALSE(three.log_model_preferred);
  CHECK(three.exponent == doctest::Approx(3.0));
  // Points below the count threshold are dropped.
  CHECK_THROWS_AS(fit_growth({{10, 10}, {20, 8000}, {40, 64000}}), PreconditionError);
  CHECK_THROWS_AS(fit_growth({{10, 100}, {10, 200}, {10, 300}}), PreconditionError);
  CHECK_THROWS_AS(fit_growth({{20, 100}, {10, 200}, {40, 300}}), PreconditionError);
}

TEST_CASE("remainder vanishes when d is the square of a prime") {
  for (int d : {4, 9}) {
    const RemainderReport r = remainder_report(d, true, {Int(2), Int(4), Int(8)}, 1);
    for (const auto& row : r.rows) {
      CHECK(row.remainder == Int(0));
      CHECK(row.total.sign() > 0);
    }
    CHECK_FALSE(r.fit.has_value());
  }
}

TEST_CASE("remainder predictions") {
  CHECK(predicted_remainder(6, true).exponent == Rat(Int(5), Int(2)));
  CHECK(predicted_remainder(8, true).exponent == Rat(3));
  CHECK(predicted_remainder(8, false).exponent == Rat(4));
  CHECK(predicted_remainder(6, false) == Prediction{Rat(3), true, PredictionKind::UpperOnly});
}

TEST_CASE("remainder report for d=6 stays below its predicted exponent") {
  const RemainderReport r = remainder_report(6, true, {Int(10), Int(20), Int(40), Int(80)}, 2);
  REQUIRE(r.fit.has_value());
  CHECK(r.fit->exponent <= 2.5 + 0.3);
}
