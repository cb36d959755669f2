#include <doctest.h>

#include <cmath>
#include <random>

#include "ech/capacities.hpp"
#include "ech/packing.hpp"
#include "oracles.hpp"

using ech::Rational;

namespace {

Rational packing_by_compositions(const std::vector<Rational>& radii, std::uint64_t k) {
  std::vector<std::vector<Rational>> tables;
  for (const auto& r : radii) {
    std::vector<Rational> t;
    for (std::uint64_t i = 0; i < k; ++i) t.push_back(ech::oracle::ball_by_scan(i, r));
    tables.push_back(std::move(t));
  }
  return ech::oracle::max_over_compositions(tables, 0, static_cast<std::size_t>(k - 1));
}

}  // namespace

TEST_CASE("packing_lower_bound examples") {
  const std::vector<Rational> two{Rational(1), Rational(1)};
  CHECK(ech::packing_lower_bound(two, 5) == Rational(3));
  const std::vector<Rational> one{Rational(1)};
  CHECK(ech::packing_lower_bound(one, 1) == Rational(0));
  // k1 + k2 = 2: the split (1, 1) gives 1 + 2.
  const std::vector<Rational> mixed{Rational(1), Rational(2)};
  CHECK(ech::packing_lower_bound(mixed, 3) == Rational(3));
  CHECK_THROWS_AS((void)ech::packing_lower_bound(one, 0), std::invalid_argument);
}

TEST_CASE("packing_lower_bound agrees with compositions") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> radii;
    const int n = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < n; ++i) radii.push_back(ech::oracle::random_rational(rng, 3, 4));
    const auto bounds = ech::packing_lower_bounds(radii, 25);
    for (std::uint64_t k = 1; k <= 25; ++k) {
      REQUIRE(bounds[k - 1] == packing_by_compositions(radii, k));
      REQUIRE(ech::packing_lower_bound(radii, k) == bounds[k - 1]);
    }
  }
}

TEST_CASE("single radius reduces to the ball capacity") {
  const std::vector<Rational> r{Rational(5, 3)};
  for (std::uint64_t k = 1; k <= 2000; ++k) CHECK(ech::packing_lower_bound(r, k) == ech::ball_capacity(k - 1, Rational(5, 3)));
}

TEST_CASE("packing bound is monotone in k and in radii, and order-free") {
  const std::vector<Rational> small{Rational(1), Rational(1, 2), Rational(3, 4)};
  const std::vector<Rational> big{Rational(1), Rational(2, 3), Rational(3, 4)};
  const std::vector<Rational> shuffled{Rational(3, 4), Rational(1), Rational(1, 2)};
  const auto a = ech::packing_lower_bounds(small, 200);
  const auto b = ech::packing_lower_bounds(big, 200);
  CHECK(a == ech::packing_lower_bounds(shuffled, 200));
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] <= b[i]);
    if (i > 0) CHECK(a[i - 1] <= a[i]);
  }
}

TEST_CASE("volume floor") {
  ech::PackingProblem p;
  p.radii = {Rational(1)};
  p.depth = 1.0;
  p.epsilon = 0.01;
  p.target_contact_volume = 1.0;
  const auto floor = ech::packing_volume_floor(p);
  const double expected = 4.0 * ((1.0 - std::exp(-1.0)) / 2.0 - 0.01);
  CHECK(floor.floor == doctest::Approx(expected).epsilon(1e-14));
  CHECK(floor.floor == doctest::Approx(1.2242411176571153).epsilon(1e-14));
  CHECK(floor.ball_side == 2.0);
  CHECK(floor.consistent);

  p.target_contact_volume = 100.0;
  const auto too_small = ech::packing_volume_floor(p);
  CHECK_FALSE(too_small.consistent);
  CHECK(too_small.ball_side < too_small.floor);

  p.depth = 1e-9;
  p.target_contact_volume = 1.0;
  CHECK(ech::packing_volume_floor(p).floor == doctest::Approx(4.0 * (0.5e-9 - 0.25e-18 - 0.01)).epsilon(1e-12));
}

TEST_CASE("packing problem validation") {
  ech::PackingProblem p;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p.radii = {Rational(1)};
  p.epsilon = 0.1;
  CHECK_NOTHROW(p.validate());
  p.depth = 0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("asymptotic window for two unit balls") {
  const std::vector<Rational> two{Rational(1), Rational(1)};
  const auto report = ech::packing_asymptotic_check(two, 5000, 10'000);
  CHECK(report.ball_side == 4.0);
  CHECK(report.min_ratio <= report.ball_side);
  CHECK(std::abs(report.min_ratio - 4.0) / 4.0 <= 0.05);
  CHECK(report.argmin_k >= 5000);
  CHECK(report.argmin_k <= 10'000);
  CHECK(report.gap == doctest::Approx(report.ball_side - report.min_ratio));
}

TEST_CASE("asymptotic window for one ball matches the ball closed form") {
  const std::vector<Rational> one{Rational(1)};
  const auto report = ech::packing_asymptotic_check(one, 999'000, 1'000'405);
  CHECK(report.min_ratio == doctest::Approx(1413.0 * 1413.0 / 1'000'405.0).epsilon(1e-12));
  CHECK(report.argmin_k == 1'000'405);
  CHECK(report.ball_side == 2.0);
}

TEST_CASE("degenerate window k = 1 has ratio zero") {
  const std::vector<Rational> one{Rational(1)};
  const auto report = ech::packing_asymptotic_check(one, 1, 1);
  CHECK(report.min_ratio == 0.0);
  CHECK(report.argmin_k == 1);
}

TEST_CASE("budget is enforced rather than truncating") {
  const std::vector<Rational> many(8, Rational(1));
  CHECK_THROWS_AS((void)ech::packing_asymptotic_check(many, 10, 100'000), ech::ConvolutionBudgetError);
  CHECK_THROWS_AS((void)ech::packing_asymptotic_check(many, 10, 1000, 100.0), ech::ConvolutionBudgetError);
}
