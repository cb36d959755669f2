#include <doctest.h>

#include <random>

#include "ech/obstruction.hpp"
#include "oracles.hpp"

using ech::DomainSpec;
using ech::Rational;

TEST_CASE("ball into larger ball has no obstruction") {
  const auto report = ech::check_embedding(DomainSpec::ball(Rational(1)), DomainSpec::ball(Rational(2)), 1000);
  CHECK(report.k_max_checked == 1000);
  CHECK_FALSE(report.violation.has_value());
  CHECK(report.volume_precheck_passed());
}

TEST_CASE("two balls of radius 1.1 do not fit in a ball of radius 2") {
  const auto report = ech::check_embedding(ech::parse_domain("union:(ball:1.1;ball:1.1)"),
                                           DomainSpec::ball(Rational(2)));
  REQUIRE(report.violation.has_value());
  CHECK(report.violation->index == 2);
  CHECK(report.violation->from_value == Rational(11, 5));
  CHECK(report.violation->into_value == Rational(2));
  // Volume alone does not rule this one out.
  CHECK(report.from_volume == Rational(121, 100));
  CHECK(report.into_volume == Rational(2));
  CHECK(report.volume_precheck_passed());
}

TEST_CASE("larger into smaller ball fails at the first index") {
  const auto report = ech::check_embedding(DomainSpec::ball(Rational(3)), DomainSpec::ball(Rational(2)), 50);
  REQUIRE(report.violation.has_value());
  CHECK(report.violation->index == 1);
  CHECK_FALSE(report.volume_precheck_passed());
}

TEST_CASE("reflexivity, scaling coherence and transitivity") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = DomainSpec::ellipsoid(ech::oracle::random_rational(rng, 4, 5), ech::oracle::random_rational(rng, 4, 5));
    const auto y = DomainSpec::ellipsoid(ech::oracle::random_rational(rng, 4, 5), ech::oracle::random_rational(rng, 4, 5));
    const auto z = DomainSpec::ball(ech::oracle::random_rational(rng, 6, 5));
    const Rational s = ech::oracle::random_rational(rng, 3, 4);

    CHECK_FALSE(ech::check_embedding(x, x, 500).violation.has_value());

    const auto xy = ech::check_embedding(x, y, 500);
    const auto sxy = ech::check_embedding(DomainSpec::scale(s, x), DomainSpec::scale(s, y), 500);
    CHECK(xy.violation.has_value() == sxy.violation.has_value());
    if (xy.violation) CHECK(xy.violation->index == sxy.violation->index);

    const auto yz = ech::check_embedding(y, z, 500);
    if (!xy.violation && !yz.violation) CHECK_FALSE(ech::check_embedding(x, z, 500).violation.has_value());
  }
}

TEST_CASE("volume gap is detected by some index") {
  // vol(from) > vol(into) forces a violation eventually.
  const auto report = ech::check_embedding(DomainSpec::ellipsoid(Rational(1), Rational(3)),
                                           DomainSpec::ball(Rational(3, 2)), 10'000);
  CHECK_FALSE(report.volume_precheck_passed());
  CHECK(report.violation.has_value());
}
