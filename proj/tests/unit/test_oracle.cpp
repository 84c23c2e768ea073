#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "grasshopper/circle_lawns.hpp"
#include "grasshopper/errors.hpp"
#include "grasshopper/oracle.hpp"

using namespace grasshopper;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(ExhaustiveOrbit, OneQuarter) {
  const auto res = exhaustive_orbit_max(1, 4);
  EXPECT_EQ(res.max_retention, Scalar::ratio(3, 4));
  EXPECT_EQ(res.colourings, 16u);
  EXPECT_GE(res.attaining, 1u);
}

TEST(ExhaustiveOrbit, ThreeEighthsAttainedBySemi) {
  const auto res = exhaustive_orbit_max(3, 8);
  EXPECT_EQ(res.max_retention, Scalar::ratio(7, 8));
  EXPECT_EQ(orbit_colouring_retention(OrbitColouring::semi(3, 8)), Scalar::ratio(7, 8));
}

TEST(ExhaustiveOrbit, Half) {
  EXPECT_EQ(exhaustive_orbit_max(1, 2).max_retention, Scalar::ratio(1, 2));
}

TEST(ExhaustiveOrbit, BoundHoldsAndIsAttained) {
  for (long long q = 2; q <= 10; ++q) {
    for (long long p = 1; p < 2 * q; p += 2) {
      if (gcd_ll(p, q) != 1) continue;
      EXPECT_EQ(exhaustive_orbit_max(p, q).max_retention, orbit_bound(p, q)) << p << "/" << q;
    }
  }
}

TEST(ExhaustiveOrbit, RejectsBadInput) {
  EXPECT_THROW(exhaustive_orbit_max(2, 5), InvalidArgument);
  EXPECT_THROW(exhaustive_orbit_max(3, 9), InvalidArgument);
  EXPECT_THROW(exhaustive_orbit_max(1, 21), InvalidArgument);
}

TEST(OrbitColouring, BitsAreAntipodal) {
  const auto c = OrbitColouring::semi(5, 7);
  const auto bits = c.orbit_bits();
  ASSERT_EQ(bits.size(), 14u);
  for (std::size_t k = 0; k < 7; ++k) EXPECT_NE(bits[k], bits[k + 7]);
  EXPECT_TRUE(is_antipodal(c.lawn()));
  EXPECT_EQ(measure(c.lawn()), Angle::pi_times(1));
}

TEST(DirectionSweep, WholeSphere) {
  EXPECT_EQ(direction_sweep_fraction(SpherePoint(0.3, 0.2), 1.0, [](const SpherePoint&) { return true; },
                                     1000),
            1.0);
}

TEST(DirectionSweep, SouthernHemisphereFromEquator) {
  const double f = direction_sweep_fraction(SpherePoint(0.3, 0.0), 1.0,
                                            [](const SpherePoint& x) { return x.delta() < 0; }, 100000);
  EXPECT_NEAR(f, 0.5, 1e-12);
}

TEST(DirectionSweep, ConvergesWithGrid) {
  const SpherePoint from(0.0, 0.3);
  const auto south = [](const SpherePoint& x) { return x.delta() < 0; };
  const double exact = (kPi - 2 * std::asin(std::tan(0.3) / std::tan(1.0))) / (2 * kPi);
  double prev = 1;
  for (std::uint64_t n : {1000u, 10000u, 100000u}) {
    const double err = std::abs(direction_sweep_fraction(from, 1.0, south, n) - exact);
    EXPECT_LE(err, 1.0 / static_cast<double>(n));
    EXPECT_LE(err, prev);
    prev = err;
  }
  EXPECT_THROW(direction_sweep_fraction(from, 1.0, south, 999), InvalidArgument);
}
