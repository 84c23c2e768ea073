#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "grasshopper/angle.hpp"
#include "grasshopper/errors.hpp"
#include "grasshopper/scalar.hpp"

using namespace grasshopper;

TEST(Scalar, ExactArithmeticStaysExact) {
  const Scalar a = Scalar::ratio(1, 3);
  const Scalar b = Scalar::ratio(1, 6);
  const Scalar c = a + b;
  ASSERT_TRUE(c.is_exact());
  EXPECT_EQ(c, Scalar::ratio(1, 2));
  EXPECT_EQ(a * b, Scalar::ratio(1, 18));
  EXPECT_EQ(a / b, Scalar(2));
  EXPECT_EQ(-(a - b), Scalar::ratio(-1, 6));
}

TEST(Scalar, MixedArithmeticFallsBackToDouble) {
  const Scalar c = Scalar::ratio(1, 2) + Scalar::from_double(0.25);
  EXPECT_FALSE(c.is_exact());
  EXPECT_DOUBLE_EQ(c.to_double(), 0.75);
  EXPECT_THROW((void)c.exact(), InvalidArgument);
  EXPECT_TRUE(approx_equal(c, Scalar::ratio(3, 4)));
}

TEST(Scalar, DivisionByZeroThrows) {
  EXPECT_THROW((void)(Scalar(1) / Scalar(0)), InvalidArgument);
}

TEST(Scalar, FloorOfRational) {
  EXPECT_EQ(floor(Rational(7, 2)), BigInt(3));
  EXPECT_EQ(floor(Rational(-7, 2)), BigInt(-4));
  EXPECT_EQ(floor(Rational(4)), BigInt(4));
}

TEST(Angle, ExactWrapping) {
  const Angle a = Angle::pi_times(Rational(7, 3));
  EXPECT_EQ(a.wrapped(), Angle::pi_times(Rational(1, 3)));
  EXPECT_EQ(Angle::pi_times(Rational(-1, 2)).wrapped(), Angle::pi_times(Rational(3, 2)));
  EXPECT_EQ(Angle::full_turn().wrapped(), Angle());
}

TEST(Angle, FloatWrappingStaysInRange) {
  const Angle a = Angle::from_radians(-1e-18).wrapped();
  EXPECT_GE(a.radians(), 0.0);
  EXPECT_LT(a.radians(), 2.0 * std::numbers::pi);
  EXPECT_NEAR(Angle::from_radians(7.0).wrapped().radians(), 7.0 - 2.0 * std::numbers::pi, 1e-15);
}

TEST(Angle, RatioOfExactAnglesIsExact) {
  const Scalar k = Angle::pi_times(Rational(2, 3)) / Angle::pi_times(Rational(1, 6));
  ASSERT_TRUE(k.is_exact());
  EXPECT_EQ(k, Scalar(4));
}

TEST(Angle, MixedComparisonUsesRadians) {
  EXPECT_LT(Angle::from_radians(3.0), Angle::pi_times(Rational(1)));
  EXPECT_TRUE(approx_equal(Angle::from_radians(std::numbers::pi), Angle::pi_times(Rational(1))));
}

TEST(RationalAngle, RejectsUnreducedFractions) {
  EXPECT_THROW(RationalAngle::from_reduced(2, 4), InvalidArgument);
  EXPECT_THROW(RationalAngle::from_reduced(1, 0), InvalidArgument);
  EXPECT_THROW(RationalAngle::from_reduced(1, -3), InvalidArgument);
}

TEST(RationalAngle, CanonicalRange) {
  const RationalAngle a = RationalAngle::from_reduced(7, 3);
  EXPECT_EQ(a.numerator(), BigInt(1));
  EXPECT_EQ(a.denominator(), BigInt(3));
  const RationalAngle b = RationalAngle::from_reduced(-1, 4);
  EXPECT_EQ(b.numerator(), BigInt(7));
  EXPECT_EQ(b.denominator(), BigInt(4));
}

TEST(RationalAngle, FloatKind) {
  const RationalAngle a = RationalAngle::from_radians(1.2);
  EXPECT_FALSE(a.is_exact());
  EXPECT_DOUBLE_EQ(a.radians(), 1.2);
}
