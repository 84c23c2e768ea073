#include <gtest/gtest.h>

#include "grasshopper/arc_set.hpp"
#include "grasshopper/circle_lawns.hpp"
#include "grasshopper/errors.hpp"
#include "properties.hpp"

using namespace grasshopper;

namespace {

Angle pi(long long num, long long den = 1) { return Angle::pi_times(Rational(num, den)); }
Angle rad(double x) { return Angle::from_radians(x); }

}  // namespace

TEST(ArcSet, OverlappingUnion) {
  const ArcSet s = ArcSet::normalize({{rad(0.0), rad(1.0)}, {rad(0.5), rad(2.0)}});
  ASSERT_EQ(s.arcs().size(), 1u);
  EXPECT_DOUBLE_EQ(s.arcs()[0].start.radians(), 0.0);
  EXPECT_DOUBLE_EQ(s.arcs()[0].end.radians(), 2.0);
  EXPECT_DOUBLE_EQ(s.measure().radians(), 2.0);
}

TEST(ArcSet, WrappingArc) {
  const ArcSet s = ArcSet::normalize({{pi(3, 2), pi(1, 2)}});
  ASSERT_EQ(s.arcs().size(), 1u);
  EXPECT_EQ(s.arcs()[0].start, pi(3, 2));
  EXPECT_EQ(s.arcs()[0].end, pi(5, 2));
  EXPECT_EQ(s.measure(), pi(1));
  EXPECT_TRUE(s.contains(pi(0)));
  EXPECT_TRUE(s.contains(pi(7, 4)));
  EXPECT_FALSE(s.contains(pi(1, 2)));
}

TEST(ArcSet, EmptyAndFull) {
  EXPECT_TRUE(ArcSet::normalize({}).empty());
  EXPECT_EQ(ArcSet().measure(), pi(0));
  EXPECT_EQ(ArcSet::full().measure(), pi(2));
  EXPECT_TRUE(ArcSet::normalize({{pi(1, 3), pi(1, 3)}}).empty());
  EXPECT_TRUE(ArcSet::normalize({{pi(1, 3), pi(7, 3)}}).is_full());
  EXPECT_TRUE(ArcSet::normalize({{pi(0), pi(1)}, {pi(1), pi(2)}}).is_full());
}

TEST(ArcSet, TouchingArcsMerge) {
  const ArcSet s = ArcSet::normalize({{pi(0), pi(1, 2)}, {pi(1, 2), pi(1)}});
  ASSERT_EQ(s.arcs().size(), 1u);
  EXPECT_EQ(s.arcs()[0].end, pi(1));
}

TEST(ArcSet, PiecesThroughZeroFuse) {
  const ArcSet s = ArcSet::normalize({{pi(0), pi(1, 4)}, {pi(7, 4), pi(2)}});
  ASSERT_EQ(s.arcs().size(), 1u);
  EXPECT_EQ(s.arcs()[0].start, pi(7, 4));
  EXPECT_EQ(s.arcs()[0].end, pi(9, 4));
}

TEST(ArcSet, MeasureOfHalfCircleLawn) {
  EXPECT_EQ(construct_antipodal_even(5).measure(), pi(1));
}

TEST(ArcSet, ComplementOfSemicircle) {
  const ArcSet s = ArcSet::normalize({{pi(0), pi(1)}});
  EXPECT_EQ(complement(s), ArcSet::normalize({{pi(1), pi(2)}}));
}

TEST(ArcSet, RotationInvarianceOfHalfCircleLawn) {
  const ArcSet s = construct_antipodal_even(5);
  EXPECT_EQ(rotate(s, pi(2, 5)), s);
  EXPECT_NE(rotate(s, pi(1, 5)), s);
}

TEST(ArcSet, IntersectWithComplementIsEmpty) {
  const ArcSet s = construct_antipodal_even(7);
  EXPECT_TRUE(intersect(s, complement(s)).empty());
}

TEST(ArcSet, MixedKindsCoerceToFloat) {
  const ArcSet s = unite(ArcSet::normalize({{pi(0), pi(1)}}), ArcSet::normalize({{rad(4.0), rad(5.0)}}));
  EXPECT_FALSE(s.is_exact());
  EXPECT_NEAR(s.measure().radians(), 3.14159265358979 + 1.0, 1e-12);
}

TEST(ArcSet, FromCanonicalRejectsNonCanonical) {
  EXPECT_THROW(ArcSet::from_canonical({{pi(1), pi(1, 2)}}), InvalidArgument);
  EXPECT_THROW(ArcSet::from_canonical({{pi(0), pi(1)}, {pi(1), pi(3, 2)}}), InvalidArgument);
  EXPECT_THROW(ArcSet::from_canonical({{pi(3, 2), pi(5, 2)}, {pi(1, 4), pi(1, 3)}}), InvalidArgument);
  const ArcSet s = construct_antipodal_even(3);
  EXPECT_EQ(ArcSet::from_canonical(s.arcs()), s);
}

TEST(ArcSet, LargeDenominatorsStayExact) {
  const long long d = 999983;
  const ArcSet a = ArcSet::normalize({{pi(1, d), pi(5, 7)}});
  const ArcSet b = ArcSet::normalize({{pi(2, 3), pi(d - 1, d)}});
  const ArcSet u = unite(a, b);
  ASSERT_TRUE(u.is_exact());
  EXPECT_EQ(u.measure(), pi(d - 1, d) - pi(1, d));
}

TEST(ArcSetProperties, RandomAlgebra) {
  const auto failures = oracle_test::arc_set_properties(20240611, 1000);
  for (const auto& f : failures) ADD_FAILURE() << f;
  EXPECT_TRUE(failures.empty());
}
