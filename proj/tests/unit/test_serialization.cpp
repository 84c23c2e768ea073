#include <gtest/gtest.h>

#include <cstring>
#include <random>

#include "grasshopper/circle_lawns.hpp"
#include "grasshopper/errors.hpp"
#include "grasshopper/serialization.hpp"
#include "grasshopper/sphere_lawns.hpp"
#include "oracles.hpp"

using namespace grasshopper;

namespace {

bool bit_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

void expect_identical(const ArcSet& a, const ArcSet& b) {
  ASSERT_EQ(a.arcs().size(), b.arcs().size());
  for (std::size_t i = 0; i < a.arcs().size(); ++i) {
    const Arc& x = a.arcs()[i];
    const Arc& y = b.arcs()[i];
    ASSERT_EQ(x.start.is_exact(), y.start.is_exact());
    if (x.start.is_exact()) {
      EXPECT_EQ(x.start, y.start);
      EXPECT_EQ(x.end, y.end);
    } else {
      EXPECT_TRUE(bit_equal(x.start.radians(), y.start.radians()));
      EXPECT_TRUE(bit_equal(x.end.radians(), y.end.radians()));
    }
  }
}

}  // namespace

TEST(ArcSetJson, ExactRoundTrip) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const ArcSet s = oracle_test::random_rational_arcs(rng, 6, 97);
    expect_identical(arc_set_from_json(arc_set_to_json(s)), s);
  }
  expect_identical(arc_set_from_json(arc_set_to_json(ArcSet())), ArcSet());
  expect_identical(arc_set_from_json(arc_set_to_json(ArcSet::full())), ArcSet::full());
}

TEST(ArcSetJson, FloatRoundTripIsBitExact) {
  const ArcSet s = construct_irrational(2.0, 1.2, 0.01);
  expect_identical(arc_set_from_json(arc_set_to_json(s)), s);
}

TEST(ArcSetJson, HugeIntegers) {
  const Rational big(BigInt("123456789012345678901234567"), BigInt("1000000000000000000000000000"));
  const ArcSet s = ArcSet::normalize({{Angle::pi_times(Rational(0)), Angle::pi_times(big)}});
  const std::string text = arc_set_to_json(s);
  EXPECT_NE(text.find("\"123456789012345678901234567\""), std::string::npos);
  expect_identical(arc_set_from_json(text), s);
}

TEST(ArcSetJson, RejectsMalformed) {
  EXPECT_THROW(arc_set_from_json("not json"), InvalidArgument);
  EXPECT_THROW(arc_set_from_json(R"({"arcs":[{"kind":"rational"}]})"), InvalidArgument);
  EXPECT_THROW(arc_set_from_json(
                   R"({"arcs":[{"kind":"rational","start":{"num":1,"den":2},"end":{"num":1,"den":4}}]})"),
               InvalidArgument);
  EXPECT_THROW(arc_set_from_json(
                   R"({"arcs":[{"kind":"rational","start":{"num":0,"den":1},"end":{"num":1,"den":2}},
                               {"kind":"rational","start":{"num":1,"den":2},"end":{"num":1,"den":1}}]})"),
               InvalidArgument);
}

TEST(CoggedLawnJson, RoundTrip) {
  for (const auto& lawn :
       {construct_peven(2, 5, 0.05), construct_podd(3, 7, 0.02), construct_irrational(1.2, 0.04)}) {
    const auto back = cogged_lawn_from_json(cogged_lawn_to_json(lawn));
    EXPECT_EQ(back.lawn_case(), lawn.lawn_case());
    EXPECT_TRUE(bit_equal(back.phi(), lawn.phi()));
    EXPECT_TRUE(bit_equal(back.radius(), lawn.radius()));
    EXPECT_EQ(back.p, lawn.p);
    EXPECT_EQ(back.q, lawn.q);
    EXPECT_EQ(back.n, lawn.n);
    ASSERT_EQ(back.caps().size(), lawn.caps().size());
    for (std::size_t i = 0; i < lawn.caps().size(); ++i) {
      EXPECT_TRUE(bit_equal(back.caps()[i].center_theta, lawn.caps()[i].center_theta));
      EXPECT_TRUE(bit_equal(back.caps()[i].scale_s, lawn.caps()[i].scale_s));
      EXPECT_TRUE(bit_equal(back.cups()[i].center_theta, lawn.cups()[i].center_theta));
    }
    EXPECT_EQ(back.adjacency(), lawn.adjacency());
  }
}

TEST(CoggedLawnJson, RevalidatesOnRead) {
  std::string text = cogged_lawn_to_json(construct_peven(2, 5, 0.05));
  const auto pos = text.find("0.05");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 4, "0.9");
  EXPECT_THROW(cogged_lawn_from_json(text), Error);
}

TEST(FormatDouble, ShortestRoundTrip) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double x = d(rng);
    EXPECT_TRUE(bit_equal(std::stod(format_double(x)), x));
  }
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_scalar(Scalar::ratio(6, 8)), "3/4");
  EXPECT_EQ(format_scalar(Scalar(2)), "2");
}

TEST(Csv, CircleRows) {
  const std::string header = circle_csv_header();
  EXPECT_EQ(header.rfind(kCircleCsvVersion, 0), 0u);
  const CircleRow exact{RationalAngle::from_reduced(3, 8), "semi", Scalar::ratio(7, 8), Scalar::ratio(7, 8),
                        true};
  EXPECT_EQ(circle_csv_row(exact), "3,8,semi,7,8,7/8,1\n");
  const CircleRow flt{RationalAngle::from_radians(0.5), "irrational", Scalar::from_double(0.25), Scalar(1),
                      false};
  EXPECT_EQ(circle_csv_row(flt), ",0.5,irrational,0.25,,1,0\n");
}

TEST(Csv, SphereRows) {
  EXPECT_EQ(sphere_csv_header().rfind(kSphereCsvVersion, 0), 0u);
  SphereRow row;
  row.lawn_case = LawnCase::peven;
  row.p = 2;
  row.q_or_n = 5;
  row.phi = 1.25;
  row.r = 0.5;
  row.seed = 7;
  EXPECT_EQ(sphere_csv_row(row), "peven,2,5,1.25,0.5,0,0,0,0,,,7\n");
  row.mc_retention = 0.75;
  row.mc_std_error = 0.125;
  EXPECT_EQ(sphere_csv_row(row), "peven,2,5,1.25,0.5,0,0,0,0,0.75,0.125,7\n");
}
