#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "grasshopper/br_table.hpp"
#include "grasshopper/errors.hpp"
#include "grasshopper/monte_carlo.hpp"
#include "grasshopper/sphere_lawns.hpp"

using namespace grasshopper;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(MonteCarlo, HemisphereMatchesClosedForm) {
  for (double phi : {kPi / 4, kPi / 3}) {
    const auto est = retention_mc(CoggedLawn::hemisphere(phi), phi, 10'000'000, 42);
    EXPECT_EQ(est.samples, 10'000'000u);
    EXPECT_NEAR(est.retention, 1 - phi / kPi, 4 * est.std_error) << phi;
  }
}

TEST(MonteCarlo, FullSphereRetainsEverything) {
  const auto est = retention_mc([](const SpherePoint&) { return true; }, 1.0, 100000, 7);
  EXPECT_EQ(est.retention, 1.0);
  EXPECT_EQ(est.std_error, 0.0);
}

TEST(MonteCarlo, DeterministicAcrossThreadCounts) {
  const auto lawn = construct_peven(2, 5, 0.05);
  const auto a = retention_mc(lawn, lawn.phi(), 300000, 9, 1);
  const auto b = retention_mc(lawn, lawn.phi(), 300000, 9, 4);
  const auto c = retention_mc(lawn, lawn.phi(), 300000, 9, 0);
  EXPECT_EQ(a.retention, b.retention);
  EXPECT_EQ(a.retention, c.retention);
  EXPECT_NE(a.retention, retention_mc(lawn, lawn.phi(), 300000, 10, 1).retention);
}

TEST(MonteCarlo, RejectsEmptyRequestsAndLawns) {
  EXPECT_THROW(retention_mc(CoggedLawn::hemisphere(1.0), 1.0, 0, 1), InvalidArgument);
  EXPECT_THROW(retention_mc([](const SpherePoint&) { return false; }, 1.0, 10, 1), NumericError);
}

TEST(MonteCarlo, CoggedGainCompatibleWithQuadrature) {
  const auto lawn = construct_peven(2, 5, 0.05);
  const double phi = lawn.phi();
  const auto est = retention_mc(lawn, phi, 10'000'000, 11);
  const double predicted = 1 - phi / kPi + ll_minus_ss(lawn).retention_gain.value;
  EXPECT_NEAR(est.retention, predicted, 4 * est.std_error);
}
