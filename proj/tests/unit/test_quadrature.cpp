#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "grasshopper/br_table.hpp"
#include "grasshopper/errors.hpp"
#include "grasshopper/quadrature.hpp"
#include "grasshopper/sphere_lawns.hpp"

using namespace grasshopper;

namespace {

constexpr double kPi = std::numbers::pi;

double region_area(double r, double s) {
  // Area of {|u| <= r, 0 <= v <= s acos(cos r / cos u)} with element cos v,
  // by a fine composite midpoint rule in u.
  const int n = 200000;
  double total = 0;
  for (int i = 0; i < n; ++i) {
    const double u = -r + (i + 0.5) * 2 * r / n;
    total += std::sin(s * std::acos(std::min(1.0, std::cos(r) / std::cos(u))));
  }
  return total * 2 * r / n;
}

}  // namespace

TEST(GaussLegendre, ExactOnPolynomials) {
  for (int n : {1, 2, 5, 8, 16, 64, 256}) {
    const auto& g = gauss_legendre(n);
    ASSERT_EQ(g.nodes.size(), static_cast<std::size_t>(n));
    for (int k = 0; k <= 2 * n - 1 && k <= 40; ++k) {
      double sum = 0;
      for (int i = 0; i < n; ++i) sum += g.weights[i] * std::pow(g.nodes[i], k);
      EXPECT_NEAR(sum, k % 2 ? 0.0 : 2.0 / (k + 1), 1e-13) << n << " " << k;
    }
  }
  EXPECT_THROW(gauss_legendre(0), InvalidArgument);
}

TEST(Quadrature, RegionArea) {
  for (double s : {1.0, 0.4}) {
    const auto res = integrate_cap_region(0.1, s, [](double, double) { return 1.0; });
    EXPECT_NEAR(res.value, region_area(0.1, s), 1e-8);
  }
  EXPECT_EQ(integrate_cap_region(0.1, 0.0, [](double, double) { return 1.0; }).value, 0.0);
}

TEST(Quadrature, FailsLoudly) {
  QuadratureOptions opts;
  opts.rel_tol = 1e-30;
  opts.max_order = 16;
  EXPECT_THROW(integrate_cap_region(0.1, 1.0, [](double u, double) { return std::exp(u * 50); }, opts),
               NumericError);
}

TEST(BrTable, LeadingOrder) {
  // Leading term of a unit-scale pair integral: (4/3) r^3 csc(phi).
  for (double phi : {kPi / 3, 1.2}) {
    double prev = 1;
    for (double r : {4e-3, 2e-3, 1e-3}) {
      const double aa = br_pair(phi, r, 1.0, 1.0).value;
      const double w = 4.0 / 3.0 * r * r * r / std::sin(phi);
      const double dev = std::abs(aa / w - 1);
      EXPECT_LT(dev, 0.05);
      EXPECT_LT(dev, prev);
      prev = dev;
    }
  }
}

TEST(BrTable, NorthMinusSouthTracksCosPhi) {
  for (double phi : {kPi / 3, 1.2, 6 * kPi / 13}) {
    double prev = 1;
    for (double r : {4e-3, 2e-3, 1e-3}) {
      const double aa = br_pair(phi, r, 1.0, 1.0).value;
      const double ns = br_north_minus_south(phi, r, 1.0).value;
      const double defect = std::abs(ns / (2 * aa) - std::cos(phi));
      EXPECT_LT(defect, 1e-5);
      EXPECT_LT(defect, prev);
      prev = defect;
    }
  }
}

TEST(BrTable, ScalesMultiply) {
  const double phi = 1.0, r = 2e-3;
  const double base = br_pair(phi, r, 1.0, 1.0).value;
  for (double s : {0.3, 0.7}) {
    for (double t : {0.5, 0.9}) {
      EXPECT_NEAR(br_pair(phi, r, s, t).value / base, s * t, 5e-3 * s * t);
    }
  }
}

TEST(LlMinusSs, PevenIsPositive) {
  const auto lawn = construct_peven(6, 13, 2e-3);
  const auto c = ll_minus_ss(lawn);
  const double phi = lawn.phi();
  const double aa = br_pair(phi, 2e-3, 1.0, 1.0).value;
  const double lead = 4 * 13 * aa * (1 - std::cos(phi));
  EXPECT_GT(c.value.value, 0.0);
  EXPECT_NEAR(c.value.value / lead, 1.0, 0.25);
  EXPECT_NEAR(c.retention_gain.value, c.value.value / (4 * kPi * kPi), 1e-18);
  EXPECT_LT(c.value.error, c.value.value);
}

TEST(LlMinusSs, PoddIsPositive) {
  const auto lawn = construct_podd(3, 7, 2e-3);
  const auto c = ll_minus_ss(lawn);
  const double phi = lawn.phi();
  const double aa = br_pair(phi, 2e-3, 1.0, 1.0).value;
  const double lead = 2 * 7 * aa * (std::cos(kPi / 7) - std::cos(phi));
  EXPECT_GT(c.value.value, 0.0);
  EXPECT_NEAR(c.value.value / lead, 1.0, 0.25);
}

TEST(LlMinusSs, IrrationalIsPositive) {
  const auto lawn = construct_irrational(1.2, 2e-3);
  EXPECT_GT(ll_minus_ss(lawn).value.value, 0.0);
}

TEST(LlMinusSs, TableMatchesPairs) {
  const auto lawn = construct_peven(2, 5, 3e-3);
  const auto t = br_quadrature(lawn);
  ASSERT_EQ(t.aa_pairs.size(), lawn.adjacency().size());
  ASSERT_EQ(t.an_minus_as.size(), lawn.caps().size());
  const double pair = br_pair(lawn.phi(), 3e-3, 1, 1).value;
  for (const auto& e : t.aa_pairs) EXPECT_NEAR(e.value, 2 * pair, 1e-15);
  EXPECT_NEAR(t.aa_total.value, 10 * pair, 1e-14);
}

TEST(LlMinusSs, HemisphereRejected) {
  EXPECT_THROW(ll_minus_ss(CoggedLawn::hemisphere(1.0)), InvalidArgument);
}
