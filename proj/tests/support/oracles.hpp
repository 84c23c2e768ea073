#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "grasshopper/arc_set.hpp"
#include "grasshopper/scalar.hpp"
#include "grasshopper/sphere_geom.hpp"

namespace grasshopper::oracle_test {

/// Great-circle distance by the haversine formula.
double haversine(double theta1, double delta1, double theta2, double delta2);

/// Initial bearing by the navigation formula, converted to the library's
/// convention (counter-clockwise from east).
double nav_bearing(double theta1, double delta1, double theta2, double delta2);

/// Exact retention of an arc set whose endpoints and jump are multiples of
/// pi/n: the circle is cut into 2n cells and the jump is an integer shift.
/// Throws std::domain_error if an endpoint is off the grid.
Rational grid_retention(const ArcSet& lawn, const Rational& jump_over_pi);
Rational grid_retention_two(const ArcSet& from, const ArcSet& to, const Rational& jump_over_pi);

/// Smallest error |x - p/q| over p even, q odd, q <= max_q with
/// |x - p/q| <= 1/q^2, by plain enumeration of every (p, q).
struct BruteApprox {
  long long p = 0;
  long long q = 0;
  double error = 0.0;
};
BruteApprox brute_even_odd(double x, long long max_q);

/// Smallest |x - p/q| over all p for every q <= max_q: the best
/// approximations, by enumeration.
std::vector<BruteApprox> brute_best_approximations(double x, long long max_q);

/// Random exact arc set with endpoints on the grid pi/den.
ArcSet random_rational_arcs(std::mt19937_64& rng, int max_arcs, long long den);

/// Equator crossing of the jump circle of radius phi around (theta, v), by
/// bisection on the haversine distance; returns the crossing's azimuth east
/// of theta.
double equator_crossing(double theta, double v, double phi);

}  // namespace grasshopper::oracle_test
