#pragma once

#include <vector>

#include "grasshopper/angle.hpp"
#include "grasshopper/arc_set.hpp"
#include "grasshopper/density_lawn.hpp"
#include "grasshopper/scalar.hpp"

namespace grasshopper {

// ---------------------------------------------------------------------------
// Retention on the circle
// ---------------------------------------------------------------------------

/// Integral over the circle of f_a(theta) * f_b(theta + shift).
Angle overlap_integral(const StepDensityLawn& a, const StepDensityLawn& b, const Angle& shift);

/// Probability that a jump of `jump` in a uniformly random direction, from a
/// point drawn from the lawn's density, lands on the lawn:
///   (1/2L) * Int f(t) [f(t + jump) + f(t - jump)] dt.
/// Exact when breakpoints, densities and jump are all exact.
/// Throws UndefinedRetention for a zero-mass lawn.
Scalar retention(const StepDensityLawn& lawn, const Angle& jump);
Scalar retention(const ArcSet& lawn, const Angle& jump);

/// Probability of landing on `to` when starting on `from`:
///   (1/2L_from) * Int f_from(t) [f_to(t + jump) + f_to(t - jump)] dt.
Scalar retention_two(const StepDensityLawn& from, const StepDensityLawn& to, const Angle& jump);
Scalar retention_two(const ArcSet& from, const ArcSet& to, const Angle& jump);

/// f(t) + f(t + pi) == 1 everywhere (exact, or within 1e-12 on floats).
bool is_antipodal(const StepDensityLawn& lawn);
bool is_antipodal(const ArcSet& lawn);

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

/// q equal arcs [2*pi*j/q, 2*pi*j/q + L/q): retention 1 at jump 2*pi*p/q.
/// Requires 0 < L < 2*pi, q >= 1 and gcd(p, q) == 1.
ArcSet construct_general(const Angle& length, long long p, long long q);

/// Union of [j*jump, j*jump + eps) for j = 0..K-1, K maximal with measure
/// below L, topped up by [K*jump, K*jump + delta) to reach measure L exactly.
/// Float path; jump/pi is assumed irrational and is not checked.
ArcSet construct_irrational(double length, double jump, double eps);

/// Arcs [2j*pi/q, (2j+1)*pi/q): antipodal, retention 1 at every pi*p/q with
/// p even. Requires q odd.
ArcSet construct_antipodal_even(long long q);

struct OddAntipodalLawns {
  ArcSet orbit_lawn;  ///< union of [j*p*pi/q, j*p*pi/q + pi/q)
  ArcSet demi_lawns;  ///< two demi-lawns of length pi/2 each
};

/// The two optimal antipodal lawns for jump pi*p/q, p odd: both have
/// retention exactly 1 - 1/q. Requires gcd(p, q) == 1, p odd, q >= 2.
OddAntipodalLawns construct_antipodal_odd(long long p, long long q);

// ---------------------------------------------------------------------------
// Discrete orbit bound
// ---------------------------------------------------------------------------

/// Densities at the 2q orbit points start + k*pi*p/q of an antipodal lawn.
class OrbitProfile {
 public:
  /// Throws InvalidArgument unless q >= 2, p odd, gcd(p, q) == 1 and
  /// densities[k] + densities[k + q] == 1 with every density in [0, 1].
  OrbitProfile(long long p, long long q, Angle start, std::vector<Scalar> densities);

  long long p() const { return p_; }
  long long q() const { return q_; }
  const Angle& start() const { return start_; }
  const std::vector<Scalar>& densities() const { return densities_; }
  /// start + k*pi*p/q, wrapped.
  Angle point(std::size_t k) const;

 private:
  long long p_;
  long long q_;
  Angle start_;
  std::vector<Scalar> densities_;
};

/// 1 - 1/q.
Scalar orbit_bound(long long p, long long q);
/// (1/2q) * sum_k p_k (p_{k-1} + p_{k+1}), indices mod 2q.
Scalar orbit_retention(const OrbitProfile& profile);

// ---------------------------------------------------------------------------
// Optimal values
// ---------------------------------------------------------------------------

enum class LawnMode { single, pair };

struct OptimalValue {
  Scalar value;
  /// True when some lawn (pair) attains `value`; false when it is only a
  /// supremum, or when attainment cannot be decided from a float jump.
  bool attained;
};

/// Optimal (supremum) retention over antipodal lawns for the given jump.
/// single: 1/2 at jump pi, 1 - 1/q at pi*p/q with p odd and q >= 2, else 1.
/// pair:   1 - 1/q at pi*p/q with p odd and q even, else 1.
OptimalValue optimal_antipodal_value(const RationalAngle& jump, LawnMode mode);

long long gcd_ll(long long a, long long b);

}  // namespace grasshopper
