#pragma once

#include <cstdint>
#include <vector>

#include "grasshopper/arc_set.hpp"
#include "grasshopper/monte_carlo.hpp"
#include "grasshopper/scalar.hpp"
#include "grasshopper/sphere_geom.hpp"

namespace grasshopper {

/// Antipodal colouring of the 2q cells [c pi/q, (c+1) pi/q). Orbit position k
/// (the point k p pi/q) lies in cell k p mod 2q; bits[k] colours position k
/// for k < q and position k + q takes the opposite colour.
struct OrbitColouring {
  long long p = 1;
  long long q = 1;
  std::vector<bool> bits;

  /// Positions 0..q-1 on the lawn.
  static OrbitColouring semi(long long p, long long q);
  /// Cells coloured 1 along the full orbit, in orbit order.
  std::vector<bool> orbit_bits() const;
  /// Union of the cells coloured 1 (exact arcs).
  ArcSet lawn() const;
};

struct OrbitSearchResult {
  Scalar max_retention;
  OrbitColouring argmax;
  std::uint64_t colourings = 0;
  /// Colourings whose retention equals the maximum.
  std::uint64_t attaining = 0;
};

/// Exact retention at jump p pi/q of every one of the 2^q colourings,
/// computed by the generic retention engine and checked against the orbit
/// sum (throws Error on disagreement). Requires p odd, gcd(p, q) == 1 and
/// 1 <= q <= 20.
OrbitSearchResult exhaustive_orbit_max(long long p, long long q);

/// Retention of one colouring by the generic engine.
Scalar orbit_colouring_retention(const OrbitColouring& colouring);

/// Fraction of the grid_n directions (k + 1/2) 2 pi / grid_n whose jump of
/// length phi from `from` lands where `target` holds. Requires grid_n >= 1000.
double direction_sweep_fraction(const SpherePoint& from, double phi, const LawnPredicate& target,
                                std::uint64_t grid_n);

}  // namespace grasshopper
