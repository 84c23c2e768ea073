#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "grasshopper/sphere_geom.hpp"

namespace grasshopper {

/// Which construction produced a lawn.
enum class LawnCase { hemisphere, peven, irrational, podd };

std::string to_string(LawnCase c);
/// Throws InvalidArgument on an unknown name.
LawnCase lawn_case_from_string(const std::string& name);

/// An ordered pair of cap indices whose centres are exactly phi apart, with
/// the second reached by moving east from the first.
struct CapPair {
  std::size_t from = 0;
  std::size_t to = 0;
  friend bool operator==(const CapPair&, const CapPair&) = default;
};

/// Southern hemisphere with caps added above the equator and the antipodal
/// cups removed below it.
class CoggedLawn {
 public:
  /// Plain southern hemisphere; phi is recorded for reference only.
  static CoggedLawn hemisphere(double phi);

  /// Checks antipodality of cups, pairwise separation > 2r and, for every
  /// pair not listed in `adjacency` (cups mirror the cap pairs),
  /// |distance - phi| > 2r. Throws ValidityError naming the first violation.
  CoggedLawn(LawnCase lawn_case, double phi, double r, std::vector<CapSpec> caps,
             std::vector<CapSpec> cups, std::vector<CapPair> adjacency);

  LawnCase lawn_case() const { return case_; }
  double phi() const { return phi_; }
  double radius() const { return r_; }
  const std::vector<CapSpec>& caps() const { return caps_; }
  const std::vector<CapSpec>& cups() const { return cups_; }
  const std::vector<CapPair>& adjacency() const { return adjacency_; }

  /// Construction parameters as given (0 when not applicable).
  long long p = 0;
  long long q = 0;
  long long n = 0;

  /// delta > 0: inside some cap. delta < 0: inside no cup. delta == 0: on a
  /// cap base, not on a cup base, otherwise theta in [0, pi).
  bool contains(const SpherePoint& x) const;

 private:
  CoggedLawn() = default;
  LawnCase case_ = LawnCase::hemisphere;
  double phi_ = 0.0;
  double r_ = 0.0;
  std::vector<CapSpec> caps_;
  std::vector<CapSpec> cups_;
  std::vector<CapPair> adjacency_;
};

/// Largest radius (times 0.9) for which caps at `centers` (scale > 0) and
/// antipodal cups satisfy the validity constraints for jump phi.
double max_valid_radius(const std::vector<double>& centers, const std::vector<CapPair>& adjacency,
                        double phi);

/// ceil(1 / (1 - cos phi)) + 1.
long long auto_cap_count(double phi);

/// q caps at j*p*pi/q, j = 0..q-1, scale 1, antipodal cups; each cap paired
/// with the next. Requires p even, gcd(p, q) == 1 and 0 < p*pi/q < pi/2.
CoggedLawn construct_peven(long long p, long long q, double r);

/// n caps at k*phi, k = 0..n-1, scale 1, antipodal cups, n - 1 pairs.
/// n <= 0 selects auto_cap_count(phi); otherwise n >= 2 is required.
/// Requires 0 < phi < pi/2; irrationality of phi/pi is not checked.
CoggedLawn construct_irrational(double phi, double r, long long n = 0);

/// Caps at j*p*pi/q with scale sin(j*pi/q) for j = 1..q-1, antipodal cups,
/// consecutive j paired. Requires p odd, 1 < p < q/2, gcd(p, q) == 1.
CoggedLawn construct_podd(long long p, long long q, double r);

/// sum_{j=0}^{q-1} 2 sin(j pi/q) sin((j+1) pi/q).
double trig_sum_adjacent(long long q);
/// sum_{j=0}^{q-1} 2 sin^2(j pi/q).
double trig_sum_squares(long long q);

}  // namespace grasshopper
