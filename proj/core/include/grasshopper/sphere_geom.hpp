#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace grasshopper {

using Vec3 = Eigen::Vector3d;

inline constexpr double kRootTolerance = 1e-13;
inline constexpr double kDistanceTolerance = 1e-12;

/// A point on the unit sphere in (azimuth, elevation) coordinates, with
/// cartesian form (sin t cos d, cos t cos d, sin d).
class SpherePoint {
 public:
  /// Throws InvalidArgument unless delta lies in [-pi/2, pi/2] and both are
  /// finite. theta is stored as given.
  SpherePoint(double theta, double delta);
  /// theta in [0, 2*pi); the vector need not be normalised.
  static SpherePoint from_cartesian(const Vec3& v);
  static SpherePoint north_pole() { return {0.0, kHalfPi}; }
  static SpherePoint south_pole() { return {0.0, -kHalfPi}; }

  double theta() const { return theta_; }
  double delta() const { return delta_; }
  const Vec3& cartesian() const { return xyz_; }

  /// (theta + pi wrapped into [0, 2*pi), -delta).
  SpherePoint antipode() const;
  /// Unit tangent along increasing theta. At the poles this is the value
  /// the formula gives for the stored theta (theta = 0 meridian by default).
  Vec3 east() const;
  /// Unit tangent along increasing delta, completing the frame with east().
  Vec3 north() const;

 private:
  static constexpr double kHalfPi = 1.57079632679489661923;
  double theta_;
  double delta_;
  Vec3 xyz_;
};

/// Great-circle distance, atan2(|a x b|, a . b).
double angular_distance(const SpherePoint& a, const SpherePoint& b);

/// Destination of a jump of length phi from `from` with bearing omega,
/// measured from east() toward north(). Requires 0 < phi < pi.
SpherePoint jump(const SpherePoint& from, double omega, double phi);

/// Bearing of `to` seen from `from`, in (-pi, pi], measured like jump().
/// Throws GeometryError when `to` equals `from` or its antipode.
double bearing(const SpherePoint& from, const SpherePoint& to);

/// Cap above the equator (or cup below it) centred at azimuth center_theta:
/// relative azimuth |u| <= r and cos u cos(v / s) >= cos r, with v the
/// elevation (mirrored for a cup). Scale 0 is the empty region.
struct CapSpec {
  enum class Polarity { cap, cup };

  double center_theta = 0.0;
  double radius_r = 0.0;
  double scale_s = 1.0;
  Polarity polarity = Polarity::cap;

  /// Throws InvalidArgument unless 0 < r < pi/2 and s in [0, 1].
  void validate() const;
  /// Relative azimuth of theta from the centre, in (-pi, pi].
  double relative_azimuth(double theta) const;
  /// Upper edge of the region at relative azimuth u: s * arccos(cos r / cos u)
  /// for |u| <= r, else 0.
  double height_at(double u) const;
  /// Region membership, boundary included. Points on the equator inside the
  /// base count as members.
  bool contains(const SpherePoint& x) const;
};

/// arcsin(tan v * cot phi). Throws GeometryError when the argument leaves
/// [-1, 1] and InvalidArgument unless 0 < phi < pi/2. u is unused.
double beta1(double u, double v, double phi);

struct BetaSum {
  bool hit = false;
  double beta1 = 0.0;
  double beta2 = 0.0;
  double sum() const { return hit ? beta1 + beta2 : 0.0; }
};

/// Jump directions from P = (-phi + u, v), coordinates relative to the
/// target centre, that land in `target` (its center_theta is ignored and
/// taken as 0). beta1 is the angle below east of the jump hitting the equator
/// at Q; beta2 the angle above east of the jump hitting the target's upper
/// edge at R. Requires 0 < phi < pi/2, v >= 0, 0 < r < pi/2.
/// Returns hit = false when the jump circle misses the target.
/// Throws GeometryError if Q lies east of u or the edge is crossed more than
/// once, NumericError if the edge crossing fails to converge.
BetaSum beta_sum(double u, double v, double phi, const CapSpec& target);

namespace detail {

/// Side a opposite angle alpha from sides b, c: cosine rule.
double cosine_rule_side(double b, double c, double alpha);
/// Side b opposite angle beta from side a opposite alpha: sine rule,
/// principal branch.
double sine_rule_side(double a, double alpha, double beta);
/// Hypotenuse of a right-angled triangle with legs b, c.
double right_hypotenuse(double b, double c);
/// Remaining leg of a right-angled triangle from hypotenuse a and leg b.
double right_leg(double a, double b);
/// Angle at the vertex between hypotenuse a and leg c: tan a cos B = tan c.
double right_adjacent_angle(double a, double c);

}  // namespace detail

}  // namespace grasshopper
