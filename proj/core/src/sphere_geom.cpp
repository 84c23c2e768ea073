#include "grasshopper/sphere_geom.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "grasshopper/errors.hpp"

namespace grasshopper {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

double wrap_two_pi(double x) {
  double w = std::fmod(x, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

void require_phi(double phi, double hi, const char* where) {
  if (!(phi > 0.0 && phi < hi)) {
    throw InvalidArgument(std::string(where) + ": phi out of range: " + std::to_string(phi));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// SpherePoint
// ---------------------------------------------------------------------------

SpherePoint::SpherePoint(double theta, double delta) : theta_(theta), delta_(delta) {
  if (!std::isfinite(theta) || !std::isfinite(delta) || delta < -kHalfPi || delta > kHalfPi) {
    throw InvalidArgument("SpherePoint: invalid coordinates");
  }
  const double c = std::cos(delta);
  xyz_ = Vec3(std::sin(theta) * c, std::cos(theta) * c, std::sin(delta));
}

SpherePoint SpherePoint::from_cartesian(const Vec3& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw InvalidArgument("SpherePoint::from_cartesian: zero or non-finite vector");
  }
  const Vec3 u = v / n;
  const double delta = std::atan2(u.z(), std::hypot(u.x(), u.y()));
  const double theta = wrap_two_pi(std::atan2(u.x(), u.y()));
  return {theta, delta};
}

SpherePoint SpherePoint::antipode() const { return {wrap_two_pi(theta_ + kPi), -delta_}; }

Vec3 SpherePoint::east() const { return {std::cos(theta_), -std::sin(theta_), 0.0}; }

Vec3 SpherePoint::north() const {
  const double sd = std::sin(delta_);
  return {-std::sin(theta_) * sd, -std::cos(theta_) * sd, std::cos(delta_)};
}

// ---------------------------------------------------------------------------
// Distances, jumps and bearings
// ---------------------------------------------------------------------------

double angular_distance(const SpherePoint& a, const SpherePoint& b) {
  const Vec3& x = a.cartesian();
  const Vec3& y = b.cartesian();
  return std::atan2(x.cross(y).norm(), x.dot(y));
}

SpherePoint jump(const SpherePoint& from, double omega, double phi) {
  require_phi(phi, kPi, "jump");
  const Vec3 t = std::cos(omega) * from.east() + std::sin(omega) * from.north();
  return SpherePoint::from_cartesian(from.cartesian() * std::cos(phi) + t * std::sin(phi));
}

double bearing(const SpherePoint& from, const SpherePoint& to) {
  const Vec3& x = from.cartesian();
  const Vec3 d = to.cartesian() - x.dot(to.cartesian()) * x;
  if (d.norm() < 1e-15) {
    throw GeometryError("bearing: target coincides with the source or its antipode");
  }
  return std::atan2(d.dot(from.north()), d.dot(from.east()));
}

// ---------------------------------------------------------------------------
// Caps
// ---------------------------------------------------------------------------

void CapSpec::validate() const {
  if (!(radius_r > 0.0 && radius_r < kPi / 2.0)) {
    throw InvalidArgument("CapSpec: radius must lie in (0, pi/2)");
  }
  if (!(scale_s >= 0.0 && scale_s <= 1.0)) {
    throw InvalidArgument("CapSpec: scale must lie in [0, 1]");
  }
  if (!std::isfinite(center_theta)) {
    throw InvalidArgument("CapSpec: centre must be finite");
  }
}

double CapSpec::relative_azimuth(double theta) const {
  double u = std::remainder(theta - center_theta, kTwoPi);
  if (u <= -kPi) u += kTwoPi;
  return u;
}

double CapSpec::height_at(double u) const {
  if (std::abs(u) > radius_r) return 0.0;
  return scale_s * detail::right_leg(radius_r, u);
}

bool CapSpec::contains(const SpherePoint& x) const {
  if (scale_s == 0.0) return false;
  const double v = polarity == Polarity::cap ? x.delta() : -x.delta();
  if (v < 0.0) return false;
  const double u = relative_azimuth(x.theta());
  if (std::abs(u) > radius_r || v / scale_s > radius_r) return false;
  return std::cos(u) * std::cos(v / scale_s) >= std::cos(radius_r);
}

// ---------------------------------------------------------------------------
// Jump angles
// ---------------------------------------------------------------------------

double beta1(double /*u*/, double v, double phi) {
  require_phi(phi, kPi / 2.0, "beta1");
  const double arg = std::tan(v) / std::tan(phi);
  if (!(arg >= -1.0 && arg <= 1.0)) {
    throw GeometryError("beta1: tan v cot phi outside [-1, 1]");
  }
  return std::asin(arg);
}

BetaSum beta_sum(double u, double v, double phi, const CapSpec& target) {
  require_phi(phi, kPi / 2.0, "beta_sum");
  target.validate();
  if (!(v >= 0.0)) throw InvalidArgument("beta_sum: v must be non-negative");
  if (target.scale_s == 0.0) return {};

  const double r = target.radius_r;
  const double t = target.scale_s;
  const SpherePoint p(u - phi, v);
  const double cos_phi = std::cos(phi);

  // Equator crossing Q at relative azimuth x.
  const double ratio = cos_phi / std::cos(v);
  if (ratio > 1.0) return {};
  const double x = u - phi + std::acos(ratio);
  if (x < -r) return {};
  if (x > u + kDistanceTolerance) {
    throw GeometryError("beta_sum: equator crossing lies east of the start point");
  }

  const Vec3& pc = p.cartesian();
  const double cos_r = std::cos(r);
  auto edge = [&](double tau) {
    const double d = t * std::acos(clamp_unit(cos_r / std::cos(tau)));
    const double cd = std::cos(d);
    return Vec3(std::sin(tau) * cd, std::cos(tau) * cd, std::sin(d));
  };
  auto g = [&](double tau) { return pc.dot(edge(tau)) - cos_phi; };

  const double g_lo = g(-r);
  const double g_hi = g(r);
  if (g_lo < 0.0) return {};

  double tau_root = r;
  if (g_hi < 0.0) {
    constexpr int kGuard = 33;
    int changes = 0;
    double prev = g_lo;
    for (int k = 1; k < kGuard; ++k) {
      const double cur = g(-r + 2.0 * r * k / (kGuard - 1));
      if ((prev >= 0.0) != (cur >= 0.0)) ++changes;
      prev = cur;
    }
    if (changes > 1) {
      throw GeometryError("beta_sum: jump circle crosses the target edge " +
                          std::to_string(changes) + " times");
    }
    const double abs_tol = kRootTolerance * r;
    auto tol = [abs_tol](double a, double b) { return std::abs(b - a) <= abs_tol; };
    std::uintmax_t max_iter = 200;
    const auto bracket =
        boost::math::tools::toms748_solve(g, -r, r, g_lo, g_hi, tol, max_iter);
    if (max_iter >= 200) {
      throw NumericError("beta_sum: edge crossing did not converge");
    }
    tau_root = 0.5 * (bracket.first + bracket.second);
  }

  BetaSum out;
  out.hit = true;
  out.beta1 = beta1(u, v, phi);
  out.beta2 = bearing(p, SpherePoint::from_cartesian(edge(tau_root)));
  return out;
}

// ---------------------------------------------------------------------------
// Spherical triangle helpers
// ---------------------------------------------------------------------------

namespace detail {

double cosine_rule_side(double b, double c, double alpha) {
  return std::acos(
      clamp_unit(std::cos(b) * std::cos(c) + std::sin(b) * std::sin(c) * std::cos(alpha)));
}

double sine_rule_side(double a, double alpha, double beta) {
  return std::asin(clamp_unit(std::sin(a) * std::sin(beta) / std::sin(alpha)));
}

double right_hypotenuse(double b, double c) { return std::acos(clamp_unit(std::cos(b) * std::cos(c))); }

double right_leg(double a, double b) { return std::acos(clamp_unit(std::cos(a) / std::cos(b))); }

double right_adjacent_angle(double a, double c) {
  return std::acos(clamp_unit(std::tan(c) / std::tan(a)));
}

}  // namespace detail

}  // namespace grasshopper
