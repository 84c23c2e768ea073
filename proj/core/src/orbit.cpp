#include <numeric>
#include <string>

#include "grasshopper/circle_lawns.hpp"
#include "grasshopper/errors.hpp"

namespace grasshopper {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

OrbitProfile::OrbitProfile(long long p, long long q, Angle start, std::vector<Scalar> densities)
    : p_(p), q_(q), start_(std::move(start)), densities_(std::move(densities)) {
  if (q_ < 2) throw InvalidArgument("OrbitProfile: q must be >= 2");
  if (p_ % 2 == 0) throw InvalidArgument("OrbitProfile: p must be odd");
  if (gcd_ll(p_, q_) != 1) throw InvalidArgument("OrbitProfile: p and q must be coprime");
  const auto n = static_cast<std::size_t>(2 * q_);
  if (densities_.size() != n) {
    throw InvalidArgument("OrbitProfile: expected " + std::to_string(n) + " densities");
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Scalar& d = densities_[k];
    if (d < Scalar(0) || d > Scalar(1)) throw InvalidArgument("OrbitProfile: density outside [0, 1]");
    const Scalar& opposite = densities_[(k + static_cast<std::size_t>(q_)) % n];
    if (!approx_equal(d + opposite, Scalar(1))) {
      throw InvalidArgument("OrbitProfile: antipodal pairing violated at k=" + std::to_string(k));
    }
  }
}

Angle OrbitProfile::point(std::size_t k) const {
  return (start_ + Angle::pi_times(Rational(static_cast<long long>(k) * p_, q_))).wrapped();
}

Scalar orbit_bound(long long p, long long q) {
  if (q < 2 || p % 2 == 0 || gcd_ll(p, q) != 1) {
    throw InvalidArgument("orbit_bound: need p odd, q >= 2, gcd(p, q) == 1");
  }
  return Scalar(1) - Scalar::ratio(1, q);
}

Scalar orbit_retention(const OrbitProfile& profile) {
  const auto& d = profile.densities();
  const std::size_t n = d.size();
  Scalar sum(0);
  for (std::size_t k = 0; k < n; ++k) {
    sum += d[k] * (d[(k + n - 1) % n] + d[(k + 1) % n]);
  }
  return sum / Scalar(static_cast<long long>(n));
}

OptimalValue optimal_antipodal_value(const RationalAngle& jump, LawnMode mode) {
  if (!jump.is_exact()) return {Scalar(1), false};
  const BigInt p = jump.numerator();
  const BigInt q = jump.denominator();
  const bool p_odd = (p % 2) != 0;
  const bool q_even = (q % 2) == 0;
  const Rational one_minus = Rational(1) - Rational(BigInt(1), q);
  switch (mode) {
    case LawnMode::single:
      if (!p_odd) return {Scalar(1), true};
      if (q == 1) return {Scalar::ratio(1, 2), true};
      return {Scalar(one_minus), true};
    case LawnMode::pair:
      if (p_odd && q_even) return {Scalar(one_minus), true};
      return {Scalar(1), true};
  }
  return {Scalar(1), true};
}

}  // namespace grasshopper
