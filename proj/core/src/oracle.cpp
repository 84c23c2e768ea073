#include "grasshopper/oracle.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "grasshopper/circle_lawns.hpp"
#include "grasshopper/errors.hpp"

namespace grasshopper {

namespace {

void check_orbit_args(long long p, long long q, const char* where) {
  if (q < 1 || q > 20) throw InvalidArgument(std::string(where) + ": q must lie in [1, 20]");
  if (p % 2 == 0 || std::gcd(p, q) != 1) {
    throw InvalidArgument(std::string(where) + ": need p odd and gcd(p, q) == 1");
  }
}

std::size_t cell_of(long long k, long long p, long long q) {
  const long long m = 2 * q;
  return static_cast<std::size_t>(((k * p) % m + m) % m);
}

}  // namespace

OrbitColouring OrbitColouring::semi(long long p, long long q) {
  check_orbit_args(p, q, "OrbitColouring::semi");
  return {p, q, std::vector<bool>(static_cast<std::size_t>(q), true)};
}

std::vector<bool> OrbitColouring::orbit_bits() const {
  std::vector<bool> out(2 * bits.size());
  for (std::size_t k = 0; k < bits.size(); ++k) {
    out[k] = bits[k];
    out[k + bits.size()] = !bits[k];
  }
  return out;
}

ArcSet OrbitColouring::lawn() const {
  const auto full = orbit_bits();
  std::vector<Arc> arcs;
  for (std::size_t k = 0; k < full.size(); ++k) {
    if (!full[k]) continue;
    const auto c = static_cast<long long>(cell_of(static_cast<long long>(k), p, q));
    arcs.push_back({Angle::pi_times(Rational(c, q)), Angle::pi_times(Rational(c + 1, q))});
  }
  return ArcSet::normalize(arcs);
}

Scalar orbit_colouring_retention(const OrbitColouring& colouring) {
  check_orbit_args(colouring.p, colouring.q, "orbit_colouring_retention");
  if (colouring.bits.size() != static_cast<std::size_t>(colouring.q)) {
    throw InvalidArgument("orbit_colouring_retention: expected q bits");
  }
  return retention(colouring.lawn(), Angle::pi_times(Rational(colouring.p, colouring.q)));
}

OrbitSearchResult exhaustive_orbit_max(long long p, long long q) {
  check_orbit_args(p, q, "exhaustive_orbit_max");
  const auto n = static_cast<std::size_t>(q);
  const std::uint64_t total = 1ULL << n;
  const Angle start = Angle::pi_times(Rational(1, 2 * q));
  OrbitSearchResult best{Scalar(-1), {p, q, {}}, total, 0};
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    OrbitColouring c{p, q, std::vector<bool>(n)};
    for (std::size_t k = 0; k < n; ++k) c.bits[k] = ((mask >> k) & 1ULL) != 0;
    const Scalar value = orbit_colouring_retention(c);
    if (q >= 2) {
      std::vector<Scalar> densities;
      for (bool b : c.orbit_bits()) densities.emplace_back(b ? 1 : 0);
      const Scalar orbit = orbit_retention(OrbitProfile(p, q, start, std::move(densities)));
      if (!(orbit == value)) {
        throw Error("exhaustive_orbit_max: orbit sum " + orbit.to_string() +
                    " disagrees with retention " + value.to_string());
      }
    }
    if (value > best.max_retention) {
      best.max_retention = value;
      best.argmax = std::move(c);
      best.attaining = 1;
    } else if (value == best.max_retention) {
      ++best.attaining;
    }
  }
  return best;
}

double direction_sweep_fraction(const SpherePoint& from, double phi, const LawnPredicate& target,
                                std::uint64_t grid_n) {
  if (grid_n < 1000) throw InvalidArgument("direction_sweep_fraction: grid_n must be >= 1000");
  if (!(phi > 0.0 && phi < std::numbers::pi)) {
    throw InvalidArgument("direction_sweep_fraction: phi must lie in (0, pi)");
  }
  std::uint64_t hits = 0;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(grid_n);
  for (std::uint64_t k = 0; k < grid_n; ++k) {
    if (target(jump(from, (static_cast<double>(k) + 0.5) * step, phi))) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(grid_n);
}

}  // namespace grasshopper
