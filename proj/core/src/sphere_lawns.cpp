#include "grasshopper/sphere_lawns.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

#include "grasshopper/errors.hpp"

namespace grasshopper {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_two_pi(double x) {
  double w = std::fmod(x, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

double equator_distance(double a, double b) {
  const double d = std::abs(std::remainder(a - b, kTwoPi));
  return std::min(d, kTwoPi - d);
}

struct Center {
  double theta;
  bool is_cap;
  std::size_t index;
};

std::string describe(const Center& c) {
  std::ostringstream os;
  os << (c.is_cap ? "cap " : "cup ") << c.index << " (theta=" << c.theta << ")";
  return os.str();
}

// Unordered index pairs that are allowed to be phi apart: the listed cap pairs
// and the same pairs among cups.
bool is_adjacent(const Center& a, const Center& b, const std::vector<CapPair>& adjacency) {
  if (a.is_cap != b.is_cap) return false;
  for (const auto& pr : adjacency) {
    if ((pr.from == a.index && pr.to == b.index) || (pr.from == b.index && pr.to == a.index)) {
      return true;
    }
  }
  return false;
}

std::vector<Center> centers_of(const std::vector<CapSpec>& caps, const std::vector<CapSpec>& cups) {
  std::vector<Center> out;
  for (std::size_t i = 0; i < caps.size(); ++i) {
    if (caps[i].scale_s > 0.0) out.push_back({caps[i].center_theta, true, i});
  }
  for (std::size_t i = 0; i < cups.size(); ++i) {
    if (cups[i].scale_s > 0.0) out.push_back({cups[i].center_theta, false, i});
  }
  return out;
}

void require_coprime(long long p, long long q, const char* where) {
  if (q < 1 || std::gcd(p, q) != 1) {
    throw InvalidArgument(std::string(where) + ": p/q must be a reduced fraction with q >= 1");
  }
}

CoggedLawn assemble(LawnCase c, double phi, double r, const std::vector<double>& centers,
                    const std::vector<double>& scales, std::vector<CapPair> adjacency) {
  std::vector<CapSpec> caps, cups;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    caps.push_back({wrap_two_pi(centers[i]), r, scales[i], CapSpec::Polarity::cap});
    cups.push_back({wrap_two_pi(centers[i] + kPi), r, scales[i], CapSpec::Polarity::cup});
  }
  return CoggedLawn(c, phi, r, std::move(caps), std::move(cups), std::move(adjacency));
}

}  // namespace

std::string to_string(LawnCase c) {
  switch (c) {
    case LawnCase::hemisphere: return "hemisphere";
    case LawnCase::peven: return "peven";
    case LawnCase::irrational: return "irrational";
    case LawnCase::podd: return "podd";
  }
  return "unknown";
}

LawnCase lawn_case_from_string(const std::string& name) {
  for (auto c : {LawnCase::hemisphere, LawnCase::peven, LawnCase::irrational, LawnCase::podd}) {
    if (to_string(c) == name) return c;
  }
  throw InvalidArgument("unknown lawn case: " + name);
}

// ---------------------------------------------------------------------------
// CoggedLawn
// ---------------------------------------------------------------------------

CoggedLawn CoggedLawn::hemisphere(double phi) {
  CoggedLawn lawn;
  lawn.phi_ = phi;
  return lawn;
}

CoggedLawn::CoggedLawn(LawnCase lawn_case, double phi, double r, std::vector<CapSpec> caps,
                       std::vector<CapSpec> cups, std::vector<CapPair> adjacency)
    : case_(lawn_case),
      phi_(phi),
      r_(r),
      caps_(std::move(caps)),
      cups_(std::move(cups)),
      adjacency_(std::move(adjacency)) {
  if (!(phi > 0.0 && phi < kPi / 2.0)) {
    throw InvalidArgument("CoggedLawn: phi must lie in (0, pi/2)");
  }
  if (caps_.size() != cups_.size()) {
    throw ValidityError("CoggedLawn: caps and cups differ in number");
  }
  for (std::size_t i = 0; i < caps_.size(); ++i) {
    const CapSpec& a = caps_[i];
    const CapSpec& u = cups_[i];
    a.validate();
    u.validate();
    if (a.polarity != CapSpec::Polarity::cap || u.polarity != CapSpec::Polarity::cup) {
      throw ValidityError("CoggedLawn: polarity mismatch at index " + std::to_string(i));
    }
    if (a.radius_r != r || u.radius_r != r || a.scale_s != u.scale_s ||
        equator_distance(a.center_theta + kPi, u.center_theta) > 1e-12) {
      throw ValidityError("CoggedLawn: cup " + std::to_string(i) + " is not the antipode of cap " +
                          std::to_string(i));
    }
  }
  for (const auto& pr : adjacency_) {
    if (pr.from >= caps_.size() || pr.to >= caps_.size()) {
      throw ValidityError("CoggedLawn: adjacency index out of range");
    }
    const double gap = wrap_two_pi(caps_[pr.to].center_theta - caps_[pr.from].center_theta);
    if (std::abs(gap - phi) > 1e-12) {
      throw ValidityError("CoggedLawn: paired caps " + std::to_string(pr.from) + ", " +
                          std::to_string(pr.to) + " are not phi apart");
    }
  }
  const auto centers = centers_of(caps_, cups_);
  for (std::size_t i = 0; i < centers.size(); ++i) {
    for (std::size_t j = i + 1; j < centers.size(); ++j) {
      const double d = equator_distance(centers[i].theta, centers[j].theta);
      if (d <= 2.0 * r) {
        throw ValidityError("CoggedLawn: overlap between " + describe(centers[i]) + " and " +
                            describe(centers[j]) + ": distance " + std::to_string(d) +
                            " <= 2r");
      }
      if (!is_adjacent(centers[i], centers[j], adjacency_) && std::abs(d - phi) <= 2.0 * r) {
        throw ValidityError("CoggedLawn: " + describe(centers[i]) + " reachable from " +
                            describe(centers[j]) + ": |distance - phi| = " +
                            std::to_string(std::abs(d - phi)) + " <= 2r");
      }
    }
  }
}

bool CoggedLawn::contains(const SpherePoint& x) const {
  const double d = x.delta();
  if (d > 0.0) {
    return std::any_of(caps_.begin(), caps_.end(), [&](const CapSpec& c) { return c.contains(x); });
  }
  if (d < 0.0) {
    return std::none_of(cups_.begin(), cups_.end(), [&](const CapSpec& c) { return c.contains(x); });
  }
  auto on_base = [&](const CapSpec& c) {
    return c.scale_s > 0.0 && std::abs(c.relative_azimuth(x.theta())) <= c.radius_r;
  };
  if (std::any_of(caps_.begin(), caps_.end(), on_base)) return true;
  if (std::any_of(cups_.begin(), cups_.end(), on_base)) return false;
  const double t = wrap_two_pi(x.theta());
  return t < kPi;
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

double max_valid_radius(const std::vector<double>& centers, const std::vector<CapPair>& adjacency,
                        double phi) {
  std::vector<Center> all;
  for (std::size_t i = 0; i < centers.size(); ++i) all.push_back({centers[i], true, i});
  for (std::size_t i = 0; i < centers.size(); ++i) all.push_back({centers[i] + kPi, false, i});
  double bound = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const double d = equator_distance(all[i].theta, all[j].theta);
      bound = std::min(bound, d / 2.0);
      if (!is_adjacent(all[i], all[j], adjacency)) bound = std::min(bound, std::abs(d - phi) / 2.0);
    }
  }
  return 0.9 * std::min(bound, kPi / 2.0);
}

long long auto_cap_count(double phi) {
  if (!(phi > 0.0 && phi < kPi / 2.0)) {
    throw InvalidArgument("auto_cap_count: phi must lie in (0, pi/2)");
  }
  return static_cast<long long>(std::ceil(1.0 / (1.0 - std::cos(phi)))) + 1;
}

CoggedLawn construct_peven(long long p, long long q, double r) {
  require_coprime(p, q, "construct_peven");
  if (p <= 0 || p % 2 != 0) throw InvalidArgument("construct_peven: p must be even and positive");
  if (2 * p >= q) throw InvalidArgument("construct_peven: p*pi/q must be below pi/2");
  const double phi = kPi * static_cast<double>(p) / static_cast<double>(q);
  std::vector<double> centers;
  std::vector<double> scales(static_cast<std::size_t>(q), 1.0);
  std::vector<CapPair> adjacency;
  for (long long j = 0; j < q; ++j) {
    // j*p*pi/q reduced exactly to (j*p mod 2q)*pi/q.
    centers.push_back(kPi * static_cast<double>((j * p) % (2 * q)) / static_cast<double>(q));
    adjacency.push_back({static_cast<std::size_t>(j), static_cast<std::size_t>((j + 1) % q)});
  }
  auto lawn = assemble(LawnCase::peven, phi, r, centers, scales, std::move(adjacency));
  lawn.p = p;
  lawn.q = q;
  lawn.n = q;
  return lawn;
}

CoggedLawn construct_irrational(double phi, double r, long long n) {
  if (!(phi > 0.0 && phi < kPi / 2.0)) {
    throw InvalidArgument("construct_irrational: phi must lie in (0, pi/2)");
  }
  if (n <= 0) n = auto_cap_count(phi);
  if (n < 2) throw InvalidArgument("construct_irrational: n must be at least 2");
  std::vector<double> centers;
  std::vector<double> scales(static_cast<std::size_t>(n), 1.0);
  std::vector<CapPair> adjacency;
  for (long long k = 0; k < n; ++k) {
    centers.push_back(wrap_two_pi(static_cast<double>(k) * phi));
    if (k + 1 < n) adjacency.push_back({static_cast<std::size_t>(k), static_cast<std::size_t>(k + 1)});
  }
  auto lawn = assemble(LawnCase::irrational, phi, r, centers, scales, std::move(adjacency));
  lawn.n = n;
  return lawn;
}

CoggedLawn construct_podd(long long p, long long q, double r) {
  require_coprime(p, q, "construct_podd");
  if (p % 2 == 0 || p <= 1) throw InvalidArgument("construct_podd: p must be odd and > 1");
  if (2 * p >= q) throw InvalidArgument("construct_podd: requires p < q/2");
  const double phi = kPi * static_cast<double>(p) / static_cast<double>(q);
  std::vector<double> centers, scales;
  std::vector<CapPair> adjacency;
  for (long long j = 1; j < q; ++j) {
    centers.push_back(kPi * static_cast<double>((j * p) % (2 * q)) / static_cast<double>(q));
    scales.push_back(std::sin(kPi * static_cast<double>(j) / static_cast<double>(q)));
    if (j + 1 < q) {
      adjacency.push_back({static_cast<std::size_t>(j - 1), static_cast<std::size_t>(j)});
    }
  }
  auto lawn = assemble(LawnCase::podd, phi, r, centers, scales, std::move(adjacency));
  lawn.p = p;
  lawn.q = q;
  lawn.n = q - 1;
  return lawn;
}

double trig_sum_adjacent(long long q) {
  if (q < 1) throw InvalidArgument("trig_sum_adjacent: q must be positive");
  double s = 0.0;
  const double qd = static_cast<double>(q);
  for (long long j = 0; j < q; ++j) {
    s += 2.0 * std::sin(static_cast<double>(j) * kPi / qd) * std::sin(static_cast<double>(j + 1) * kPi / qd);
  }
  return s;
}

double trig_sum_squares(long long q) {
  if (q < 1) throw InvalidArgument("trig_sum_squares: q must be positive");
  double s = 0.0;
  const double qd = static_cast<double>(q);
  for (long long j = 0; j < q; ++j) {
    const double x = std::sin(static_cast<double>(j) * kPi / qd);
    s += 2.0 * x * x;
  }
  return s;
}

}  // namespace grasshopper
