#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace grasshopper::oracle_test {

double haversine(double theta1, double delta1, double theta2, double delta2) {
  const double dlat = delta2 - delta1;
  const double dlon = theta2 - theta1;
  const double a = std::sin(dlat / 2) * std::sin(dlat / 2) +
                   std::cos(delta1) * std::cos(delta2) * std::sin(dlon / 2) * std::sin(dlon / 2);
  return 2.0 * std::atan2(std::sqrt(a), std::sqrt(1.0 - a));
}

double nav_bearing(double theta1, double delta1, double theta2, double delta2) {
  const double dlon = theta2 - theta1;
  const double y = std::sin(dlon) * std::cos(delta2);
  const double x = std::cos(delta1) * std::sin(delta2) - std::sin(delta1) * std::cos(delta2) * std::cos(dlon);
  const double from_north = std::atan2(y, x);
  return std::remainder(M_PI / 2.0 - from_north, 2.0 * M_PI);
}

namespace {

long long to_ll(const BigInt& x) { return x.convert_to<long long>(); }

std::vector<int> cells_of(const ArcSet& lawn, long long n) {
  std::vector<int> cells(static_cast<std::size_t>(2 * n), 0);
  for (const auto& a : lawn.arcs()) {
    const Rational lo = a.start.pi_multiple() * n;
    const Rational hi = a.end.pi_multiple() * n;
    if (denominator(lo) != 1 || denominator(hi) != 1) throw std::domain_error("off grid");
    for (long long c = to_ll(numerator(lo)); c < to_ll(numerator(hi)); ++c) {
      cells[static_cast<std::size_t>(c % (2 * n))] = 1;
    }
  }
  return cells;
}

long long grid_for(const std::vector<const ArcSet*>& sets, const Rational& jump) {
  long long n = to_ll(denominator(jump));
  for (const ArcSet* s : sets) {
    for (const auto& a : s->arcs()) {
      n = std::lcm(n, to_ll(denominator(a.start.pi_multiple())));
      n = std::lcm(n, to_ll(denominator(a.end.pi_multiple())));
    }
  }
  return n;
}

}  // namespace

Rational grid_retention_two(const ArcSet& from, const ArcSet& to, const Rational& jump_over_pi) {
  const long long n = grid_for({&from, &to}, jump_over_pi);
  const auto f = cells_of(from, n);
  const auto g = cells_of(to, n);
  const long long m = 2 * n;
  const long long k = ((to_ll(numerator(Rational(jump_over_pi * n))) % m) + m) % m;
  long long hits = 0, mass = 0;
  for (long long c = 0; c < m; ++c) {
    if (!f[static_cast<std::size_t>(c)]) continue;
    mass += 2;
    hits += g[static_cast<std::size_t>((c + k) % m)] + g[static_cast<std::size_t>((c - k + m) % m)];
  }
  if (mass == 0) throw std::domain_error("empty lawn");
  return Rational(hits, mass);
}

Rational grid_retention(const ArcSet& lawn, const Rational& jump_over_pi) {
  return grid_retention_two(lawn, lawn, jump_over_pi);
}

BruteApprox brute_even_odd(double x, long long max_q) {
  BruteApprox best{0, 0, INFINITY};
  const Rational xr(x);
  Rational best_err(-1);
  for (long long q = 1; q <= max_q; q += 2) {
    const auto top = static_cast<long long>(std::ceil(x * static_cast<double>(q))) + 2;
    for (long long p = 0; p <= top; p += 2) {
      if (std::gcd(p, q) != 1) continue;
      const Rational err = abs(xr - Rational(p, q));
      if (err > Rational(1, q * q)) continue;
      if (best_err < 0 || err < best_err) {
        best_err = err;
        best = {p, q, err.convert_to<double>()};
      }
    }
  }
  return best;
}

std::vector<BruteApprox> brute_best_approximations(double x, long long max_q) {
  std::vector<BruteApprox> out;
  double record = INFINITY;
  for (long long q = 1; q <= max_q; ++q) {
    const auto p = static_cast<long long>(std::llround(x * static_cast<double>(q)));
    const double err = std::abs(q * x - static_cast<double>(p));
    if (err < record) {
      record = err;
      out.push_back({p / std::gcd(p, q), q / std::gcd(p, q), std::abs(x - static_cast<double>(p) / q)});
    }
  }
  return out;
}

ArcSet random_rational_arcs(std::mt19937_64& rng, int max_arcs, long long den) {
  std::uniform_int_distribution<int> count(0, max_arcs);
  std::uniform_int_distribution<long long> pos(0, 2 * den - 1);
  std::uniform_int_distribution<long long> len(0, den);
  std::vector<Arc> raw;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    const long long s = pos(rng);
    raw.push_back({Angle::pi_times(Rational(s, den)), Angle::pi_times(Rational(s + len(rng), den))});
  }
  return ArcSet::normalize(raw);
}

double equator_crossing(double theta, double v, double phi) {
  double lo = 0.0, hi = M_PI;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (haversine(theta, v, theta + mid, 0.0) < phi) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace grasshopper::oracle_test
