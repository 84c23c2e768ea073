#include "grasshopper/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "grasshopper/errors.hpp"

namespace grasshopper {

namespace {

GaussRule compute_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) {
        p1 = x;
        p0 = 1.0;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return rule;
}

double tensor(double r, double s, const std::function<double(double, double)>& f, int n) {
  const GaussRule& rule = gauss_legendre(n);
  const double half_pi = std::numbers::pi / 2.0;
  const double cos_r = std::cos(r);
  double total = 0.0;
  // g in [0, pi/2] and a in [-pi/2, pi/2] both mapped from [-1, 1].
  for (int i = 0; i < n; ++i) {
    const double g = half_pi * 0.5 * (rule.nodes[static_cast<std::size_t>(i)] + 1.0);
    const double v = s * r * std::sin(g);
    const double dv = s * r * std::cos(g) * half_pi * 0.5;
    const double big_u = std::acos(std::min(1.0, cos_r / std::cos(v / s)));
    double inner = 0.0;
    for (int j = 0; j < n; ++j) {
      const double a = half_pi * rule.nodes[static_cast<std::size_t>(j)];
      const double u = big_u * std::sin(a);
      const double du = big_u * std::cos(a) * half_pi;
      inner += rule.weights[static_cast<std::size_t>(j)] * du * f(u, v);
    }
    total += rule.weights[static_cast<std::size_t>(i)] * dv * std::cos(v) * inner;
  }
  return total;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  if (n < 1) throw InvalidArgument("gauss_legendre: n must be positive");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussRule>(compute_rule(n));
  return *slot;
}

QuadratureResult integrate_cap_region(double r, double s,
                                      const std::function<double(double, double)>& f,
                                      const QuadratureOptions& options) {
  if (!(r > 0.0 && r < std::numbers::pi / 2.0) || !(s >= 0.0 && s <= 1.0)) {
    throw InvalidArgument("integrate_cap_region: need 0 < r < pi/2 and 0 <= s <= 1");
  }
  if (options.min_order < 1 || options.max_order < options.min_order || !(options.rel_tol > 0.0)) {
    throw InvalidArgument("integrate_cap_region: bad options");
  }
  if (s == 0.0) return {0.0, 0.0, 0};
  int n = options.min_order;
  double prev = tensor(r, s, f, n);
  std::ostringstream history;
  history << "n=" << n << ": " << prev;
  while (2 * n <= options.max_order) {
    n *= 2;
    const double cur = tensor(r, s, f, n);
    const double diff = std::abs(cur - prev);
    history << "; n=" << n << ": " << cur;
    if (diff <= options.rel_tol * std::abs(cur) || (cur == 0.0 && prev == 0.0)) {
      return {cur, diff, n};
    }
    prev = cur;
  }
  throw NumericError("integrate_cap_region: no convergence within order " +
                     std::to_string(options.max_order) + " (" + history.str() + ")");
}

}  // namespace grasshopper
