#pragma once

#include <functional>
#include <vector>

namespace grasshopper {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point rule, n >= 1. Cached; safe to call concurrently.
const GaussRule& gauss_legendre(int n);

struct QuadratureOptions {
  double rel_tol = 1e-4;
  int min_order = 8;
  int max_order = 256;
};

struct QuadratureResult {
  double value = 0.0;
  /// |I_n - I_{n/2}| at the accepted order.
  double error = 0.0;
  int order = 0;
};

/// Integral of f(u, v) cos v du dv over the cap region
/// {|u| <= r, 0 <= v <= s * arccos(cos r / cos u)}, by a tensor rule in
/// v = s r sin(g), u = U(v) sin(a), with U(v) = arccos(cos r / cos(v/s)).
/// The order doubles from min_order until successive values agree within
/// rel_tol (relative) and throws NumericError if max_order is reached first.
/// s == 0 gives 0.
QuadratureResult integrate_cap_region(double r, double s,
                                      const std::function<double(double u, double v)>& f,
                                      const QuadratureOptions& options = {});

}  // namespace grasshopper
