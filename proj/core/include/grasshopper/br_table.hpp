#pragma once

#include <vector>

#include "grasshopper/quadrature.hpp"
#include "grasshopper/sphere_lawns.hpp"

namespace grasshopper {

struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

/// Integral over a cap of scale s of (beta1 + beta2) toward a target cap of
/// scale t centred phi to the east, with surface element cos v du dv.
Estimate br_pair(double phi, double r, double s, double t, const QuadratureOptions& options = {});

/// 4 * integral over a cap of scale s of beta1 cos v du dv: jumps to the
/// north minus jumps to the south.
Estimate br_north_minus_south(double phi, double r, double s,
                              const QuadratureOptions& options = {});

/// Raw (unnormalised) integrals for one lawn.
struct BrTable {
  /// Per entry of adjacency(): forward plus backward integral.
  std::vector<Estimate> aa_pairs;
  /// Per cap.
  std::vector<Estimate> an_minus_as;
  Estimate aa_total;
  Estimate an_minus_as_total;
};

BrTable br_quadrature(const CoggedLawn& lawn, const QuadratureOptions& options = {});

struct LlCertificate {
  /// 2 * aa_total - 2 * an_minus_as_total.
  Estimate value;
  Estimate aa_total;
  Estimate an_minus_as_total;
  /// value / (4 pi^2): the retention gain over the hemisphere.
  Estimate retention_gain;
};

/// Throws InvalidArgument for a plain hemisphere.
LlCertificate ll_minus_ss(const CoggedLawn& lawn, const QuadratureOptions& options = {});

}  // namespace grasshopper
