#include "grasshopper/br_table.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <utility>

#include "grasshopper/errors.hpp"
#include "grasshopper/sphere_geom.hpp"

namespace grasshopper {

Estimate br_pair(double phi, double r, double s, double t, const QuadratureOptions& options) {
  if (t == 0.0) return {};
  const CapSpec target{0.0, r, t, CapSpec::Polarity::cap};
  const auto res = integrate_cap_region(
      r, s, [&](double u, double v) { return beta_sum(u, v, phi, target).sum(); }, options);
  return {res.value, res.error};
}

Estimate br_north_minus_south(double phi, double r, double s, const QuadratureOptions& options) {
  const auto res = integrate_cap_region(
      r, s, [&](double u, double v) { return 4.0 * beta1(u, v, phi); }, options);
  return {res.value, res.error};
}

BrTable br_quadrature(const CoggedLawn& lawn, const QuadratureOptions& options) {
  const double phi = lawn.phi();
  const double r = lawn.radius();
  std::map<std::pair<double, double>, Estimate> pair_cache;
  std::map<double, Estimate> cap_cache;
  auto pair = [&](double s, double t) {
    auto it = pair_cache.find({s, t});
    if (it == pair_cache.end()) it = pair_cache.emplace(std::pair{s, t}, br_pair(phi, r, s, t, options)).first;
    return it->second;
  };
  auto cap = [&](double s) {
    auto it = cap_cache.find(s);
    if (it == cap_cache.end()) it = cap_cache.emplace(s, br_north_minus_south(phi, r, s, options)).first;
    return it->second;
  };

  BrTable table;
  for (const auto& pr : lawn.adjacency()) {
    const double s = lawn.caps()[pr.from].scale_s;
    const double t = lawn.caps()[pr.to].scale_s;
    const Estimate fwd = pair(s, t);
    const Estimate bwd = pair(t, s);
    const Estimate both{fwd.value + bwd.value, fwd.error + bwd.error};
    table.aa_pairs.push_back(both);
    table.aa_total.value += both.value;
    table.aa_total.error += both.error;
  }
  for (const auto& c : lawn.caps()) {
    const Estimate e = cap(c.scale_s);
    table.an_minus_as.push_back(e);
    table.an_minus_as_total.value += e.value;
    table.an_minus_as_total.error += e.error;
  }
  return table;
}

LlCertificate ll_minus_ss(const CoggedLawn& lawn, const QuadratureOptions& options) {
  switch (lawn.lawn_case()) {
    case LawnCase::peven:
    case LawnCase::irrational:
    case LawnCase::podd:
      break;
    default:
      throw InvalidArgument("ll_minus_ss: lawn has no cogged construction");
  }
  const BrTable table = br_quadrature(lawn, options);
  LlCertificate out;
  out.aa_total = table.aa_total;
  out.an_minus_as_total = table.an_minus_as_total;
  out.value.value = 2.0 * table.aa_total.value - 2.0 * table.an_minus_as_total.value;
  out.value.error = 2.0 * table.aa_total.error + 2.0 * table.an_minus_as_total.error;
  const double norm = 4.0 * std::numbers::pi * std::numbers::pi;
  out.retention_gain = {out.value.value / norm, out.value.error / norm};
  return out;
}

}  // namespace grasshopper
