#include "grasshopper/density_lawn.hpp"

#include <algorithm>

#include "grasshopper/errors.hpp"

namespace grasshopper {

StepDensityLawn::StepDensityLawn(std::vector<Angle> breakpoints, std::vector<Scalar> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.empty()) throw InvalidArgument("StepDensityLawn: no breakpoints");
  if (breakpoints_.size() != values_.size()) {
    throw InvalidArgument("StepDensityLawn: need one value per cell");
  }
  const Angle two_pi = Angle::full_turn();
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    const auto& b = breakpoints_[i];
    if (b < Angle() || !(b < two_pi)) {
      throw InvalidArgument("StepDensityLawn: breakpoint " + b.to_string() + " outside [0, 2pi)");
    }
    if (i > 0 && !(breakpoints_[i - 1] < b)) {
      throw InvalidArgument("StepDensityLawn: breakpoints must be strictly increasing");
    }
    if (values_[i] < Scalar(0) || values_[i] > Scalar(1)) {
      throw InvalidArgument("StepDensityLawn: density " + values_[i].to_string() +
                            " outside [0, 1]");
    }
  }
}

StepDensityLawn StepDensityLawn::from_arcs(const ArcSet& s) {
  std::vector<Angle> pts = s.endpoints();
  if (pts.empty()) pts.push_back(Angle());
  std::vector<Scalar> values;
  values.reserve(pts.size());
  const Angle two_pi = Angle::full_turn();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Angle& lo = pts[i];
    const Angle hi = i + 1 < pts.size() ? pts[i + 1] : pts.front() + two_pi;
    const Angle mid = (lo + hi) / Scalar(2);
    values.push_back(s.contains(mid) ? Scalar(1) : Scalar(0));
  }
  return StepDensityLawn(std::move(pts), std::move(values));
}

StepDensityLawn StepDensityLawn::uniform(const Scalar& density) {
  return StepDensityLawn({Angle()}, {density});
}

Scalar StepDensityLawn::value_at(const Angle& theta) const {
  const Angle x = theta.wrapped();
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x,
                             [](const Angle& a, const Angle& b) { return a < b; });
  if (it == breakpoints_.begin()) return values_.back();
  return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

Angle StepDensityLawn::mass() const {
  const Angle two_pi = Angle::full_turn();
  Angle total;
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    const Angle hi = i + 1 < breakpoints_.size() ? breakpoints_[i + 1] : breakpoints_.front() + two_pi;
    total += (hi - breakpoints_[i]) * values_[i];
  }
  return total;
}

bool StepDensityLawn::is_exact() const {
  return std::all_of(breakpoints_.begin(), breakpoints_.end(), [](const Angle& a) { return a.is_exact(); }) &&
         std::all_of(values_.begin(), values_.end(), [](const Scalar& v) { return v.is_exact(); });
}

}  // namespace grasshopper
