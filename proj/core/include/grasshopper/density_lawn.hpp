#pragma once

#include <vector>

#include "grasshopper/angle.hpp"
#include "grasshopper/arc_set.hpp"
#include "grasshopper/scalar.hpp"

namespace grasshopper {

/// Piecewise-constant density f: circle -> [0, 1].
///
/// Breakpoints are strictly increasing in [0, 2*pi). Cell i is
/// [b_i, b_{i+1}); the last cell wraps round to b_0 + 2*pi. An indicator lawn
/// is the special case of values in {0, 1}.
class StepDensityLawn {
 public:
  /// Throws InvalidArgument on unsorted breakpoints or values outside [0, 1].
  StepDensityLawn(std::vector<Angle> breakpoints, std::vector<Scalar> values);

  static StepDensityLawn from_arcs(const ArcSet& s);
  static StepDensityLawn uniform(const Scalar& density);

  const std::vector<Angle>& breakpoints() const { return breakpoints_; }
  const std::vector<Scalar>& values() const { return values_; }
  std::size_t cell_count() const { return values_.size(); }

  Scalar value_at(const Angle& theta) const;
  /// Integral of f over the circle.
  Angle mass() const;
  bool is_exact() const;

 private:
  std::vector<Angle> breakpoints_;
  std::vector<Scalar> values_;
};

}  // namespace grasshopper
