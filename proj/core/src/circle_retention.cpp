#include <algorithm>

#include "grasshopper/circle_lawns.hpp"
#include "grasshopper/errors.hpp"

namespace grasshopper {

namespace {

// Common refinement of `base` and `other` shifted back by `shift`: on every
// cell of the result both f(t) and g(t + shift) are constant.
std::vector<Angle> refine(const std::vector<Angle>& base, const std::vector<Angle>& other,
                          const Angle& shift) {
  std::vector<Angle> cuts;
  cuts.reserve(base.size() + other.size());
  cuts.insert(cuts.end(), base.begin(), base.end());
  for (const auto& b : other) cuts.push_back((b - shift).wrapped());
  std::sort(cuts.begin(), cuts.end(), [](const Angle& x, const Angle& y) { return x < y; });
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](const Angle& x, const Angle& y) { return approx_equal(x, y); }),
             cuts.end());
  return cuts;
}

template <typename Visit>
void for_each_cell(const std::vector<Angle>& cuts, Visit&& visit) {
  const Angle two_pi = Angle::full_turn();
  const Scalar two(2);
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const Angle& lo = cuts[i];
    const Angle hi = i + 1 < cuts.size() ? cuts[i + 1] : cuts.front() + two_pi;
    visit(hi - lo, (lo + hi) / two);
  }
}

}  // namespace

Angle overlap_integral(const StepDensityLawn& a, const StepDensityLawn& b, const Angle& shift) {
  const auto cuts = refine(a.breakpoints(), b.breakpoints(), shift);
  const Scalar zero(0);
  Angle total;
  for_each_cell(cuts, [&](const Angle& len, const Angle& mid) {
    const Scalar fa = a.value_at(mid);
    if (fa == zero) return;
    const Scalar fb = b.value_at(mid + shift);
    if (fb == zero) return;
    total += len * (fa * fb);
  });
  return total;
}

Scalar retention_two(const StepDensityLawn& from, const StepDensityLawn& to, const Angle& jump) {
  const Angle mass = from.mass();
  if (!(mass > Angle())) throw UndefinedRetention("retention: starting lawn has zero mass");
  const Angle forward = overlap_integral(from, to, jump);
  const Angle backward = overlap_integral(from, to, -jump);
  return (forward + backward) / (mass * Scalar(2));
}

Scalar retention(const StepDensityLawn& lawn, const Angle& jump) {
  return retention_two(lawn, lawn, jump);
}

Scalar retention(const ArcSet& lawn, const Angle& jump) {
  if (lawn.empty()) throw UndefinedRetention("retention: empty lawn");
  return retention(StepDensityLawn::from_arcs(lawn), jump);
}

Scalar retention_two(const ArcSet& from, const ArcSet& to, const Angle& jump) {
  if (from.empty()) throw UndefinedRetention("retention_two: empty starting lawn");
  return retention_two(StepDensityLawn::from_arcs(from), StepDensityLawn::from_arcs(to), jump);
}

bool is_antipodal(const StepDensityLawn& lawn) {
  const Angle half_turn = Angle::pi_times(Rational(1));
  const auto cuts = refine(lawn.breakpoints(), lawn.breakpoints(), half_turn);
  const Scalar one(1);
  bool ok = true;
  for_each_cell(cuts, [&](const Angle& len, const Angle& mid) {
    if (!ok || !(len > Angle())) return;
    const Scalar sum = lawn.value_at(mid) + lawn.value_at(mid + half_turn);
    if (!approx_equal(sum, one)) ok = false;
  });
  return ok;
}

bool is_antipodal(const ArcSet& lawn) { return is_antipodal(StepDensityLawn::from_arcs(lawn)); }

}  // namespace grasshopper
