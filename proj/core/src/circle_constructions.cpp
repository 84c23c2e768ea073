#include <cmath>
#include <iterator>
#include <map>
#include <numbers>
#include <string>

#include "grasshopper/circle_lawns.hpp"
#include "grasshopper/errors.hpp"

namespace grasshopper {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr long long kIrrationalIterationCap = 10'000'000;

void require_coprime(long long p, long long q, const char* where) {
  if (gcd_ll(p, q) != 1) {
    throw InvalidArgument(std::string(where) + ": p=" + std::to_string(p) + " and q=" +
                          std::to_string(q) + " are not coprime");
  }
}

// Float union of arcs on [0, 2*pi) kept as merged, non-wrapping pieces.
class CircleCover {
 public:
  double free_length(double start, double len) const {
    if (start + len <= kTwoPi) return len - covered(start, start + len);
    return len - covered(start, kTwoPi) - covered(0.0, start + len - kTwoPi);
  }

  void insert(double start, double len) {
    if (start + len <= kTwoPi) {
      insert_linear(start, start + len);
    } else {
      insert_linear(start, kTwoPi);
      insert_linear(0.0, start + len - kTwoPi);
    }
  }

  // Smallest d such that [start, start + d) contains `need` of uncovered length.
  double advance(double start, double need) const {
    double pos = start;
    double traveled = 0.0;
    for (int guard = 0; guard < 4 * static_cast<int>(pieces_.size()) + 8; ++guard) {
      if (pos >= kTwoPi) pos -= kTwoPi;
      auto it = pieces_.upper_bound(pos);
      if (it != pieces_.begin()) {
        auto prev = std::prev(it);
        if (pos < prev->second) {
          traveled += prev->second - pos;
          pos = prev->second;
          continue;
        }
      }
      const double next = it == pieces_.end() ? kTwoPi : it->first;
      const double gap = next - pos;
      if (gap >= need) return traveled + need;
      need -= gap;
      traveled += gap;
      pos = next;
    }
    throw NumericError("construct_irrational: could not place the closing arc");
  }

  const std::map<double, double>& pieces() const { return pieces_; }

 private:
  double covered(double lo, double hi) const {
    double total = 0.0;
    auto it = pieces_.upper_bound(lo);
    if (it != pieces_.begin()) --it;
    for (; it != pieces_.end() && it->first < hi; ++it) {
      const double a = std::max(lo, it->first);
      const double b = std::min(hi, it->second);
      if (b > a) total += b - a;
    }
    return total;
  }

  void insert_linear(double lo, double hi) {
    if (!(hi > lo)) return;
    auto it = pieces_.upper_bound(lo);
    if (it != pieces_.begin()) {
      auto prev = std::prev(it);
      if (prev->second >= lo) {
        lo = prev->first;
        hi = std::max(hi, prev->second);
        it = pieces_.erase(prev);
      }
    }
    while (it != pieces_.end() && it->first <= hi) {
      hi = std::max(hi, it->second);
      it = pieces_.erase(it);
    }
    pieces_.emplace(lo, hi);
  }

  std::map<double, double> pieces_;
};

}  // namespace

ArcSet construct_general(const Angle& length, long long p, long long q) {
  if (!(length > Angle()) || !(length < Angle::full_turn())) {
    throw InvalidArgument("construct_general: length must lie in (0, 2pi)");
  }
  if (q < 1) throw InvalidArgument("construct_general: q must be >= 1");
  require_coprime(p, q, "construct_general");
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(q));
  const Angle piece = length / Scalar(q);
  for (long long j = 0; j < q; ++j) {
    const Angle start = Angle::pi_times(Rational(2 * j, q));
    arcs.push_back({start, start + piece});
  }
  return ArcSet::normalize(arcs);
}

ArcSet construct_irrational(double length, double jump, double eps) {
  if (!(length > 0.0) || !(length < kTwoPi)) {
    throw InvalidArgument("construct_irrational: length must lie in (0, 2pi)");
  }
  if (!(eps > 0.0) || !(eps < length)) {
    throw InvalidArgument("construct_irrational: need 0 < eps < length");
  }
  if (!std::isfinite(jump)) throw InvalidArgument("construct_irrational: jump must be finite");

  CircleCover cover;
  double total = 0.0;
  for (long long j = 0;; ++j) {
    if (j >= kIrrationalIterationCap) {
      throw NumericError("construct_irrational: accumulation did not reach the target length");
    }
    double start = std::fmod(static_cast<double>(j) * jump, kTwoPi);
    if (start < 0) start += kTwoPi;
    if (start >= kTwoPi) start = 0.0;
    const double added = cover.free_length(start, eps);
    if (total + added >= length) {
      // j is K: top up with [K*jump, K*jump + delta).
      const double delta = cover.advance(start, length - total);
      cover.insert(start, delta);
      break;
    }
    cover.insert(start, eps);
    total += added;
  }

  std::vector<Arc> arcs;
  arcs.reserve(cover.pieces().size());
  for (const auto& [lo, hi] : cover.pieces()) {
    arcs.push_back({Angle::from_radians(lo), Angle::from_radians(hi)});
  }
  return ArcSet::normalize(arcs);
}

ArcSet construct_antipodal_even(long long q) {
  if (q < 1 || q % 2 == 0) {
    throw InvalidArgument("construct_antipodal_even: q must be odd and positive (got " +
                          std::to_string(q) + ")");
  }
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(q));
  for (long long j = 0; j < q; ++j) {
    arcs.push_back({Angle::pi_times(Rational(2 * j, q)), Angle::pi_times(Rational(2 * j + 1, q))});
  }
  return ArcSet::normalize(arcs);
}

OddAntipodalLawns construct_antipodal_odd(long long p, long long q) {
  if (q < 2) throw InvalidArgument("construct_antipodal_odd: q must be >= 2");
  if (p % 2 == 0) throw InvalidArgument("construct_antipodal_odd: p must be odd");
  require_coprime(p, q, "construct_antipodal_odd");

  std::vector<Arc> orbit;
  std::vector<Arc> demi;
  orbit.reserve(static_cast<std::size_t>(q));
  demi.reserve(2 * static_cast<std::size_t>(q));
  const Angle width = Angle::pi_times(Rational(1, q));
  const Angle half_width = Angle::pi_times(Rational(1, 2 * q));
  for (long long j = 0; j < q; ++j) {
    const Angle at = Angle::pi_times(Rational(j * p, q));
    orbit.push_back({at, at + width});
    demi.push_back({at, at + half_width});
    demi.push_back({-at - half_width, -at});
  }
  return {ArcSet::normalize(orbit), ArcSet::normalize(demi)};
}

}  // namespace grasshopper
