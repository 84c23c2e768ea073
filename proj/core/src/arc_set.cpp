#include "grasshopper/arc_set.hpp"

#include <algorithm>
#include <string>

#include "grasshopper/errors.hpp"

namespace grasshopper {

namespace {

const Angle kZero;
const Angle kTwoPi = Angle::full_turn();

// Pieces of [0, 2*pi) that do not wrap. Used as the working representation
// for all set algebra.
struct Piece {
  Angle lo;
  Angle hi;
};

bool nonpositive_length(const Angle& lo, const Angle& hi) {
  if (lo.is_exact() && hi.is_exact()) return !(lo < hi);
  return hi.radians() - lo.radians() <= kFloatTolerance;
}

bool touches(const Angle& end, const Angle& next_start) {
  if (end.is_exact() && next_start.is_exact()) return !(end < next_start);
  return next_start.radians() <= end.radians() + kFloatTolerance;
}

bool at_zero(const Angle& a) { return approx_equal(a, kZero); }
bool at_two_pi(const Angle& a) { return approx_equal(a, kTwoPi); }

// Arc with arbitrary endpoints -> wrapped, non-wrapping pieces. Returns false
// if the arc covers the whole circle.
bool split_raw(const Arc& raw, std::vector<Piece>& out) {
  const Angle len = raw.end - raw.start;
  if (!(len < kTwoPi) || (!len.is_exact() && len.radians() >= kTwoPi.radians() - kFloatTolerance)) {
    return false;
  }
  const Angle span = len.wrapped();
  if (nonpositive_length(kZero, span)) return true;
  const Angle s = raw.start.wrapped();
  const Angle e = s + span;
  if (e <= kTwoPi) {
    out.push_back({s, e});
  } else {
    out.push_back({s, kTwoPi});
    out.push_back({kZero, e - kTwoPi});
  }
  return true;
}

std::vector<Piece> sort_and_merge(std::vector<Piece> pieces) {
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
  std::vector<Piece> merged;
  for (auto& p : pieces) {
    if (nonpositive_length(p.lo, p.hi)) continue;
    if (!merged.empty() && touches(merged.back().hi, p.lo)) {
      if (merged.back().hi < p.hi) merged.back().hi = p.hi;
    } else {
      merged.push_back(std::move(p));
    }
  }
  return merged;
}

std::vector<Piece> to_pieces(const ArcSet& s) {
  std::vector<Piece> out;
  out.reserve(s.arcs().size() + 1);
  for (const auto& a : s.arcs()) {
    if (a.end <= kTwoPi) {
      out.push_back({a.start, a.end});
    } else {
      out.push_back({a.start, kTwoPi});
      out.push_back({kZero, a.end - kTwoPi});
    }
  }
  std::sort(out.begin(), out.end(), [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
  return out;
}

// Merged pieces -> canonical arcs; a piece starting at 0 and one ending at
// 2*pi fuse into the wrapping arc.
std::vector<Arc> canonical_arcs(const std::vector<Piece>& merged) {
  std::vector<Arc> arcs;
  if (merged.empty()) return arcs;
  if (merged.size() == 1 && at_zero(merged.front().lo) && at_two_pi(merged.front().hi)) {
    arcs.push_back({kZero, kTwoPi});
    return arcs;
  }
  const bool wraps = merged.size() >= 2 && at_zero(merged.front().lo) && at_two_pi(merged.back().hi);
  const std::size_t first = wraps ? 1 : 0;
  const std::size_t last = wraps ? merged.size() - 1 : merged.size();
  for (std::size_t i = first; i < last; ++i) arcs.push_back({merged[i].lo, merged[i].hi});
  if (wraps) arcs.push_back({merged.back().lo, merged.front().hi + kTwoPi});
  return arcs;
}

}  // namespace

ArcSet ArcSet::normalize(std::span<const Arc> raw) {
  std::vector<Piece> pieces;
  pieces.reserve(raw.size() * 2);
  for (const auto& a : raw) {
    if (!split_raw(a, pieces)) return full();
  }
  ArcSet out;
  out.arcs_ = canonical_arcs(sort_and_merge(std::move(pieces)));
  return out;
}

ArcSet ArcSet::full() {
  ArcSet out;
  out.arcs_.push_back({kZero, kTwoPi});
  return out;
}

ArcSet ArcSet::from_canonical(std::vector<Arc> arcs) {
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const Arc& a = arcs[i];
    if (a.start < kZero || !(a.start < kTwoPi) || !(a.start < a.end) || a.end > a.start + kTwoPi) {
      throw InvalidArgument("ArcSet::from_canonical: arc " + std::to_string(i) + " out of range");
    }
    if (a.end > kTwoPi && i + 1 != arcs.size()) {
      throw InvalidArgument("ArcSet::from_canonical: only the last arc may wrap");
    }
    if (i > 0 && !(arcs[i - 1].end < a.start)) {
      throw InvalidArgument("ArcSet::from_canonical: arcs overlap, touch or are unsorted");
    }
  }
  if (arcs.size() > 1 && arcs.back().end > kTwoPi && !(arcs.back().end - kTwoPi < arcs.front().start)) {
    throw InvalidArgument("ArcSet::from_canonical: wrapping arc reaches the first arc");
  }
  ArcSet out;
  out.arcs_ = std::move(arcs);
  return out;
}

bool ArcSet::is_full() const {
  return arcs_.size() == 1 && at_zero(arcs_.front().start) && at_two_pi(arcs_.front().end);
}

bool ArcSet::is_exact() const {
  return std::all_of(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.is_exact(); });
}

Angle ArcSet::measure() const {
  Angle total;
  for (const auto& a : arcs_) total += a.length();
  return total;
}

bool ArcSet::contains(const Angle& point) const {
  const Angle x = point.wrapped();
  for (const auto& a : arcs_) {
    if (a.start <= x && x < a.end) return true;
    if (a.end > kTwoPi && x < a.end - kTwoPi) return true;
  }
  return false;
}

std::vector<Angle> ArcSet::endpoints() const {
  std::vector<Angle> pts;
  for (const auto& a : arcs_) {
    pts.push_back(a.start);
    pts.push_back(a.end.wrapped());
  }
  std::sort(pts.begin(), pts.end(), [](const Angle& a, const Angle& b) { return a < b; });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Angle& a, const Angle& b) { return approx_equal(a, b); }),
            pts.end());
  return pts;
}

std::string ArcSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    if (i) s += ", ";
    s += "[" + arcs_[i].start.to_string() + ", " + arcs_[i].end.to_string() + ")";
  }
  return s + "}";
}

Angle measure(const ArcSet& s) { return s.measure(); }

ArcSet unite(const ArcSet& a, const ArcSet& b) {
  std::vector<Arc> all(a.arcs());
  all.insert(all.end(), b.arcs().begin(), b.arcs().end());
  return ArcSet::normalize(all);
}

ArcSet intersect(const ArcSet& a, const ArcSet& b) {
  const auto pa = sort_and_merge(to_pieces(a));
  const auto pb = sort_and_merge(to_pieces(b));
  std::vector<Arc> out;
  std::size_t i = 0, j = 0;
  while (i < pa.size() && j < pb.size()) {
    const Angle& lo = pa[i].lo < pb[j].lo ? pb[j].lo : pa[i].lo;
    const Angle& hi = pa[i].hi < pb[j].hi ? pa[i].hi : pb[j].hi;
    if (!nonpositive_length(lo, hi)) out.push_back({lo, hi});
    if (pa[i].hi < pb[j].hi) ++i; else ++j;
  }
  return ArcSet::normalize(out);
}

ArcSet complement(const ArcSet& a) {
  const auto pieces = sort_and_merge(to_pieces(a));
  std::vector<Arc> gaps;
  Angle cursor = kZero;
  for (const auto& p : pieces) {
    if (!nonpositive_length(cursor, p.lo)) gaps.push_back({cursor, p.lo});
    cursor = p.hi;
  }
  if (!nonpositive_length(cursor, kTwoPi)) gaps.push_back({cursor, kTwoPi});
  return ArcSet::normalize(gaps);
}

ArcSet rotate(const ArcSet& a, const Angle& by) {
  if (a.is_full()) return a;
  std::vector<Arc> moved;
  moved.reserve(a.arcs().size());
  for (const auto& arc : a.arcs()) moved.push_back({arc.start + by, arc.end + by});
  return ArcSet::normalize(moved);
}

}  // namespace grasshopper
