#pragma once

#include <span>
#include <string>
#include <vector>

#include "grasshopper/angle.hpp"

namespace grasshopper {

/// Half-open arc [start, end) on the circle.
///
/// In canonical form start lies in [0, 2*pi) and start < end <= start + 2*pi,
/// so an arc through 0 has end > 2*pi. As raw input any two angles are
/// accepted: the arc runs counter-clockwise from start to end, start == end is
/// empty and end - start >= 2*pi is the full circle.
struct Arc {
  Angle start;
  Angle end;

  Angle length() const { return end - start; }
  bool is_exact() const { return start.is_exact() && end.is_exact(); }
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Finite union of disjoint half-open arcs, kept in a canonical form: arcs are
/// sorted by start, pairwise disjoint and never touching, with at most one
/// (the last) running through 0. Equal sets on the exact path have identical
/// representations.
class ArcSet {
 public:
  ArcSet() = default;

  static ArcSet normalize(std::span<const Arc> raw);
  static ArcSet normalize(std::initializer_list<Arc> raw) {
    return normalize(std::span<const Arc>(raw.begin(), raw.size()));
  }
  static ArcSet full();
  /// Adopts arcs already in canonical form, unchanged. Throws InvalidArgument
  /// if they are not canonical.
  static ArcSet from_canonical(std::vector<Arc> arcs);

  const std::vector<Arc>& arcs() const { return arcs_; }
  bool empty() const { return arcs_.empty(); }
  bool is_full() const;
  bool is_exact() const;

  Angle measure() const;
  bool contains(const Angle& point) const;
  /// Distinct arc endpoints wrapped into [0, 2*pi), sorted.
  std::vector<Angle> endpoints() const;

  std::string to_string() const;

  friend bool operator==(const ArcSet&, const ArcSet&) = default;

 private:
  std::vector<Arc> arcs_;
};

Angle measure(const ArcSet& s);
ArcSet unite(const ArcSet& a, const ArcSet& b);
ArcSet intersect(const ArcSet& a, const ArcSet& b);
ArcSet complement(const ArcSet& a);
ArcSet rotate(const ArcSet& a, const Angle& by);

}  // namespace grasshopper
