#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grasshopper/arc_set.hpp"
#include "grasshopper/sphere_lawns.hpp"

namespace grasshopper::oracle_test {

/// Failed property descriptions; empty when everything held.
using Failures = std::vector<std::string>;

/// Inclusion-exclusion, rotation invariance, complement involution,
/// commutativity, associativity and idempotence of union/intersection,
/// canonical-form stability and agreement of measure with the grid oracle,
/// over `cases` random exact arc sets.
Failures arc_set_properties(std::uint64_t seed, int cases);

/// x in lawn XOR antipode(x) in lawn, for `points` uniform random points.
Failures sphere_antipodality(const CoggedLawn& lawn, std::uint64_t seed, int points);

/// Every constructed circle lawn that should be antipodal is, at every cell.
Failures circle_antipodality();

}  // namespace grasshopper::oracle_test
