#pragma once

#include <cstdint>
#include <functional>

#include "grasshopper/sphere_geom.hpp"
#include "grasshopper/sphere_lawns.hpp"

namespace grasshopper {

struct McEstimate {
  double retention = 0.0;
  /// Binomial standard error sqrt(p (1 - p) / n).
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

using LawnPredicate = std::function<bool(const SpherePoint&)>;

/// Samples per independent RNG stream.
inline constexpr std::uint64_t kMcBatchSize = 1ULL << 16;

/// Draws n_samples start points uniformly on the lawn (uniform on the sphere,
/// rejected if outside), a uniform direction for each, jumps phi and counts
/// landings on the lawn. Batch b uses its own generator seeded from
/// (seed, b), so the result depends only on (n_samples, seed) and not on the
/// thread count. Throws InvalidArgument if n_samples == 0 and NumericError
/// if a batch accepts nothing in 1000 * kMcBatchSize draws.
McEstimate retention_mc(const LawnPredicate& lawn, double phi, std::uint64_t n_samples,
                        std::uint64_t seed, unsigned threads = 0);
McEstimate retention_mc(const CoggedLawn& lawn, double phi, std::uint64_t n_samples,
                        std::uint64_t seed, unsigned threads = 0);

}  // namespace grasshopper
