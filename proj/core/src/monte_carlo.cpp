#include "grasshopper/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

#include "grasshopper/errors.hpp"

namespace grasshopper {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t run_batch(const LawnPredicate& lawn, double phi, std::uint64_t seed,
                        std::uint64_t batch, std::uint64_t count) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(batch)));
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uint64_t hits = 0;
  std::uint64_t accepted = 0;
  std::uint64_t drawn = 0;
  const std::uint64_t limit = 1000 * kMcBatchSize;
  while (accepted < count) {
    if (++drawn > limit && accepted == 0) {
      throw NumericError("retention_mc: lawn rejected every sampled start point");
    }
    const double z = unit(rng);
    const double theta = angle(rng);
    const SpherePoint x(theta, std::asin(z));
    if (!lawn(x)) continue;
    ++accepted;
    if (lawn(jump(x, angle(rng), phi))) ++hits;
  }
  return hits;
}

}  // namespace

McEstimate retention_mc(const LawnPredicate& lawn, double phi, std::uint64_t n_samples,
                        std::uint64_t seed, unsigned threads) {
  if (n_samples == 0) throw InvalidArgument("retention_mc: n_samples must be positive");
  if (!(phi > 0.0 && phi < std::numbers::pi)) {
    throw InvalidArgument("retention_mc: phi must lie in (0, pi)");
  }
  const std::uint64_t batches = (n_samples + kMcBatchSize - 1) / kMcBatchSize;
  std::vector<std::uint64_t> hits(batches, 0);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, batches));

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&]() {
    try {
      for (std::uint64_t b = next++; b < batches && !failed; b = next++) {
        const std::uint64_t count = std::min(kMcBatchSize, n_samples - b * kMcBatchSize);
        hits[b] = run_batch(lawn, phi, seed, b, count);
      }
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::uint64_t total = 0;
  for (auto h : hits) total += h;
  McEstimate out;
  out.samples = n_samples;
  out.seed = seed;
  out.retention = static_cast<double>(total) / static_cast<double>(n_samples);
  out.std_error = std::sqrt(out.retention * (1.0 - out.retention) / static_cast<double>(n_samples));
  return out;
}

McEstimate retention_mc(const CoggedLawn& lawn, double phi, std::uint64_t n_samples,
                        std::uint64_t seed, unsigned threads) {
  return retention_mc([&lawn](const SpherePoint& x) { return lawn.contains(x); }, phi, n_samples,
                      seed, threads);
}

}  // namespace grasshopper
