#include <algorithm>
#include <atomic>
#include <numbers>
#include <sstream>
#include <thread>
#include <vector>

#include "commands.hpp"
#include "grasshopper/circle_lawns.hpp"
#include "grasshopper/serialization.hpp"

namespace grasshopper::cli {

namespace {

constexpr const char* kSweepCsvVersion = "# grasshopper circle-sweep v1";

struct SweepRow {
  RationalAngle jump;
  OptimalValue single;
  OptimalValue pair;
};

std::vector<RationalAngle> rational_grid(long long max_q) {
  std::vector<std::pair<long long, long long>> fracs;
  for (long long q = 1; q <= max_q; ++q) {
    for (long long p = 0; p < 2 * q; ++p) {
      if (gcd_ll(p, q) == 1) fracs.emplace_back(p, q);
    }
  }
  std::sort(fracs.begin(), fracs.end(), [](const auto& a, const auto& b) {
    return a.first * b.second < b.first * a.second;
  });
  std::vector<RationalAngle> out;
  for (const auto& [p, q] : fracs) out.push_back(RationalAngle::from_reduced(BigInt(p), BigInt(q)));
  return out;
}

std::vector<RationalAngle> float_grid(std::uint64_t n) {
  std::vector<RationalAngle> out;
  for (std::uint64_t k = 0; k < n; ++k) {
    out.push_back(RationalAngle::from_radians((static_cast<double>(k) + 0.5) * 2.0 * std::numbers::pi /
                                              static_cast<double>(n)));
  }
  return out;
}

void fill(std::vector<SweepRow>& rows, unsigned threads) {
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      rows[i].single = optimal_antipodal_value(rows[i].jump, LawnMode::single);
      rows[i].pair = optimal_antipodal_value(rows[i].jump, LawnMode::pair);
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
}

}  // namespace

int cmd_sweep(const RunConfig& c) {
  if ((c.max_q > 0) == (c.float_grid > 0)) throw UsageError("sweep: give exactly one of --max-q or --float-grid");
  if (c.max_q > 100000) throw UsageError("sweep: --max-q must be at most 100000");
  std::vector<SweepRow> rows;
  for (auto& j : c.max_q > 0 ? rational_grid(c.max_q) : float_grid(c.float_grid)) {
    rows.push_back({std::move(j), {}, {}});
  }
  fill(rows, c.threads);

  std::ostringstream os;
  os << kSweepCsvVersion << "\njump_num,jump_den_or_float,single_optimum,single_attained,pair_optimum,pair_attained\n";
  for (const auto& r : rows) {
    if (r.jump.is_exact()) {
      os << r.jump.numerator().str() << ',' << r.jump.denominator().str();
    } else {
      os << ',' << format_double(r.jump.radians());
    }
    os << ',' << format_scalar(r.single.value) << ',' << (r.single.attained ? 1 : 0) << ','
       << format_scalar(r.pair.value) << ',' << (r.pair.attained ? 1 : 0) << '\n';
  }
  emit(c, os.str());
  return kSuccess;
}

}  // namespace grasshopper::cli
