#include <benchmark/benchmark.h>

#include "grasshopper/br_table.hpp"
#include "grasshopper/circle_lawns.hpp"
#include "grasshopper/diophantine.hpp"
#include "grasshopper/monte_carlo.hpp"
#include "grasshopper/oracle.hpp"
#include "grasshopper/sphere_geom.hpp"
#include "grasshopper/sphere_lawns.hpp"

using namespace grasshopper;

static void BM_ExactRetentionOrbitLawn(benchmark::State& state) {
  const long long q = state.range(0);
  const auto lawns = construct_antipodal_odd(3, q);
  const Angle jump = Angle::pi_times(Rational(3, q));
  for (auto _ : state) benchmark::DoNotOptimize(retention(lawns.orbit_lawn, jump));
}
BENCHMARK(BM_ExactRetentionOrbitLawn)->Arg(8)->Arg(32)->Arg(128);

static void BM_ExhaustiveOrbit(benchmark::State& state) {
  const long long q = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_orbit_max(1, q));
}
BENCHMARK(BM_ExhaustiveOrbit)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_ApproxEvenOdd(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(approx_even_odd(1.4142135623730951, state.range(0)));
}
BENCHMARK(BM_ApproxEvenOdd)->Arg(1000)->Arg(100000);

static void BM_BetaSum(benchmark::State& state) {
  const CapSpec target{0.0, 1e-3, 1.0, CapSpec::Polarity::cap};
  double u = -9e-4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(beta_sum(u, 2e-4, 1.2, target));
    u = u > 9e-4 ? -9e-4 : u + 1e-5;
  }
}
BENCHMARK(BM_BetaSum);

static void BM_BrPairQuadrature(benchmark::State& state) {
  double r = 1e-3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(br_pair(1.2, r, 1.0, 1.0));
    r = r > 2e-3 ? 1e-3 : r * 1.01;
  }
}
BENCHMARK(BM_BrPairQuadrature)->Unit(benchmark::kMillisecond);

static void BM_LlMinusSs(benchmark::State& state) {
  const auto lawn = construct_peven(6, 13, 1e-3);
  for (auto _ : state) benchmark::DoNotOptimize(ll_minus_ss(lawn));
}
BENCHMARK(BM_LlMinusSs)->Unit(benchmark::kMillisecond);

static void BM_MonteCarloHemisphere(benchmark::State& state) {
  const auto lawn = CoggedLawn::hemisphere(1.0);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(retention_mc(lawn, 1.0, 1 << 20, ++seed, 1));
  state.SetItemsProcessed(state.iterations() * (1 << 20));
}
BENCHMARK(BM_MonteCarloHemisphere)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
