// Microbenchmarks for the hot path: nerve construction, box enumeration
// with and without a shared rank cache, sweep throughput, and the closed
// form it is measured against.
#include <benchmark/benchmark.h>

#include "torivan/cohomology.hpp"
#include "torivan/divisor.hpp"
#include "torivan/fan.hpp"

using namespace torivan;

namespace {

ToricDivisor onept_divisor(const Fan& f, int a, int b) {
  return divisor_from_params(f, BlowupParams{3, 1, {Int(a)}, Int(b)});
}

void BM_NerveRanksDenseMask(benchmark::State& state) {
  Fan f = make_blowup_fan(3, 2);
  const std::uint64_t mask = (1u << f.rays.size()) - 1;  // every ray active
  for (auto _ : state) {
    NerveRankCache cache(f);  // fresh, so each iteration rebuilds the nerve
    benchmark::DoNotOptimize(cache.for_mask(mask));
  }
}
BENCHMARK(BM_NerveRanksDenseMask);

void BM_TotalCohomologyFreshCache(benchmark::State& state) {
  Fan f = make_blowup_fan(3, 1);
  ToricDivisor d = onept_divisor(f, 2, 0);
  for (auto _ : state) benchmark::DoNotOptimize(total_cohomology(f, d));
}
BENCHMARK(BM_TotalCohomologyFreshCache);

void BM_TotalCohomologySharedCache(benchmark::State& state) {
  Fan f = make_blowup_fan(3, 1);
  ToricDivisor d = onept_divisor(f, 2, 0);
  NerveRankCache cache(f);
  for (auto _ : state) benchmark::DoNotOptimize(total_cohomology(f, d, {}, cache));
}
BENCHMARK(BM_TotalCohomologySharedCache);

void BM_SweepSmallGrid(benchmark::State& state) {
  SweepGrid g;
  g.n = 3;
  g.points = 2;
  g.a_lo = -1;
  g.a_hi = 1;
  g.b_lo = -1;
  g.b_hi = 1;
  g.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_sweep(g));
  state.SetItemsProcessed(state.iterations() * 27);  // 3^2 a-tuples x 3 b values
}
BENCHMARK(BM_SweepSmallGrid)->Arg(1)->Arg(4);

void BM_ClosedFormH1(benchmark::State& state) {
  const std::vector<Int> lambda{0, 9, 0, 0, 4};
  for (auto _ : state) benchmark::DoNotOptimize(h1_closed_form_onept(3, lambda));
}
BENCHMARK(BM_ClosedFormH1);

}  // namespace

BENCHMARK_MAIN();
