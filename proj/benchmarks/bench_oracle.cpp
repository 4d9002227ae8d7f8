#include "ahc/cubic_systems.hpp"
#include "ahc/oracle.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_RankNodes(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  const auto sys = ahc::LinearSystem::nodes(r, d, ahc::to_int64(ahc::n_bounds(r, d).n_plus));
  ahc::FieldConfig cfg;
  cfg.trials = 1;
  for (auto _ : state) benchmark::DoNotOptimize(ahc::dimension(sys, cfg).dim);
  state.counters["columns"] = static_cast<double>(ahc::to_int64(sys.sections()));
}
BENCHMARK(BM_RankNodes)->Args({3, 6})->Args({4, 6})->Args({5, 5})->Args({6, 5})->Args({7, 5})
    ->Unit(benchmark::kMillisecond);

void BM_IsEmptyCubic(benchmark::State& state) {
  const auto sys = ahc::cubic::ah3(static_cast<int>(state.range(0)));
  ahc::FieldConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(ahc::is_empty(sys, cfg));
}
BENCHMARK(BM_IsEmptyCubic)->DenseRange(5, 9)->Unit(benchmark::kMillisecond);

void BM_SampledSubspace(benchmark::State& state) {
  const auto sys = ahc::cubic::k1(static_cast<int>(state.range(0)));
  ahc::FieldConfig cfg;
  cfg.trials = 1;
  for (auto _ : state) benchmark::DoNotOptimize(ahc::dimension(sys, cfg).dim);
}
BENCHMARK(BM_SampledSubspace)->Arg(5)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
