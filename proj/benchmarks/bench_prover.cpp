#include "ahc/combinatorics.hpp"
#include "ahc/prover.hpp"
#include "ahc/verifier.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_ProveFresh(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  const auto n = ahc::to_int64(ahc::n_bounds(r, d).n_minus);
  for (auto _ : state) {
    ahc::Prover prover;
    benchmark::DoNotOptimize(prover.prove(r, d, n).ok());
  }
}
BENCHMARK(BM_ProveFresh)->Args({3, 5})->Args({5, 6})->Args({8, 8})->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  ahc::Prover prover;
  const auto cert = *prover.prove(r, d, ahc::to_int64(ahc::n_bounds(r, d).n_minus)).certificate;
  for (auto _ : state) benchmark::DoNotOptimize(ahc::verify(cert).accepted);
}
BENCHMARK(BM_Verify)->Args({5, 6})->Args({8, 8})->Unit(benchmark::kMillisecond);

}  // namespace
