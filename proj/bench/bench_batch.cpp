#include <benchmark/benchmark.h>

#include <vector>

#include "finger/batch.hpp"

namespace {

std::vector<finger::SimConfig> gain_sweep(int n) {
  std::vector<finger::SimConfig> out;
  for (int i = 0; i < n; ++i) {
    finger::SimConfig c;
    c.t_end = 1.0;
    c.gains.k1 = 10.0 + 2.0 * i;
    c.gains.k2 = 20.0 + 1.5 * i;
    out.push_back(c);
  }
  return out;
}

void BM_BatchSerial(benchmark::State& state) {
  const auto configs = gain_sweep(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(finger::run_batch_serial(configs));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BatchParallel(benchmark::State& state) {
  const auto configs = gain_sweep(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(finger::run_batch_parallel(configs));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_BatchSerial)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BatchParallel)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
