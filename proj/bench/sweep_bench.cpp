// Serial reference vs OpenMP kernels for substitution sweeps and batch
// evaluation. Run with OMP_NUM_THREADS set to compare thread counts.

#include "grossone/app.hpp"
#include "grossone/sweep.hpp"

#include <benchmark/benchmark.h>

using namespace grossone;

namespace {

const FractalSnapshot& sponge() {
  static const FractalSnapshot s =
      sponge_snapshot(GrossLinear::finite(1), GrossLinear::grossone());
  return s;
}

void BM_ApproximationSweepSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(approximation_sweep_serial(sponge(), 1, state.range(0)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ApproximationSweepParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(approximation_sweep(sponge(), 1, state.range(0)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

std::vector<std::string> batch_lines(std::int64_t n) {
  std::vector<std::string> lines;
  for (std::int64_t i = 1; i <= n; ++i) {
    lines.push_back("approx sponge(2, g1-" + std::to_string(i % 7) + ") at " +
                    std::to_string(100 + i));
  }
  return lines;
}

void BM_BatchSerial(benchmark::State& state) {
  const auto lines = batch_lines(state.range(0));
  for (auto _ : state) {
    std::vector<CommandOutcome> out(lines.size());
    for_each_index_serial(lines.size(),
                          [&](std::size_t i) { out[i] = execute_command(lines[i], {}); });
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BatchParallel(benchmark::State& state) {
  const auto lines = batch_lines(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(execute_batch(lines, {}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_ApproximationSweepSerial)->Arg(200)->Arg(1000);
BENCHMARK(BM_ApproximationSweepParallel)->Arg(200)->Arg(1000);
BENCHMARK(BM_BatchSerial)->Arg(256);
BENCHMARK(BM_BatchParallel)->Arg(256);

BENCHMARK_MAIN();
