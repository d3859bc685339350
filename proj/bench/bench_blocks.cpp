#include <benchmark/benchmark.h>

#include "rigrot/block_kernels.hpp"

using namespace rigrot;

namespace {

RotorParameters asymmetric() {
  RotorParameters p;
  p.i1 = 1;
  p.i2 = 2;
  p.i3 = 3;
  return p;
}

void diagonalize_serial(benchmark::State& state) {
  const auto keys = blocks_up_to(static_cast<int>(state.range(0)));
  const RotorParameters params = asymmetric();
  for (auto _ : state) benchmark::DoNotOptimize(diagonalize_blocks_serial(keys, params));
  state.counters["blocks"] = static_cast<double>(keys.size());
}

void diagonalize_parallel(benchmark::State& state) {
  const auto keys = blocks_up_to(static_cast<int>(state.range(0)));
  const RotorParameters params = asymmetric();
  for (auto _ : state) benchmark::DoNotOptimize(diagonalize_blocks_parallel(keys, params));
  state.counters["blocks"] = static_cast<double>(keys.size());
  state.counters["threads"] = parallel_threads();
}

void spaces_serial(benchmark::State& state) {
  const auto keys = blocks_up_to(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_spaces_serial(keys));
}

void spaces_parallel(benchmark::State& state) {
  const auto keys = blocks_up_to(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_spaces_parallel(keys));
  state.counters["threads"] = parallel_threads();
}

}  // namespace

BENCHMARK(diagonalize_serial)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(diagonalize_parallel)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(spaces_serial)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(spaces_parallel)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
