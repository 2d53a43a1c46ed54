// Serial reference vs OpenMP kernels.
//
//   bench_kernels --benchmark_filter=Naive
//
// Thread counts above the machine's core count only measure overhead.

#include <benchmark/benchmark.h>

#include <omp.h>

#include <map>

#include "matrixrepet/attractor.hpp"
#include "matrixrepet/delta.hpp"
#include "matrixrepet/generators.hpp"

using namespace matrixrepet;

namespace {

const Matrix& random_input(std::size_t n) {
  static std::map<std::size_t, Matrix> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gen_random(n, 2, 42)).first;
  return it->second;
}

void BM_NaiveSerial(benchmark::State& state) {
  const Matrix& m = random_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::delta_profile_naive(m));
}

void BM_NaiveParallel(benchmark::State& state) {
  const Matrix& m = random_input(static_cast<std::size_t>(state.range(0)));
  const DeltaOptions opts{HashSeed{}, false, static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(delta_profile_naive(m, opts));
}

void BM_Fast(benchmark::State& state) {
  const Matrix& m = random_input(static_cast<std::size_t>(state.range(0)));
  const DeltaOptions opts{HashSeed{}, false, static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(delta_profile_fast(m, opts));
}

void BM_Verify(benchmark::State& state) {
  const Matrix& m = random_input(static_cast<std::size_t>(state.range(0)));
  static std::map<std::size_t, Attractor> attractors;
  auto it = attractors.find(m.rows());
  if (it == attractors.end()) it = attractors.emplace(m.rows(), gamma_greedy(m)).first;
  const VerifyOptions opts{HashSeed{}, static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(verify_attractor(m, it->second, opts));
}

void thread_args(benchmark::internal::Benchmark* b) {
  const int max_threads = std::max(2, omp_get_max_threads());
  for (int n : {64, 128, 256})
    for (int t = 1; t <= max_threads; t *= 2) b->Args({n, t});
}

}  // namespace

BENCHMARK(BM_NaiveSerial)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NaiveParallel)->Apply(thread_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Fast)->Apply(thread_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Verify)->Apply(thread_args)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
