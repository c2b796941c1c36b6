// Microbenchmarks for the series kernels and the two table-computation
// routes.  The direct-vs-descent pair at equal parameters documents why the
// digit collapse exists at all.

#include <benchmark/benchmark.h>

#include <random>

#include "cphi/cphi.hpp"

using namespace cphi;

namespace {

template <typename Ring>
QSeries<Ring> random_series(Ring ring, int trunc, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(0, 1000);
  QSeries<Ring> s(std::move(ring), trunc);
  for (int n = 0; n <= trunc; ++n) s.set(n, s.ring().from_int(coeff(rng)));
  return s;
}

void BM_SeriesMulExact(benchmark::State& state) {
  const int T = static_cast<int>(state.range(0));
  const auto a = random_series(ExactRing{}, T, 1);
  const auto b = random_series(ExactRing{}, T, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMulExact)->Arg(256)->Arg(1024);

void BM_SeriesMulMod(benchmark::State& state) {
  const int T = static_cast<int>(state.range(0));
  const ModRing ring(1000003);
  const auto a = random_series(ring, T, 1);
  const auto b = random_series(ring, T, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMulMod)->Arg(256)->Arg(1024)->Arg(4096);

void BM_PartitionSeries(benchmark::State& state) {
  const int T = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(partition_series(T));
}
BENCHMARK(BM_PartitionSeries)->Arg(1000)->Arg(4000);

void BM_BaseProductExact(benchmark::State& state) {
  const auto k = static_cast<std::uint64_t>(state.range(0));
  const int T = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_base_product(k, T, ExactRing{}));
}
BENCHMARK(BM_BaseProductExact)->Args({1, 200})->Args({4, 100});

void BM_TableDirectMod(benchmark::State& state) {
  const auto k = static_cast<std::uint64_t>(state.range(0));
  const int T = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(cphi_direct(k, T, ModRing(5)));
}
BENCHMARK(BM_TableDirectMod)->Args({37, 200})->Args({1002, 60});

void BM_TableDescentMod(benchmark::State& state) {
  const auto k = static_cast<std::uint64_t>(state.range(0));
  const int T = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(cphi_mod_descent(k, T, 5));
}
BENCHMARK(BM_TableDescentMod)->Args({37, 200})->Args({1002, 60})->Args({1002, 200});

}  // namespace

BENCHMARK_MAIN();
