#include <benchmark/benchmark.h>

#include "skewminor/skewminor.hpp"

using namespace skewminor;

static void BM_HLIndecomposable(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_dense(FieldSpec::prime(7), n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(hl_indecomposable(a));
}
BENCHMARK(BM_HLIndecomposable)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

static void BM_IsSeparable(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_dense(FieldSpec::prime(7), n, 6);
  for (auto _ : state) benchmark::DoNotOptimize(is_separable(a));
}
BENCHMARK(BM_IsSeparable)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

static void BM_RecoverWitness(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_dense(FieldSpec::prime(101), n, 7);
  std::vector<int> signs(n, 1);
  for (std::size_t i = 0; i < n; i += 3) signs[i] = -1;
  const auto b = apply_witness(a, Witness{signs, false});
  for (auto _ : state) benchmark::DoNotOptimize(recover_witness(a, b));
}
BENCHMARK(BM_RecoverWitness)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

static void BM_Reconstruct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const FieldSpec spec = FieldSpec::prime(101);
  const auto table = principal_minors(random_dense(spec, n, 8), 4);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_from_minors(table, spec));
}
BENCHMARK(BM_Reconstruct)->DenseRange(6, 14, 4)->Unit(benchmark::kMillisecond);
