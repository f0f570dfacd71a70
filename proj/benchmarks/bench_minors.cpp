#include <benchmark/benchmark.h>

#include "skewminor/skewminor.hpp"

using namespace skewminor;

static void BM_MinorTableGF7(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto threads = static_cast<unsigned>(state.range(1));
  const auto a = random_dense(FieldSpec::prime(7), n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(principal_minors(a, n, {threads}));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_MinorTableGF7)->ArgsProduct({{10, 12, 14, 16}, {1, 4}})->Unit(benchmark::kMillisecond);

static void BM_MinorTableRational(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_dense(FieldSpec::rationals(), n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(principal_minors(a, n));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_MinorTableRational)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_Determinant(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const FieldSpec spec = state.range(1) == 0 ? FieldSpec::rationals() : FieldSpec::prime(7);
  const auto a = random_dense(spec, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(a));
}
BENCHMARK(BM_Determinant)->ArgsProduct({{8, 16, 32}, {0, 1}});

static void BM_Pfaffian(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_dense(FieldSpec::prime(7), n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(pfaffian(a));
}
BENCHMARK(BM_Pfaffian)->DenseRange(8, 16, 4);

static void BM_HLEquivalentFull(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_dense(FieldSpec::prime(7), n, 4);
  const auto b = apply_witness(a, Witness{std::vector<int>(n, -1), true});
  for (auto _ : state) benchmark::DoNotOptimize(hl_equivalent(a, b, n));
}
BENCHMARK(BM_HLEquivalentFull)->DenseRange(10, 14, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
