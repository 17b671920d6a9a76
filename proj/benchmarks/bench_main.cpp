#include <benchmark/benchmark.h>

#include "mahonian/carlitz.hpp"
#include "mahonian/digraphs.hpp"
#include "mahonian/jacobi_rogers.hpp"
#include "mahonian/permstats.hpp"

using namespace mahonian;

namespace {

void BM_Distribution(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(distribution(n, n / 2, {QStatistic::maj, true}, jobs));
  }
}
BENCHMARK(BM_Distribution)->ArgsProduct({{5, 6, 7}, {1, 4}})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

void BM_HrwSides(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hrw_sides(n, 1, 1));
  }
}
BENCHMARK(BM_HrwSides)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_LdEnumerator(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ld_enumerator(n, 1, true, 1));
  }
}
BENCHMARK(BM_LdEnumerator)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_MuTable(benchmark::State& state) {
  const JRParams params = state.range(1) == 0 ? generic_params() : preset("digraph");
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mu_table(params, order));
  }
}
BENCHMARK(BM_MuTable)->ArgsProduct({{6, 8, 10}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_CarlitzPsi(benchmark::State& state) {
  const auto words = enumerate_multiset({2, 2, 2, 1});
  for (auto _ : state) {
    for (const auto& w : words) {
      benchmark::DoNotOptimize(carlitz_psi(w));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(words.size()));
}
BENCHMARK(BM_CarlitzPsi);

}  // namespace
BENCHMARK_MAIN();
