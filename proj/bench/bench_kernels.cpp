#include <benchmark/benchmark.h>

#include "cayley/counting.hpp"
#include "cayley/kernels.hpp"

using namespace cayley;

namespace {

void BM_SweepSerial(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::serial::sweep(n));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(kernels::sequence_count(n)));
}

void BM_SweepParallel(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::parallel::sweep(n));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(kernels::sequence_count(n)));
  st.counters["threads"] = kernels::parallel::max_threads();
}

void BM_HistogramSerial(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::serial::degree_histogram(n));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(kernels::sequence_count(n)));
}

void BM_HistogramParallel(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::parallel::degree_histogram(n));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(kernels::sequence_count(n)));
}

void BM_RecursionTable(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(counting::recursion_table(static_cast<int>(st.range(0))));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HistogramSerial)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HistogramParallel)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RecursionTable)->Arg(30)->Arg(60)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
