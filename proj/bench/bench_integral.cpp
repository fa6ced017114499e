// Serial reference vs. the prefix-sum sweep at one thread and at all threads.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "msi/integral.hpp"

namespace {

msi::IntegralConfig config(std::int64_t n) {
  const auto h = std::max<std::int64_t>(2, (n / 1000) * 2);
  return msi::make_config(n, std::min<std::int64_t>(h, 1000), msi::SupportCutoff::fixed(std::min<std::int64_t>(n / 4, 1000)));
}

void BM_reference(benchmark::State& state) {
  const auto cfg = config(state.range(0));
  const auto g = msi::Preset::parse("mobius").table<double>(cfg.table_size());
  for (auto _ : state) benchmark::DoNotOptimize(msi::selberg_integral_reference(cfg, g));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_direct_serial(benchmark::State& state) {
  const auto cfg = config(state.range(0));
  const auto g = msi::Preset::parse("mobius").table<double>(cfg.table_size());
  for (auto _ : state) benchmark::DoNotOptimize(msi::selberg_integral_direct(cfg, g, msi::Parallelism{1}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_direct_parallel(benchmark::State& state) {
  const auto cfg = config(state.range(0));
  const auto g = msi::Preset::parse("mobius").table<double>(cfg.table_size());
  const msi::Parallelism all{omp_get_max_threads()};
  for (auto _ : state) benchmark::DoNotOptimize(msi::selberg_integral_direct(cfg, g, all));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = all.threads;
}

void BM_decomposed(benchmark::State& state) {
  const auto cfg = msi::make_config(20000, 16, msi::SupportCutoff::fixed(state.range(0)));
  const auto g = msi::Preset::parse("mobius").table<double>(cfg.table_size());
  for (auto _ : state) benchmark::DoNotOptimize(msi::selberg_integral_decomposed(cfg, g));
}

}  // namespace

BENCHMARK(BM_reference)->RangeMultiplier(4)->Range(1 << 10, 1 << 14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_direct_serial)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_direct_parallel)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_decomposed)->Arg(12)->Arg(40)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
