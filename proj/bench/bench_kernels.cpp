#include <benchmark/benchmark.h>

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/integrality.hpp"
#include "faulhaber/kernels.hpp"

using namespace faulhaber;

namespace {

void BM_Decide(benchmark::State& state) {
  const auto k = static_cast<std::uint64_t>(state.range(0));
  const BigInt n(1'000'000'000);
  for (auto _ : state) {
    DenominatorCache cache;
    benchmark::DoNotOptimize(decide(k, n, cache));
  }
}
BENCHMARK(BM_Decide)->Arg(2)->Arg(12)->Arg(1000)->Arg(100000);

void BM_SModSerial(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::power_sum_mod_u64(12, n, n));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_SModSerial)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20);

void BM_SModOmp(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::power_sum_mod_u64(12, n, n));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_SModOmp)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20)->UseRealTime();

void BM_SBruteSerial(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::power_sum(12, n));
}
BENCHMARK(BM_SBruteSerial)->Arg(1 << 10)->Arg(1 << 14);

void BM_SBruteOmp(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::power_sum(12, n));
}
BENCHMARK(BM_SBruteOmp)->Arg(1 << 10)->Arg(1 << 14)->UseRealTime();

void BM_GridSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(grid_serial(40, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_GridSerial)->Arg(300)->Arg(3000);

void BM_GridOmp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(grid(40, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_GridOmp)->Arg(300)->Arg(3000)->UseRealTime();

void BM_BernoulliRecursive(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bernoulli_recursive(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_BernoulliRecursive)->Arg(64)->Arg(256);

void BM_BernoulliEgf(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bernoulli_egf(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_BernoulliEgf)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
