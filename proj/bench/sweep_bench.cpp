#include <benchmark/benchmark.h>

#include "nestrad/catalog.hpp"
#include "nestrad/report.hpp"

namespace {

using nestrad::Execution;

void method1_sweep(benchmark::State& state, Execution exec) {
  const int bits = static_cast<int>(state.range(0));
  const int k_max = static_cast<int>(state.range(1));
  nestrad::TableParams params;
  params.seed = nestrad::Seed(2, 2, 1);
  nestrad::Sweep sweep;
  for (long k = 1; k <= k_max; ++k) sweep.indices.push_back(k);
  const auto ctx = nestrad::PrecisionContext::for_depth(bits, k_max);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nestrad::convergence_table(nestrad::Method::method1, params, sweep, ctx, exec));
  }
  state.SetItemsProcessed(state.iterations() * k_max);
}

void combined_m_sweep(benchmark::State& state, Execution exec) {
  nestrad::TableParams params;
  params.d = 1;
  params.k = 20;
  nestrad::Sweep sweep{nestrad::SweepAxis::m, {}};
  for (long m = 10; m <= 10 * state.range(0); m += 10) sweep.indices.push_back(m);
  const auto ctx = nestrad::PrecisionContext::for_depth(256, 20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nestrad::convergence_table(nestrad::Method::combined, params, sweep, ctx, exec));
  }
}

void identities(benchmark::State& state, Execution exec) {
  const nestrad::PrecisionContext ctx(static_cast<int>(state.range(0)), 64);
  for (auto _ : state) benchmark::DoNotOptimize(nestrad::verify_identities(ctx, exec));
}

}  // namespace

BENCHMARK_CAPTURE(method1_sweep, serial, Execution::serial)->Args({512, 64})->Args({2048, 128})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(method1_sweep, parallel, Execution::parallel)->Args({512, 64})->Args({2048, 128})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(combined_m_sweep, serial, Execution::serial)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(combined_m_sweep, parallel, Execution::parallel)->Arg(32)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(identities, serial, Execution::serial)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(identities, parallel, Execution::parallel)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
