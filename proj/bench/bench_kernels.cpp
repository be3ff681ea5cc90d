// Serial reference kernels vs their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "benford/harness.hpp"
#include "benford/stats.hpp"

using namespace benford;

namespace {

const ModelParams& lambda_star_params() {
    static const ModelParams p = maxent_params(lambda_star(), 128);
    return p;
}

void BM_HistogramSerial(benchmark::State& state) {
    const auto count = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_digit_histogram(lambda_star_params(), count, 1, 10));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_HistogramParallel(benchmark::State& state) {
    const auto count = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_digit_histogram_parallel(lambda_star_params(), count, 1, 10));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SampleManySerial(benchmark::State& state) {
    const auto count = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sample_many_serial(lambda_star_params(), count, 1));
}

void BM_SampleManyParallel(benchmark::State& state) {
    const auto count = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sample_many(lambda_star_params(), count, 1));
}

void BM_SampleManyStepwise(benchmark::State& state) {
    const auto count = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_many_stepwise(lambda_star_params(), count, 1));
}

SweepConfig bench_sweep() {
    SweepConfig c = SweepConfig::ci_profile();
    c.trials = 4;
    return c;
}

void BM_SweepSerial(benchmark::State& state) {
    const SweepConfig c = bench_sweep();
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep_serial(c));
}

void BM_SweepParallel(benchmark::State& state) {
    const SweepConfig c = bench_sweep();
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep(c));
}

}  // namespace

BENCHMARK(BM_HistogramSerial)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HistogramParallel)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SampleManySerial)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleManyParallel)->Arg(10000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SampleManyStepwise)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
