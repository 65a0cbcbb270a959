// Compares the serial reference campaign runner against the OpenMP runner
// on identical workloads. Both produce byte-identical results; the tests
// assert that, this target measures the speedup.

#include <benchmark/benchmark.h>

#include "mtc/harness.hpp"

namespace {

mtc::CampaignConfig workload(int trials) {
    mtc::CampaignConfig config;
    config.systems = {mtc::SystemKind::KM, mtc::SystemKind::AN, mtc::SystemKind::FF,
                      mtc::SystemKind::DS};
    config.mrs = {mtc::MrId::MR1_1, mtc::MrId::MR3_1, mtc::MrId::MR5_1,
                  mtc::MrId::MR5_2};
    config.n_trials = trials;
    config.master_seed = 1234;
    return config;
}

void bench_campaign_serial(benchmark::State& state) {
    auto config = workload(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto result = mtc::run_campaign_serial(config);
        benchmark::DoNotOptimize(result.trials.data());
    }
    state.SetItemsProcessed(state.iterations() * 4 * 4 * state.range(0));
}

void bench_campaign_openmp(benchmark::State& state) {
    auto config = workload(static_cast<int>(state.range(0)));
    config.jobs = static_cast<int>(state.range(1));
    for (auto _ : state) {
        auto result = mtc::run_campaign(config);
        benchmark::DoNotOptimize(result.trials.data());
    }
    state.SetItemsProcessed(state.iterations() * 4 * 4 * state.range(0));
}

} // namespace

BENCHMARK(bench_campaign_serial)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_campaign_openmp)
    ->Args({5, 2})
    ->Args({10, 2})
    ->Args({10, 4})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
