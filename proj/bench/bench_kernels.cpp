// Serial reference vs OpenMP kernels. Worker count follows MAJVOTE_WORKERS.
#include <benchmark/benchmark.h>

#include "majvote/kernels.hpp"

using namespace majvote;

namespace {

Sampler chain_sampler(int n) { return Sampler(IsingModel(build_graph(GraphFamily::ChainPBC, n), 0.5)); }

void trials_serial(benchmark::State& state) {
    const auto sampler = chain_sampler(static_cast<int>(state.range(0)));
    const NoiseChannel channel(0.1);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::run_trials_serial(sampler, channel, 4096, 1));
    state.SetItemsProcessed(state.iterations() * 4096);
}

void trials_parallel(benchmark::State& state) {
    const auto sampler = chain_sampler(static_cast<int>(state.range(0)));
    const NoiseChannel channel(0.1);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::run_trials(sampler, channel, 4096, 1));
    state.SetItemsProcessed(state.iterations() * 4096);
}

void weights_serial(benchmark::State& state) {
    const IsingModel model(build_graph(GraphFamily::Complete, static_cast<int>(state.range(0))), 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::state_log_weights_serial(model, 0.1));
}

void weights_parallel(benchmark::State& state) {
    const IsingModel model(build_graph(GraphFamily::Complete, static_cast<int>(state.range(0))), 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::state_log_weights(model, 0.1));
}

}  // namespace

BENCHMARK(trials_serial)->Arg(101)->Arg(1001);
BENCHMARK(trials_parallel)->Arg(101)->Arg(1001);
BENCHMARK(weights_serial)->Arg(12)->Arg(16);
BENCHMARK(weights_parallel)->Arg(12)->Arg(16);

int main(int argc, char** argv) {
    kernels::apply_worker_env();
    benchmark::Initialize(&argc, argv);
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
