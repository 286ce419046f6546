#include <benchmark/benchmark.h>

#include <numbers>
#include <optional>

#include "galdec/channels.hpp"
#include "galdec/coherent.hpp"
#include "galdec/packet.hpp"

using namespace galdec;

namespace {

const GalileanConfig kCfg{1.0, 2.0, 0.5, 0.5};

DensityKernel cat_kernel(std::size_t n) {
    const Grid1D grid = make_centered_grid(n, 12.0);
    const auto l = coherent_wavefunction({-5.0, 0.0, 1.0, 1.0, 1.0}, grid);
    const auto r = coherent_wavefunction({5.0, 0.0, 1.0, 1.0, 1.0}, grid);
    WaveFunction cat = l;
    cat.data = (l.data + r.data) / std::numbers::sqrt2;
    cat.normalize();
    return kernel_from_wavefunction(cat);
}

void bm_rep_change(benchmark::State& state) {
    const DensityKernel W = cat_kernel(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(to_velocity_rep(W));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_rep_change)->RangeMultiplier(2)->Range(256, 1024)->Complexity();

void bm_full_channel(benchmark::State& state) {
    const DensityKernel W = cat_kernel(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(apply_galilean_decoherence(W, kCfg));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_full_channel)->RangeMultiplier(2)->Range(256, 1024)->Complexity();

void bm_boost_native(benchmark::State& state) {
    const DensityKernel W = cat_kernel(static_cast<std::size_t>(state.range(0)));
    const ChannelParams p{kCfg.beta, kCfg.delta_t, 1.0, 1.0};
    for (auto _ : state) benchmark::DoNotOptimize(apply_boost_channel(W, p));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_boost_native)->RangeMultiplier(2)->Range(256, 1024)->Complexity();

void bm_spectrum(benchmark::State& state) {
    const DensityKernel W = cat_kernel(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(spectrum(W));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_spectrum)->RangeMultiplier(2)->Range(256, 512)->Complexity();

void bm_split_step(benchmark::State& state) {
    const Grid1D grid = make_centered_grid(1024, 16.0);
    const WaveFunction psi = sample_packet({1.0, 1.0, 1.0, -4.0}, grid, 0.0, 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            split_step_propagate(psi, std::nullopt, 1.0, static_cast<int>(state.range(0))));
}
BENCHMARK(bm_split_step)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
