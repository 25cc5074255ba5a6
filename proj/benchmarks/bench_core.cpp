// Copyright 2026 The covobs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <covobs/grid.hpp>
#include <covobs/measure.hpp>
#include <covobs/phasespace.hpp>
#include <covobs/r3.hpp>
#include <covobs/resolution.hpp>

#include <benchmark/benchmark.h>

#include <cmath>

using namespace covobs;

namespace {

GridSpec grid_of(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    return GridSpec(n, std::sqrt(2.0 * std::numbers::pi * static_cast<double>(n)));
}

void BM_Convolve(benchmark::State &state) {
    const GridSpec grid = grid_of(state);
    const auto a = make_gaussian(0.0, 1.0, grid);
    const auto b = make_uniform(0.3, 1.5, grid);
    for (auto _ : state) {
        benchmark::DoNotOptimize(convolve(a, b));
    }
}
BENCHMARK(BM_Convolve)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

void BM_SlidingSup(benchmark::State &state) {
    const GridSpec grid = grid_of(state);
    const auto rho = mix(std::vector<WeightedMeasure>{{0.7, make_gaussian(0.0, 1.0, grid)}, {0.3, make_dirac(0.4)}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(sliding_sup(rho, 1.3));
    }
}
BENCHMARK(BM_SlidingSup)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

void BM_LimitOfResolution(benchmark::State &state) {
    const GridSpec grid = grid_of(state);
    const auto rho = make_gaussian(0.0, 1.0, grid);
    for (auto _ : state) {
        benchmark::DoNotOptimize(limit_of_resolution(rho, grid.dx()));
    }
}
BENCHMARK(BM_LimitOfResolution)->RangeMultiplier(4)->Range(1 << 10, 1 << 14);

void BM_Fourier(benchmark::State &state) {
    const GridSpec grid = grid_of(state);
    const auto psi = gaussian_packet(grid, 0.3, 1.0, 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fourier(psi));
    }
}
BENCHMARK(BM_Fourier)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

void BM_JointDensity(benchmark::State &state) {
    const GridSpec grid(4096, 40.0);
    const auto vac = MixedState::pure(gaussian_packet(grid, 0.0, 1.0 / std::numbers::sqrt2));
    const PhaseWindow window{12.0, 12.0, static_cast<std::size_t>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(joint_density({vac}, vac, window));
    }
}
BENCHMARK(BM_JointDensity)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_R3Sampling(benchmark::State &state) {
    const r3::RotInvMeasure3D rho(0.2, r3::maxwell_radial(1.0, GridSpec(4096, 40.0)));
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(r3::sample_measure(rho, n, 1));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_R3Sampling)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
