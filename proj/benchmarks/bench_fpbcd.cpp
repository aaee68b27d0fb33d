// SPDX-License-Identifier: Apache-2.0
//
// pinchbf - pinching-antenna multiuser downlink beamforming
// Copyright (C) 2026 The pinchbf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <benchmark/benchmark.h>

#include "pinchbf/pinchbf.hpp"

using namespace pinchbf;

static void BM_ChannelMatrix(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Scene s = build_scene(n, n, 30.0, 20.0, 1);
    const auto pinch = init_locations_nearest_neighbor(s);
    for (auto _ : state) benchmark::DoNotOptimize(build_channel_matrix(s, pinch));
}
BENCHMARK(BM_ChannelMatrix)->Arg(4)->Arg(8)->Arg(16);

static void BM_GridSearch(benchmark::State& state) {
    const Scene s = build_scene(4, 4, 30.0, 20.0, 1);
    const auto pinch = init_locations_nearest_neighbor(s);
    const auto g = build_channel_matrix(s, pinch);
    const Precoder w = init_precoder_mrt(g, s.power_w);
    const auto omega = update_omega(g, w, s.noise_w, s.power_w);
    const auto fpw = make_fp_weights(omega, update_q(g, w, omega, s.noise_w, s.power_w).q, s.rate_weights);
    const int points = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(grid_search_location(s, 0, w, fpw, pinch, points));
    state.SetComplexityN(points);
}
BENCHMARK(BM_GridSearch)->RangeMultiplier(4)->Range(250, 16000)->Complexity(benchmark::oN);

static void BM_OuterIteration(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Scene s = build_scene(n, n, 30.0, 20.0, 1);
    SolverConfig cfg;
    cfg.max_outer_iters = 1;
    cfg.epsilon = 1e-300;
    for (auto _ : state) benchmark::DoNotOptimize(solve(s, cfg));
}
BENCHMARK(BM_OuterIteration)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_FullSolve(benchmark::State& state) {
    const Scene s = build_scene(4, 4, 30.0, 20.0, 1);
    for (auto _ : state) benchmark::DoNotOptimize(solve(s, SolverConfig{}));
}
BENCHMARK(BM_FullSolve)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
