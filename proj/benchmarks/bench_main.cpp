// SPDX-License-Identifier: Apache-2.0
//
// ristwin - ray-traced digital twin for 1-bit RIS phase configuration
// Copyright (C) 2026 The ristwin authors
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

#include "ristwin/evaluate.hpp"
#include "ristwin/optimize.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace ristwin;

namespace
{

const Scene &office()
{
    static const Scene scene = load_scene_file(std::string(RISTWIN_SCENE_DIR) + "/office.json");
    return scene;
}

ChannelSnapshot random_snapshot(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto draw = [&] { return Complex{gauss(rng), gauss(rng)}; };
    ChannelSnapshot s;
    s.h_d = draw();
    for (std::size_t i = 0; i < n; ++i)
    {
        s.h.push_back(draw());
        s.g.push_back(draw());
    }
    return s;
}

void channel_snapshot_office(benchmark::State &state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(channel_snapshot(office()));
}
BENCHMARK(channel_snapshot_office)->Unit(benchmark::kMicrosecond);

void exhaustive(benchmark::State &state)
{
    const auto s = random_snapshot(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(exhaustive_search(s));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}
BENCHMARK(exhaustive)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void iterative(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto s = random_snapshot(n, 11);
    for (auto _ : state)
        benchmark::DoNotOptimize(iterative_search(s, all_zero(n), default_max_passes));
}
BENCHMARK(iterative)->Arg(128)->Unit(benchmark::kMicrosecond);

void dt_dpo_office(benchmark::State &state)
{
    const auto s = channel_snapshot(office());
    for (auto _ : state)
        benchmark::DoNotOptimize(dt_dpo(s, default_max_passes));
}
BENCHMARK(dt_dpo_office)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
