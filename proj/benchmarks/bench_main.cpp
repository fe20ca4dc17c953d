// SPDX-License-Identifier: Apache-2.0
//
// nlos60: site-specific 60 GHz indoor propagation with passive reflectors
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

#include "nlos/channel.hpp"
#include "nlos/reflectarray.hpp"
#include "nlos/scenarios.hpp"
#include "nlos/sweeps.hpp"

#include <benchmark/benchmark.h>

namespace
{
    void BM_FindPathsMeetingRoom(benchmark::State &state)
    {
        const auto s = nlos::meeting_room();
        const nlos::TraceOptions opts{static_cast<int>(state.range(0)), true};
        for (auto _ : state)
            benchmark::DoNotOptimize(nlos::find_paths(s.scene, s.tx[0].position, s.rx[0].position, opts));
    }
    BENCHMARK(BM_FindPathsMeetingRoom)->DenseRange(0, 3);

    void BM_FindPathsTCorridor(benchmark::State &state)
    {
        const auto s = nlos::t_corridor();
        const auto &rx = s.rx_at("L3");
        for (auto _ : state)
            benchmark::DoNotOptimize(nlos::find_paths(s.scene, s.tx[0].position, rx.position));
    }
    BENCHMARK(BM_FindPathsTCorridor);

    void BM_Pdp(benchmark::State &state)
    {
        auto s = nlos::meeting_room();
        s.scene.frequency_plan.n_points = static_cast<int>(state.range(0));
        const auto paths = nlos::find_paths(s.scene, s.tx[0].position, s.rx[0].position);
        const auto terms =
            nlos::link_budget(s.scene, paths, nlos::LinkEnds::of(s.tx[0], s.rx[0]), nlos::GainView::channel_only);
        const auto resp = nlos::synthesize(terms, s.scene.frequency_plan);
        for (auto _ : state)
            benchmark::DoNotOptimize(nlos::pdp(resp, nlos::Window::hann));
    }
    BENCHMARK(BM_Pdp)->Arg(101)->Arg(401)->Arg(1601);

    void BM_ScatterPattern(benchmark::State &state)
    {
        const auto panel = nlos::design_panel(60, static_cast<int>(state.range(0)), nlos::PanelMode::table2);
        for (auto _ : state)
            benchmark::DoNotOptimize(nlos::scatter_pattern(panel, {0, -1}, 60));
    }
    BENCHMARK(BM_ScatterPattern)->Arg(20)->Arg(80)->Arg(320);

    void BM_AoaSweep(benchmark::State &state)
    {
        const auto s = nlos::t_corridor();
        const auto &rx = s.rx_at("L3");
        for (auto _ : state)
            benchmark::DoNotOptimize(nlos::aoa_sweep(s.scene, s.tx[0], rx, 6.0));
    }
    BENCHMARK(BM_AoaSweep);
} // namespace

BENCHMARK_MAIN();
