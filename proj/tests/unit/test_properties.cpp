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

#include "catch_amalgamated.hpp"

#include "generators.hpp"
#include "oracles.hpp"

#include "nlos/channel.hpp"
#include "nlos/raytrace.hpp"
#include "nlos/sweeps.hpp"

#include <algorithm>

using namespace nlos;

namespace
{
    std::vector<double> sorted_lengths(const std::vector<PropagationPath> &paths)
    {
        std::vector<double> out;
        for (const auto &p : paths)
            out.push_back(p.length_m);
        std::sort(out.begin(), out.end());
        return out;
    }
} // namespace

TEST_CASE("Properties - links are reciprocal")
{
    gen::Rng rng(20240611);
    int checked = 0;
    for (int trial = 0; trial < 400 && checked < 100; ++trial)
    {
        auto link = gen::random_link(rng);
        if (!validate_scene(link.scene).empty())
            continue;
        const TraceOptions opts{rng.integer(0, 3), rng.coin()};
        const auto fwd = find_paths(link.scene, link.tx.position, link.rx.position, opts);
        const auto rev = find_paths(link.scene, link.rx.position, link.tx.position, opts);
        INFO("trial " << trial);
        REQUIRE(fwd.size() == rev.size());
        const auto lf = sorted_lengths(fwd);
        const auto lr = sorted_lengths(rev);
        for (std::size_t i = 0; i < lf.size(); ++i)
            CHECK(std::abs(lf[i] - lr[i]) < 1e-9);

        const double pl_fwd = link_path_loss(link.scene, link.tx, link.rx, opts);
        const double pl_rev = link_path_loss(link.scene, link.rx, link.tx, opts);
        if (std::isfinite(pl_fwd))
            CHECK(std::abs(pl_fwd - pl_rev) < 1e-9);
        else
            CHECK(pl_fwd == pl_rev);
        ++checked;
    }
    CHECK(checked == 100);
}

TEST_CASE("Properties - image paths agree with brute-force ray launching")
{
    gen::Rng rng(77);
    for (int trial = 0; trial < 6; ++trial)
    {
        const double w = rng.uniform(3, 9);
        const double h = rng.uniform(2, 6);
        Scene sc;
        sc.materials.emplace("m", Material::fixed_loss("m", 3));
        sc.segments = oracle::box_walls(w, h, "m");
        const Point2 tx{rng.uniform(0.1 * w, 0.9 * w), rng.uniform(0.1 * h, 0.9 * h)};
        const Point2 rx{rng.uniform(0.1 * w, 0.9 * w), rng.uniform(0.1 * h, 0.9 * h)};

        const auto paths = find_paths(sc, tx, rx, {2, false});
        const auto launched = oracle::BoxLauncher(w, h).paths(tx, rx, 2, 1'000'000);
        INFO("trial " << trial);
        REQUIRE(paths.size() == launched.size());

        std::map<std::vector<int>, double> by_walls;
        for (const auto &l : launched)
            by_walls[l.walls] = l.length;
        for (const auto &p : paths)
        {
            std::vector<int> walls;
            for (const auto &i : p.interactions)
                walls.push_back(static_cast<int>(i.segment));
            REQUIRE(by_walls.contains(walls));
            CHECK(std::abs(by_walls[walls] - p.length_m) < 1e-6);
        }
    }
}

TEST_CASE("Properties - channel energy and passivity")
{
    gen::Rng rng(5);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 60; ++trial)
    {
        auto link = gen::random_link(rng);
        if (!validate_scene(link.scene).empty())
            continue;
        const auto paths = find_paths(link.scene, link.tx.position, link.rx.position);
        if (paths.empty())
            continue;
        const auto ends = LinkEnds::of(link.tx, link.rx);
        const auto terms = link_budget(link.scene, paths, ends, GainView::channel_only);
        const auto resp = synthesize(terms, link.scene.frequency_plan);

        // Parseval with no padding: mean |H|^2 equals the sum of |h|^2 (rectangular window).
        const auto profile = pdp(resp, Window::rectangular, PdpNormalization::absolute, 1);
        double freq = 0.0;
        for (const auto &s : resp.samples)
            freq += std::norm(s);
        freq /= static_cast<double>(resp.samples.size());
        double time = 0.0;
        for (double p : profile.power_db)
            time += std::pow(10.0, p / 10.0);
        CHECK(std::abs(time - freq) <= 1e-9 * std::max(freq, 1e-300));

        // No LOS or specular path outgains free space over the same length.
        // Screens are left out: edge diffraction can lift the field above 1.
        const bool screened = !link.scene.blockers.empty() ||
                              std::any_of(link.scene.segments.begin(), link.scene.segments.end(),
                                          [](const Segment &s) { return s.kind == SegmentKind::absorber_screen; });
        const double f = link.scene.frequency_plan.fc_ghz;
        for (const auto &p : paths)
        {
            if (screened || std::any_of(p.interactions.begin(), p.interactions.end(),
                            [](const Interaction &i) { return i.type != InteractionType::specular; }))
                continue;
            const double g = std::abs(path_gain(p, link.scene, ends, f, GainView::channel_only));
            const double friis = std::pow(10.0, -friis_path_loss(f, p.length_m) / 20.0);
            CHECK(g <= friis * (1.0 + 1e-9));
        }
        ++checked;
    }
    CHECK(checked == 60);
}
