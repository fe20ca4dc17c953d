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

#include "nlos/diffraction.hpp"
#include "nlos/units.hpp"
#include "oracles.hpp"

#include <limits>

using namespace nlos;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
    BlockerScreen room_blocker()
    {
        BlockerScreen b;
        b.center = {1.5, 0.0};
        b.top_height_m = 1.71 + (1.0 - 0.72) * 1.72;
        return b;
    }

    const ElevatedPoint tx{{0, 0}, 1.71};
    const ElevatedPoint rx{{3, 0}, 1.71};
} // namespace

TEST_CASE("Diffraction - Fresnel integrals against quadrature")
{
    for (double x : {-7.3, -2.0, -1.5, -0.3, 0.0, 0.1, 0.7, 1.49, 1.51, 2.5, 4.0, 9.9})
    {
        const auto [c, s] = oracle::fresnel_cs(x);
        const auto f = fresnel_integrals(x);
        CHECK_THAT(f.c, WithinAbs(c, 1e-10));
        CHECK_THAT(f.s, WithinAbs(s, 1e-10));
    }
    const auto inf = fresnel_integrals(std::numeric_limits<double>::infinity());
    CHECK(inf.c == 0.5);
    CHECK(inf.s == 0.5);
}

TEST_CASE("Diffraction - aperture integral against quadrature")
{
    for (auto [a, b] : {std::pair{-1.0, 2.0}, {0.3, 0.9}, {-4.0, -3.2}, {2.2, 7.5}})
    {
        const auto got = fresnel_aperture(a, b);
        const auto want = oracle::aperture(a, b);
        CHECK(std::abs(got - want) < 1e-9);
    }
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(std::abs(fresnel_aperture(-inf, inf) - 1.0) < 1e-15);
}

TEST_CASE("Diffraction - Fresnel parameter")
{
    CHECK(fresnel_v(0, 1.5, 1.5, 60) == 0.0);
    const double r1 = fresnel_radius(60, 1.5, 1.5);
    CHECK_THAT(fresnel_v(r1, 1.5, 1.5, 60), WithinAbs(std::sqrt(2.0), 1e-12));
    const double lambda = oracle::c0 / 60e9;
    const double v = 0.225 * std::sqrt(2 * (1 / 1.5 + 1 / 1.5) / lambda);
    CHECK_THAT(fresnel_v(0.225, 1.5, 1.5, 60), WithinRel(v, 1e-12));
    CHECK_THAT(v, WithinAbs(5.21, 0.015));
    CHECK(fresnel_v(-0.1, 1, 2, 60) < 0);
    // 1/sqrt(lambda) scaling
    CHECK_THAT(fresnel_v(0.1, 1, 2, 240) / fresnel_v(0.1, 1, 2, 60), WithinAbs(2.0, 1e-12));
}

TEST_CASE("Diffraction - Fresnel radius")
{
    CHECK_THAT(fresnel_radius(60, 1.5, 1.5), WithinAbs(0.0612, 0.0001));
    CHECK(fresnel_radius(60, 1e-9, 1.5) < 1e-4);
    CHECK(fresnel_radius(60, 0.7, 2.3) == fresnel_radius(60, 2.3, 0.7));
}

TEST_CASE("Diffraction - knife edge")
{
    CHECK_THAT(knife_edge_loss(0), WithinAbs(6.0206, 1e-4));
    CHECK(knife_edge_loss(-40) < 0.1);
    const double want = -20 * std::log10(std::abs(oracle::knife_edge(5.21)));
    CHECK_THAT(knife_edge_loss(5.21), WithinAbs(want, 1e-8));
    CHECK_THAT(knife_edge_loss(5.21), WithinAbs(27.0, 0.5));
    for (double v = -5; v < 10; v += 0.25)
        CHECK(std::abs(knife_edge_field(v) - oracle::knife_edge(v)) < 1e-9);

    // |F| peaks near v = -1.22; the loss rises monotonically from there.
    double prev = knife_edge_loss(-1.2);
    for (double v = -1.2; v <= 20; v += 0.01)
    {
        const double now = knife_edge_loss(v);
        CHECK(now >= prev - 1e-12);
        prev = now;
    }
    CHECK(knife_edge_loss_approx(-1) == 0.0);
    CHECK_THAT(knife_edge_loss_approx(2.0), WithinAbs(knife_edge_loss(2.0), 0.5));
}

TEST_CASE("Diffraction - blocker across a 3 m link")
{
    const double loss = screen_blockage_loss(room_blocker(), tx, rx, 60);
    CHECK(loss >= 20.0);
    CHECK(loss <= 32.0);

    auto side = room_blocker();
    side.center = {1.5, 0.225 + 3 * fresnel_radius(60, 1.5, 1.5)};
    CHECK(screen_blockage_loss(side, tx, rx, 60) < 0.5);

    auto outside = room_blocker();
    outside.center = {4.0, 0.0};
    CHECK(screen_blockage_loss(outside, tx, rx, 60) == 0.0);
}

TEST_CASE("Diffraction - blocker loss grows with width")
{
    // Lateral edges only. A finite top edge adds a fixed field whose phase
    // against the lateral edges rotates with width, so the full screen ripples.
    auto b = room_blocker();
    b.top_height_m = std::numeric_limits<double>::infinity();
    double prev = 0.0;
    for (double w = 0.01; w <= 1.0; w += 0.01)
    {
        b.width_m = w;
        const double loss = screen_blockage_loss(b, tx, rx, 60);
        CHECK(loss >= prev - 1e-9);
        prev = loss;
    }
}

TEST_CASE("Diffraction - top edge makes the width sweep ripple")
{
    auto b = room_blocker();
    double prev = 0.0;
    double worst_drop = 0.0;
    for (double w = 0.01; w <= 1.0; w += 0.01)
    {
        b.width_m = w;
        const double loss = screen_blockage_loss(b, tx, rx, 60);
        worst_drop = std::max(worst_drop, prev - loss);
        prev = loss;
    }
    CHECK(worst_drop > 1.0);
}

TEST_CASE("Diffraction - blocker loss is continuous in position")
{
    // The edges interfere with a period of a few mm, so the dB curve has deep
    // but smooth nulls. Continuity is checked on the complex field.
    auto b = room_blocker();
    b.center = {1.5, -0.6};
    auto prev = screen_field_factor(b, tx, rx, 60);
    double worst = 0.0;
    for (int i = 1; i <= 120000; ++i)
    {
        b.center = {1.5, -0.6 + i * 1e-5};
        const auto now = screen_field_factor(b, tx, rx, 60);
        worst = std::max(worst, std::abs(now - prev));
        prev = now;
    }
    CHECK(worst < 1e-3);

    // No step where a lateral edge crosses the ray.
    for (double edge : {-0.225, 0.225})
    {
        b.center = {1.5, edge - 1e-9};
        const double below = screen_blockage_loss(b, tx, rx, 60);
        b.center = {1.5, edge + 1e-9};
        const double above = screen_blockage_loss(b, tx, rx, 60);
        CHECK(std::abs(below - above) < 1e-3);
    }
}

TEST_CASE("Diffraction - strip factor equals screen with infinite top")
{
    const Segment strip{"s", {1.5, -0.2}, {1.5, 0.25}, "m", SegmentKind::absorber_screen};
    BlockerScreen b;
    b.center = {1.5, 0.025};
    b.width_m = 0.45;
    b.top_height_m = std::numeric_limits<double>::infinity();
    const auto f1 = strip_field_factor(strip, tx.xy, rx.xy, 60);
    const auto f2 = screen_field_factor(b, tx, rx, 60);
    CHECK(std::abs(f1 - f2) < 1e-9);
}
