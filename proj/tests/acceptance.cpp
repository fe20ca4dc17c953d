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

// Acceptance report: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "cli.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include "nlos/channel.hpp"
#include "nlos/diffraction.hpp"
#include "nlos/materials.hpp"
#include "nlos/reflectarray.hpp"
#include "nlos/scenarios.hpp"
#include "nlos/sweeps.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

using namespace nlos;

namespace
{
    int failures = 0;

    void report(int id, bool pass, const std::string &detail)
    {
        fmt::print("{} {:>2} {}\n", pass ? "PASS" : "FAIL", id, detail);
        if (!pass)
            ++failures;
    }

    bool within(double value, double target, double tol) { return std::abs(value - target) <= tol; }

    const char *mark(bool ok) { return ok ? "ok" : "MISS"; }

    const PropagationPath &path_via(const std::vector<PropagationPath> &paths, const std::string &segment_id)
    {
        for (const auto &p : paths)
            if (p.order() == 1 && p.interactions[0].segment_id == segment_id)
                return p;
        throw std::runtime_error("no single-bounce path via " + segment_id);
    }

    Pdp room_pdp(MeetingRoomCase c)
    {
        const auto s = meeting_room(c);
        const auto paths = find_paths(s.scene, s.tx[0].position, s.rx[0].position);
        const auto terms = link_budget(s.scene, paths, LinkEnds::of(s.tx[0], s.rx[0]), GainView::channel_only);
        return pdp(synthesize(terms, s.scene.frequency_plan));
    }

    double peak_delay(const Pdp &p) { return p.delays_ns[p.peak_index()]; }
    double peak_power(const Pdp &p) { return p.power_db[p.peak_index()]; }

    void criterion_1()
    {
        const double pl = friis_path_loss(60.0, 3.0);
        report(1, within(pl, 77.54, 0.05), fmt::format("friis 60 GHz 3 m: {:.3f} dB (target 77.54 +- 0.05)", pl));
    }

    void criterion_2()
    {
        const double r = fresnel_radius(60.0, 1.5, 1.5);
        report(2, within(r, 0.0612, 0.0005), fmt::format("fresnel radius: {:.4f} m (target 0.0612 +- 0.0005)", r));
    }

    void criterion_3()
    {
        const auto s = meeting_room(MeetingRoomCase::los);
        const auto paths = find_paths(s.scene, s.tx[0].position, s.rx[0].position);
        const auto &los = paths.front();
        const auto &wb = path_via(paths, "whiteboard");
        const double spreading = 20 * std::log10(wb.length_m / los.length_m);
        const auto iso = AntennaPattern::omni(0.0, 90.0);
        const LinkEnds ends{iso, Orientation(0), iso, Orientation(0)};
        const double excess = 20 * std::log10(std::abs(path_gain(los, s.scene, ends, 60.0)) /
                                              std::abs(path_gain(wb, s.scene, ends, 60.0)));
        const bool ok = within(spreading, 1.24, 0.02) && within(excess, 1.80, 0.05);
        report(3, ok,
               fmt::format("excess spreading {:.3f} dB (1.24 +- 0.02), reflected-vs-direct {:.3f} dB (1.80 +- 0.05), "
                           "whiteboard path {:.4f} m",
                           spreading, excess, wb.length_m));
    }

    void criterion_4()
    {
        const auto los = room_pdp(MeetingRoomCase::los);
        const auto blocked = room_pdp(MeetingRoomCase::blocked);
        const auto both = room_pdp(MeetingRoomCase::blocked_both_depointed);
        const double d_los = peak_delay(los);
        const double d_blk = peak_delay(blocked);
        const double d_wb = peak_delay(both);
        const double rel = peak_power(both) - peak_power(los);
        const bool a = within(d_los, 10.0, 0.25);
        const bool b = within(d_blk, 10.5, 0.25);
        const bool c = within(d_wb, 11.5, 0.25);
        const bool d = within(rel, -0.84, 0.15);
        report(4, a && b && c && d,
               fmt::format("LOS peak {:.3f} ns [{}], blocked peak {:.3f} ns [{}], whiteboard peak {:.3f} ns [{}], "
                           "depointed-both level {:.2f} dB vs LOS [{}] (targets 10.0 / 10.5 / 11.5 +- 0.25 ns, "
                           "-0.84 +- 0.15 dB)",
                           d_los, mark(a), d_blk, mark(b), d_wb, mark(c), rel, mark(d)));
    }

    void criterion_5()
    {
        const auto s = meeting_room(MeetingRoomCase::blocked);
        const double h = s.scene.plane_height_m;
        const ElevatedPoint tx{s.tx[0].position, h};
        const ElevatedPoint rx{s.rx[0].position, h};
        const double f = s.scene.frequency_plan.fc_ghz;
        auto screen = s.scene.blockers[0];
        const double loss = screen_blockage_loss(screen, tx, rx, f);
        const bool band = loss >= 20.0 && loss <= 32.0;

        double prev = 0.0;
        double worst_drop = 0.0;
        double worst_width = 0.0;
        for (int i = 1; i <= 1000; ++i)
        {
            screen.width_m = i * 1e-3;
            const double now = screen_blockage_loss(screen, tx, rx, f);
            if (prev - now > worst_drop)
            {
                worst_drop = prev - now;
                worst_width = screen.width_m;
            }
            prev = now;
        }
        const bool monotone = worst_drop <= 1e-9;
        report(5, band && monotone,
               fmt::format("blocker loss {:.2f} dB (band [20, 32]) [{}]; width sweep 1 mm to 1 m: largest loss drop "
                           "{:.3f} dB at {:.3f} m [{}]",
                           loss, mark(band), worst_drop, worst_width, mark(monotone)));
    }

    void criterion_6()
    {
        const auto t2 = design_panel(60, 80, PanelMode::table2);
        const auto pattern = scatter_pattern(t2, {0, -1}, 60);
        const auto peaks = peak_directions(pattern, {30.0, 3.0});
        bool ok = peaks.size() == 2 && within(peaks[0], -peaks[1], 0.1 + 1e-9);
        double theta = peaks.empty() ? 0.0 : std::abs(peaks[0]);
        const double hpbw = peaks.empty() ? 0.0 : half_power_beamwidth_deg(pattern, peaks[0]);
        ok = ok && theta >= 70.0 && theta < 90.0 && hpbw >= 5.0 && hpbw <= 20.0;

        const auto ideal = design_panel(60, 80, PanelMode::ideal_tem);
        const auto bare = peak_directions(ideal, {0, -1}, 60, ElementFactor::none);
        const double lambda = oracle::c0 / 60e9;
        const double grating =
            std::asin(std::min(1.0, lambda / (2 * ideal.cells[0].pitch_mm * 1e-3))) * 180 / oracle::pi;
        const double bare_theta = bare.empty() ? 0.0 : std::abs(bare[0]);
        ok = ok && bare.size() == 2 && within(bare_theta, grating, 0.1);
        report(6, ok,
               fmt::format("table2 beams +-{:.1f} deg, HPBW {:.1f} deg; bare array peak {:.2f} deg vs grating {:.2f} deg",
                           theta, hpbw, bare_theta, grating));
    }

    double tx16_loss(LCorridorVariant v)
    {
        const auto s = l_corridor(v);
        return link_path_loss(s.scene, s.tx_at("Tx16"), s.rx[0], {}, GainView::channel_only);
    }

    void criterion_7()
    {
        const double none = tx16_loss(LCorridorVariant::none);
        const double vert = tx16_loss(LCorridorVariant::vertical);
        report(7, none - vert >= 8.0,
               fmt::format("L-corridor Tx16: {:.2f} dB without panel, {:.2f} dB with vertical panel, reduction "
                           "{:.2f} dB (>= 8)",
                           none, vert, none - vert));
    }

    void criterion_8()
    {
        const auto with = t_corridor(true);
        const auto without = t_corridor(false);
        const auto a = aoa_sweep(with.scene, with.tx[0], with.rx_at("L3"), 6.0, {}, GainView::channel_only);
        const auto b = aoa_sweep(without.scene, without.tx[0], without.rx_at("L3"), 6.0, {}, GainView::channel_only);
        const double gain = a.best_power_dbm - b.best_power_dbm;
        const double pl = link_path_loss(with.scene, with.tx[0], with.rx_at("P0"), {}, GainView::channel_only);
        const double p0 = with.scene.frequency_plan.tx_power_dbm - pl;
        report(8, gain >= 10.0 && within(p0, -82.2, 0.3),
               fmt::format("L3 max AoA {:.2f} dBm with panel vs {:.2f} dBm without, +{:.2f} dB (>= 10); P0 {:.2f} "
                           "dBm (-82.2 +- 0.3)",
                           a.best_power_dbm, b.best_power_dbm, gain, p0));
    }

    void criterion_9()
    {
        std::vector<std::string> misses;

        gen::Rng rng(1);
        int scenes = 0;
        double worst_pl = 0.0;
        double worst_parseval = 0.0;
        while (scenes < 100)
        {
            auto link = gen::random_link(rng);
            if (!validate_scene(link.scene).empty())
                continue;
            ++scenes;
            const double f = link_path_loss(link.scene, link.tx, link.rx);
            const double r = link_path_loss(link.scene, link.rx, link.tx);
            if (std::isfinite(f) || std::isfinite(r))
                worst_pl = std::max(worst_pl, std::abs(f - r));

            const auto paths = find_paths(link.scene, link.tx.position, link.rx.position);
            if (paths.empty())
                continue;
            const auto resp = synthesize(
                link_budget(link.scene, paths, LinkEnds::of(link.tx, link.rx), GainView::with_antennas),
                link.scene.frequency_plan);
            const auto prof = pdp(resp, Window::rectangular, PdpNormalization::absolute, 1);
            double ef = 0.0;
            for (const auto &h : resp.samples)
                ef += std::norm(h);
            ef /= static_cast<double>(resp.samples.size());
            double et = 0.0;
            for (double p : prof.power_db)
                et += std::pow(10.0, p / 10.0);
            worst_parseval = std::max(worst_parseval, std::abs(et - ef) / ef);
        }
        if (!(worst_pl < 1e-9))
            misses.push_back("reciprocity");
        if (!(worst_parseval < 1e-9))
            misses.push_back("parseval");

        double worst_gamma = 0.0;
        for (int i = 0; i < 2000; ++i)
        {
            const auto m = gen::material(rng, "m");
            const double theta = rng.uniform(0, 89.999);
            for (auto pol : {Polarization::te, Polarization::tm})
                worst_gamma = std::max(worst_gamma, std::abs(reflection_coefficient(m, theta, pol, 60.0)));
        }
        if (!(worst_gamma <= 1.0 + 1e-12))
            misses.push_back("passivity");

        Scene box;
        box.materials.emplace("m", Material::fixed_loss("m", 3));
        box.segments = oracle::box_walls(6.0, 4.0, "m");
        const Point2 tx{1.3, 0.9};
        const Point2 rx{4.6, 2.7};
        const auto traced = find_paths(box, tx, rx, {2, false});
        const auto launched = oracle::BoxLauncher(6.0, 4.0).paths(tx, rx, 2, 1'000'000);
        std::vector<double> lt;
        std::vector<double> ll;
        for (const auto &p : traced)
            lt.push_back(p.length_m);
        for (const auto &p : launched)
            ll.push_back(p.length);
        std::sort(lt.begin(), lt.end());
        std::sort(ll.begin(), ll.end());
        double worst_len = lt.size() == ll.size() ? 0.0 : 1e300;
        for (std::size_t i = 0; i < std::min(lt.size(), ll.size()); ++i)
            worst_len = std::max(worst_len, std::abs(lt[i] - ll[i]));
        if (!(worst_len < 1e-6))
            misses.push_back("ray launcher");

        double worst_mirror = 0.0;
        for (int i = 0; i < 2000; ++i)
        {
            const Segment s{"s", {rng.uniform(-5, 5), rng.uniform(-5, 5)}, {rng.uniform(-5, 5), rng.uniform(-5, 5)},
                            "m", SegmentKind::wall};
            if (s.length() < 1e-3)
                continue;
            const Point2 p{rng.uniform(-5, 5), rng.uniform(-5, 5)};
            worst_mirror = std::max(worst_mirror, distance(mirror(mirror(p, s), s), p));
        }
        if (!(worst_mirror < 1e-12))
            misses.push_back("mirror involution");

        const double ke = knife_edge_loss(0.0);
        if (!within(ke, 6.02, 0.01))
            misses.push_back("knife edge");

        std::string detail = fmt::format(
            "properties: reciprocity max {:.2e} dB over {} scenes, parseval max {:.2e}, max |gamma| {:.6f}, "
            "{} traced vs {} launched paths (max length error {:.2e} m), mirror {:.2e} m, knife edge {:.4f} dB",
            worst_pl, scenes, worst_parseval, worst_gamma, lt.size(), ll.size(), worst_len, worst_mirror, ke);
        for (const auto &m : misses)
            detail += " [MISS " + m + "]";
        report(9, misses.empty(), detail);
    }

    std::string run_cli(const std::vector<std::string> &args, int &code)
    {
        std::ostringstream out;
        std::ostringstream err;
        code = cli::run(args, out, err);
        return out.str();
    }

    std::string slurp(const std::filesystem::path &p)
    {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    void criterion_10()
    {
        const std::filesystem::path data = NLOS_DATA_DIR;
        const auto tmp = std::filesystem::temp_directory_path();
        int runs = 0;
        std::vector<std::string> misses;
        auto twice = [&](const std::vector<std::string> &args, const std::string &name) {
            int c1 = 0;
            int c2 = 0;
            const auto a = run_cli(args, c1);
            const auto b = run_cli(args, c2);
            ++runs;
            if (c1 != 0 || c2 != 0 || a != b || a.empty())
                misses.push_back(name);
        };
        for (const auto *file : {"l_corridor.json", "t_corridor.json", "meeting_room.json"})
        {
            const auto path = (data / file).string();
            for (const auto *cmd : {"trace", "coverage", "aoa", "pdp", "validate"})
                twice({cmd, "--scenario", path}, std::string(cmd) + " " + file);

            const auto out1 = (tmp / "nlos60_accept_1.json").string();
            const auto out2 = (tmp / "nlos60_accept_2.json").string();
            int c1 = 0;
            int c2 = 0;
            run_cli({"validate", "--scenario", path, "--out", out1}, c1);
            run_cli({"validate", "--scenario", path, "--out", out2}, c2);
            ++runs;
            if (c1 != 0 || c2 != 0 || slurp(out1) != slurp(out2) || slurp(out1) != slurp(path))
                misses.push_back(std::string("validate --out ") + file);
        }
        twice({"design-panel"}, "design-panel table2");
        twice({"design-panel", "--panel-mode", "ideal_tem"}, "design-panel ideal_tem");

        std::string detail = fmt::format("{} CLI invocations repeated byte-for-byte", runs);
        for (const auto &m : misses)
            detail += " [MISS " + m + "]";
        report(10, misses.empty(), detail);
    }
} // namespace

int main()
{
    const std::vector<std::function<void()>> criteria = {criterion_1, criterion_2, criterion_3, criterion_4,
                                                         criterion_5, criterion_6, criterion_7, criterion_8,
                                                         criterion_9, criterion_10};
    for (std::size_t i = 0; i < criteria.size(); ++i)
    {
        try
        {
            criteria[i]();
        }
        catch (const std::exception &e)
        {
            report(static_cast<int>(i + 1), false, fmt::format("error: {}", e.what()));
        }
    }
    fmt::print("{} of {} criteria passed\n", criteria.size() - static_cast<std::size_t>(failures), criteria.size());
    return failures == 0 ? 0 : 1;
}
