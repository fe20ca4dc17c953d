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

#include "cli.hpp"

#include "nlos/channel.hpp"
#include "nlos/scenario_io.hpp"
#include "nlos/sweeps.hpp"
#include "nlos/units.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

namespace nlos::cli
{
    namespace
    {
        struct UsageError : std::runtime_error
        {
            using std::runtime_error::runtime_error;
        };

        struct Options
        {
            std::string scenario;
            std::optional<std::string> variant;
            std::optional<std::string> case_name;
            std::optional<std::string> position;
            int max_order = 2;
            std::string window = "rectangular";
            std::string normalization = "absolute";
            std::string gains = "channel_only";
            std::string panel_mode = "table2";
            std::optional<double> step_deg;
            std::optional<std::string> out;
            int cells = 80;
            double freq_ghz = 60.0;
        };

        constexpr std::array kBuiltins{"l_corridor", "t_corridor", "meeting_room"};

        bool is_builtin(const std::string &name)
        {
            return std::find(kBuiltins.begin(), kBuiltins.end(), name) != kBuiltins.end();
        }

        template <typename T>
        T parse_or_usage(std::optional<T> v, const std::string &flag, const std::string &text)
        {
            if (!v)
                throw UsageError("invalid value '" + text + "' for " + flag);
            return *v;
        }

        PanelMode panel_mode_of(const Options &o)
        {
            return parse_or_usage(parse_panel_mode(o.panel_mode), "--panel-mode", o.panel_mode);
        }

        Scenario builtin(const Options &o, const std::string &name, std::optional<MeetingRoomCase> override_case = {})
        {
            if (name == "l_corridor")
            {
                if (o.case_name)
                    throw UsageError("--case does not apply to l_corridor");
                const std::string v = o.variant.value_or("vertical");
                return l_corridor(parse_or_usage(parse_l_corridor_variant(v), "--variant", v));
            }
            if (name == "t_corridor")
            {
                if (o.case_name)
                    throw UsageError("--case does not apply to t_corridor");
                const std::string v = o.variant.value_or("panel");
                if (v != "panel" && v != "no_panel")
                    throw UsageError("invalid value '" + v + "' for --variant (panel, no_panel)");
                return t_corridor(v == "panel", panel_mode_of(o));
            }
            if (o.variant)
                throw UsageError("--variant does not apply to meeting_room");
            const std::string c = o.case_name.value_or("los");
            return meeting_room(override_case.value_or(
                parse_or_usage(parse_meeting_room_case(c), "--case", c)));
        }

        Scenario resolve(const Options &o)
        {
            if (is_builtin(o.scenario))
            {
                auto s = builtin(o, o.scenario);
                auto v = validate_scenario(s);
                if (!v.empty())
                    throw ScenarioValidationError(std::move(v));
                return s;
            }
            std::error_code ec;
            if (!std::filesystem::is_regular_file(o.scenario, ec))
                throw UsageError("unknown scenario '" + o.scenario +
                                 "' (expected l_corridor, t_corridor, meeting_room or a scenario file)");
            if (o.variant || o.case_name)
                throw UsageError("--variant and --case only apply to built-in scenarios");
            return load_scenario(o.scenario);
        }

        struct Link
        {
            const Terminal *tx;
            const Terminal *rx;
        };

        Link select_link(const Scenario &s, const std::optional<std::string> &position)
        {
            if (!position)
                return {&s.tx.front(), &s.rx.front()};
            for (const auto &r : s.rx)
                if (r.label == *position)
                    return {&s.tx.front(), &r};
            for (const auto &t : s.tx)
                if (t.label == *position)
                    return {&t, &s.rx.front()};
            throw UsageError("no terminal labelled '" + *position + "' in scenario '" + s.name + "'");
        }

        TraceOptions trace_options(const Options &o)
        {
            if (o.max_order < 0 || o.max_order > 3)
                throw UsageError("--max-order must be within 0..3");
            return {o.max_order, true};
        }

        GainView gain_view(const Options &o)
        {
            return parse_or_usage(parse_gain_view(o.gains), "--gains", o.gains);
        }

        std::string num(double v, int decimals)
        {
            if (std::isnan(v))
                return "nan";
            if (std::isinf(v))
                return v > 0 ? "inf" : "-inf";
            return fmt::format("{:.{}f}", v, decimals);
        }

        std::string cmd_trace(const Options &o)
        {
            const auto s = resolve(o);
            const auto link = select_link(s, o.position);
            const auto view = gain_view(o);
            const auto paths = find_paths(s.scene, link.tx->position, link.rx->position, trace_options(o));
            const auto ends = LinkEnds::of(*link.tx, *link.rx);
            const double fc = s.scene.frequency_plan.fc_ghz;

            std::string text = "path_id,order,length_m,delay_ns,dep_az_deg,arr_az_deg,gain_db,phase_deg\n";
            for (std::size_t i = 0; i < paths.size(); ++i)
            {
                const auto &p = paths[i];
                const auto g = path_gain(p, s.scene, ends, fc, view);
                text += fmt::format("{},{},{},{},{},{},{},{}\n", i, p.order(), num(p.length_m, 6),
                                    num(p.delay_s() * 1e9, 6), num(p.departure_az_deg, 3), num(p.arrival_az_deg, 3),
                                    num(amplitude_to_db(std::abs(g)), 4), num(rad_to_deg(std::arg(g)), 3));
            }
            return text;
        }

        std::string cmd_coverage(const Options &o)
        {
            const auto s = resolve(o);
            const Terminal *rx = &s.rx.front();
            if (o.position)
                rx = &s.rx_at(*o.position);
            const auto points = coverage_sweep(s.scene, s.tx, *rx, trace_options(o), gain_view(o));
            std::string text = "tx_label,pl_db\n";
            for (const auto &p : points)
                text += fmt::format("{},{}\n", p.label, num(p.path_loss_db, 4));
            return text;
        }

        std::string cmd_aoa(const Options &o)
        {
            const auto s = resolve(o);
            const auto link = select_link(s, o.position);
            const double step = o.step_deg.value_or(link.rx->sweep_step_deg.value_or(6.0));
            AoaResult r;
            try
            {
                r = aoa_sweep(s.scene, *link.tx, *link.rx, step, trace_options(o), gain_view(o));
            }
            catch (const std::invalid_argument &e)
            {
                throw UsageError(e.what());
            }
            std::string text = "azimuth_deg,power_dbm\n";
            for (const auto &x : r.samples)
                text += fmt::format("{},{}\n", num(x.azimuth_deg, 3), num(x.power_dbm, 4));
            return text;
        }

        Pdp link_pdp(const Scenario &s, const Options &o, Window w)
        {
            const auto link = select_link(s, o.position);
            const auto paths = find_paths(s.scene, link.tx->position, link.rx->position, trace_options(o));
            if (paths.empty())
                throw std::invalid_argument("no propagation path between '" + link.tx->label + "' and '" +
                                            link.rx->label + "'");
            const auto terms = link_budget(s.scene, paths, LinkEnds::of(*link.tx, *link.rx), gain_view(o));
            return pdp(synthesize(terms, s.scene.frequency_plan), w);
        }

        std::string cmd_pdp(const Options &o)
        {
            const auto s = resolve(o);
            const auto w = parse_or_usage(parse_window(o.window), "--window", o.window);
            const auto n = parse_or_usage(parse_normalization(o.normalization), "--normalization", o.normalization);

            Pdp profile = link_pdp(s, o, w);
            if (n == PdpNormalization::relative_to_global_max)
            {
                if (o.scenario == "meeting_room")
                {
                    // The room's four cases form one set sharing a reference maximum.
                    std::vector<Pdp> set{profile};
                    for (auto c : {MeetingRoomCase::los, MeetingRoomCase::blocked,
                                   MeetingRoomCase::blocked_tx_depointed, MeetingRoomCase::blocked_both_depointed})
                        set.push_back(link_pdp(builtin(o, "meeting_room", c), o, w));
                    normalize_to_global_max(set);
                    profile = set.front();
                }
                else
                {
                    normalize_to_global_max(std::span<Pdp>(&profile, 1));
                }
            }

            const auto &fp = s.scene.frequency_plan;
            std::string text = fmt::format(
                "# fc_ghz={} bandwidth_ghz={} n_points={} tx_power_dbm={} window={} normalization={} zero_pad={}\n",
                fp.fc_ghz, fp.bandwidth_ghz, fp.n_points, fp.tx_power_dbm, to_string(w), to_string(n),
                profile.zero_pad);
            text += "delay_ns,power_db\n";
            for (std::size_t k = 0; k < profile.delays_ns.size(); ++k)
                text += fmt::format("{},{}\n", num(profile.delays_ns[k], 4), num(profile.power_db[k], 4));
            return text;
        }

        std::string cmd_design_panel(const Options &o)
        {
            GroovePanel panel;
            try
            {
                panel = design_panel(o.freq_ghz, o.cells, panel_mode_of(o));
            }
            catch (const std::domain_error &e)
            {
                throw UsageError(e.what());
            }
            std::string text = "index,pitch_mm,width_mm,depth_mm\n";
            for (std::size_t i = 0; i < panel.cells.size(); ++i)
            {
                const auto &c = panel.cells[i];
                text += fmt::format("{},{},{},{}\n", i, num(c.pitch_mm, 4), num(c.width_mm, 4), num(c.depth_mm, 4));
            }
            return text;
        }

        void emit(const Options &o, const std::string &text, std::ostream &out)
        {
            if (!o.out)
            {
                out << text;
                return;
            }
            std::ofstream f(*o.out, std::ios::binary);
            if (!f)
                throw UsageError("cannot write '" + *o.out + "'");
            f << text;
        }
    } // namespace

    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"nlos60: 60 GHz indoor propagation with passive reflectors", "nlos60"};
        app.require_subcommand(1);
        Options o;

        auto scenario_opts = [&](CLI::App *sub) {
            sub->add_option("--scenario", o.scenario, "l_corridor, t_corridor, meeting_room or a JSON file")
                ->required();
            sub->add_option("--variant", o.variant, "l_corridor: none|vertical|horizontal; t_corridor: panel|no_panel");
            sub->add_option("--case", o.case_name,
                            "meeting_room: los|blocked|blocked_tx_depointed|blocked_both_depointed");
            sub->add_option("--panel-mode", o.panel_mode, "ideal_tem|table2 (t_corridor)");
            sub->add_option("--max-order", o.max_order, "bounce limit, 0..3");
            sub->add_option("--gains", o.gains, "channel_only|with_antennas");
            sub->add_option("--out", o.out, "output file (default stdout)");
        };

        auto *trace = app.add_subcommand("trace", "list propagation paths of one link");
        scenario_opts(trace);
        trace->add_option("--position", o.position, "terminal label");

        auto *coverage = app.add_subcommand("coverage", "average path loss for every transmitter");
        scenario_opts(coverage);
        coverage->add_option("--position", o.position, "receiver label");

        auto *aoa = app.add_subcommand("aoa", "received power while rotating the receiver");
        scenario_opts(aoa);
        aoa->add_option("--position", o.position, "terminal label");
        aoa->add_option("--step-deg", o.step_deg, "rotation step, must divide 360");

        auto *pdp_cmd = app.add_subcommand("pdp", "power delay profile of one link");
        scenario_opts(pdp_cmd);
        pdp_cmd->add_option("--position", o.position, "terminal label");
        pdp_cmd->add_option("--window", o.window, "rectangular|hann");
        pdp_cmd->add_option("--normalization", o.normalization, "absolute|relative");

        auto *design = app.add_subcommand("design-panel", "cell table of a grooved reflectarray");
        design->add_option("--panel-mode", o.panel_mode, "ideal_tem|table2");
        design->add_option("--cells", o.cells, "number of cells (even)");
        design->add_option("--freq-ghz", o.freq_ghz, "design frequency");
        design->add_option("--out", o.out, "output file (default stdout)");

        auto *validate = app.add_subcommand("validate", "check a scenario; --out writes canonical JSON");
        scenario_opts(validate);

        try
        {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::ParseError &e)
        {
            const int code = app.exit(e, out, err);
            return code == 0 ? ExitCode::ok : ExitCode::usage;
        }

        try
        {
            std::string text;
            if (*trace)
                text = cmd_trace(o);
            else if (*coverage)
                text = cmd_coverage(o);
            else if (*aoa)
                text = cmd_aoa(o);
            else if (*pdp_cmd)
                text = cmd_pdp(o);
            else if (*design)
                text = cmd_design_panel(o);
            else
                text = to_json_text(resolve(o));

            if (*validate && !o.out)
            {
                out << "ok\n";
                return ExitCode::ok;
            }
            emit(o, text, out);
            return ExitCode::ok;
        }
        catch (const UsageError &e)
        {
            err << "error: " << e.what() << "\n";
            return ExitCode::usage;
        }
        catch (const ScenarioValidationError &e)
        {
            err << "error: " << e.what() << "\n";
            return ExitCode::invalid_input;
        }
        catch (const ScenarioParseError &e)
        {
            err << "error: " << e.what() << "\n";
            return ExitCode::invalid_input;
        }
        catch (const std::out_of_range &e)
        {
            err << "error: " << e.what() << "\n";
            return ExitCode::usage;
        }
        catch (const std::invalid_argument &e)
        {
            err << "error: " << e.what() << "\n";
            return ExitCode::invalid_input;
        }
        catch (const std::exception &e)
        {
            err << "internal error: " << e.what() << "\n";
            return ExitCode::internal;
        }
    }
} // namespace nlos::cli
