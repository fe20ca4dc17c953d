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

#include "nlos/scenario_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace nlos
{
    namespace
    {
        using json = nlohmann::ordered_json;

        std::string violation_summary(const std::vector<Violation> &v)
        {
            std::string s = "scenario has " + std::to_string(v.size()) + " violation(s)";
            for (const auto &x : v)
                s += "\n  " + describe(x);
            return s;
        }

        [[noreturn]] void fail(const std::string &field, const std::string &msg)
        {
            throw ScenarioParseError(field + ": " + msg, field);
        }

        const json &member(const json &obj, const std::string &path, const char *key)
        {
            if (!obj.is_object())
                fail(path, "expected an object");
            const auto it = obj.find(key);
            if (it == obj.end())
                fail(path + "/" + key, "missing field");
            return *it;
        }

        double number(const json &obj, const std::string &path, const char *key)
        {
            const auto &v = member(obj, path, key);
            if (!v.is_number())
                fail(path + "/" + key, "expected a number");
            return v.get<double>();
        }

        double number_or(const json &obj, const std::string &path, const char *key, double fallback)
        {
            return obj.contains(key) ? number(obj, path, key) : fallback;
        }

        int integer(const json &obj, const std::string &path, const char *key)
        {
            const auto &v = member(obj, path, key);
            if (!v.is_number_integer())
                fail(path + "/" + key, "expected an integer");
            return v.get<int>();
        }

        std::string text(const json &obj, const std::string &path, const char *key)
        {
            const auto &v = member(obj, path, key);
            if (!v.is_string())
                fail(path + "/" + key, "expected a string");
            return v.get<std::string>();
        }

        const json &array(const json &obj, const std::string &path, const char *key)
        {
            const auto &v = member(obj, path, key);
            if (!v.is_array())
                fail(path + "/" + key, "expected an array");
            return v;
        }

        Point2 point(const json &obj, const std::string &path, const char *key)
        {
            const auto &v = member(obj, path, key);
            if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
                fail(path + "/" + key, "expected [x, y] in meters");
            return {v[0].get<double>(), v[1].get<double>()};
        }

        template <typename T, typename Parse>
        T enumeration(const json &obj, const std::string &path, const char *key, Parse parse)
        {
            const auto s = text(obj, path, key);
            if (auto v = parse(s))
                return *v;
            fail(path + "/" + key, "unknown value '" + s + "'");
        }

        json to_json(Point2 p) { return json::array({p.x, p.y}); }

        json to_json(const AntennaPattern &p)
        {
            return {{"kind", std::string(to_string(p.kind))},
                    {"gain_dbi", p.boresight_gain_dbi},
                    {"hpbw_az_deg", p.hpbw_az_deg},
                    {"hpbw_el_deg", p.hpbw_el_deg},
                    {"sidelobe_floor_db", p.sidelobe_floor_db}};
        }

        json to_json(const Terminal &t)
        {
            json j{{"label", t.label},
                   {"position", to_json(t.position)},
                   {"pattern", to_json(t.pattern)},
                   {"orientation_deg", t.orientation.azimuth_deg()}};
            if (t.sweep_step_deg)
                j["sweep_step_deg"] = *t.sweep_step_deg;
            return j;
        }

        AntennaPattern read_pattern(const json &j, const std::string &path)
        {
            AntennaPattern p;
            p.kind = enumeration<PatternKind>(j, path, "kind", parse_pattern_kind);
            p.boresight_gain_dbi = number(j, path, "gain_dbi");
            p.hpbw_az_deg = number_or(j, path, "hpbw_az_deg", p.hpbw_az_deg);
            p.hpbw_el_deg = number(j, path, "hpbw_el_deg");
            p.sidelobe_floor_db = number_or(j, path, "sidelobe_floor_db", p.sidelobe_floor_db);
            return p;
        }

        Terminal read_terminal(const json &j, const std::string &path)
        {
            Terminal t;
            t.label = text(j, path, "label");
            t.position = point(j, path, "position");
            t.pattern = read_pattern(member(j, path, "pattern"), path + "/pattern");
            t.orientation = Orientation(number_or(j, path, "orientation_deg", 0.0));
            if (j.contains("sweep_step_deg"))
                t.sweep_step_deg = number(j, path, "sweep_step_deg");
            return t;
        }

        Material read_material(const json &j, const std::string &path, const std::string &key)
        {
            Material m;
            m.name = j.contains("name") ? text(j, path, "name") : key;
            m.model = enumeration<MaterialModel>(j, path, "model", parse_material_model);
            m.reflection_loss_db = number_or(j, path, "reflection_loss_db", 0.0);
            m.eps_r = {number_or(j, path, "eps_real", 1.0), number_or(j, path, "eps_imag", 0.0)};
            return m;
        }

        GroovePanel read_panel(const json &j, const std::string &path)
        {
            if (j.contains("design"))
            {
                const auto &d = member(j, path, "design");
                const std::string dp = path + "/design";
                const auto mode = enumeration<PanelMode>(d, dp, "mode", parse_panel_mode);
                try
                {
                    return design_panel(number(d, dp, "frequency_ghz"), integer(d, dp, "cells"), mode);
                }
                catch (const std::domain_error &e)
                {
                    fail(dp, e.what());
                }
            }
            GroovePanel p;
            p.design_frequency_ghz = number(j, path, "design_frequency_ghz");
            p.size_x_m = number(j, path, "size_x_m");
            p.size_y_m = number(j, path, "size_y_m");
            p.conductivity_s_per_m = number_or(j, path, "conductivity_s_per_m", p.conductivity_s_per_m);
            const auto &cells = array(j, path, "cells");
            for (std::size_t i = 0; i < cells.size(); ++i)
            {
                const std::string cp = path + "/cells/" + std::to_string(i);
                const auto &c = cells[i];
                if (!c.is_array() || c.size() != 3 || !c[0].is_number() || !c[1].is_number() || !c[2].is_number())
                    fail(cp, "expected [pitch_mm, width_mm, depth_mm]");
                p.cells.push_back({c[0].get<double>(), c[1].get<double>(), c[2].get<double>()});
            }
            return p;
        }

        Scenario from_json(const json &root)
        {
            Scenario s;
            const std::string r;
            s.name = text(root, r, "name");

            const auto &plan = member(root, r, "frequency_plan");
            auto &fp = s.scene.frequency_plan;
            fp.fc_ghz = number(plan, "/frequency_plan", "fc_ghz");
            fp.bandwidth_ghz = number(plan, "/frequency_plan", "bandwidth_ghz");
            fp.n_points = integer(plan, "/frequency_plan", "n_points");
            fp.tx_power_dbm = number_or(plan, "/frequency_plan", "tx_power_dbm", 0.0);

            if (root.contains("environment"))
            {
                const auto &env = member(root, r, "environment");
                s.scene.plane_height_m = number_or(env, "/environment", "plane_height_m", s.scene.plane_height_m);
                s.scene.room_height_m = number_or(env, "/environment", "room_height_m", s.scene.room_height_m);
                if (env.contains("polarization"))
                    s.scene.polarization =
                        enumeration<Polarization>(env, "/environment", "polarization", parse_polarization);
            }

            const auto &mats = member(root, r, "materials");
            if (!mats.is_object())
                fail("/materials", "expected an object keyed by material id");
            for (const auto &[key, m] : mats.items())
                s.scene.materials.emplace(key, read_material(m, "/materials/" + key, key));

            const auto &segs = array(root, r, "segments");
            for (std::size_t i = 0; i < segs.size(); ++i)
            {
                const std::string p = "/segments/" + std::to_string(i);
                Segment seg;
                seg.id = text(segs[i], p, "id");
                seg.a = point(segs[i], p, "a");
                seg.b = point(segs[i], p, "b");
                seg.material_id = text(segs[i], p, "material");
                seg.kind = enumeration<SegmentKind>(segs[i], p, "kind", parse_segment_kind);
                s.scene.segments.push_back(std::move(seg));
            }

            if (root.contains("panels"))
            {
                const auto &panels = member(root, r, "panels");
                if (!panels.is_object())
                    fail("/panels", "expected an object keyed by segment id");
                for (const auto &[key, p] : panels.items())
                    s.scene.panels.emplace(key, read_panel(p, "/panels/" + key));
            }

            if (root.contains("blockers"))
            {
                const auto &bs = array(root, r, "blockers");
                for (std::size_t i = 0; i < bs.size(); ++i)
                {
                    const std::string p = "/blockers/" + std::to_string(i);
                    BlockerScreen b;
                    b.center = point(bs[i], p, "center");
                    b.width_m = number_or(bs[i], p, "width_m", b.width_m);
                    b.thickness_m = number_or(bs[i], p, "thickness_m", b.thickness_m);
                    b.height_m = number_or(bs[i], p, "height_m", b.height_m);
                    b.top_height_m = number_or(bs[i], p, "top_height_m", b.height_m);
                    s.scene.blockers.push_back(b);
                }
            }

            const auto &terms = member(root, r, "terminals");
            for (const char *side : {"tx", "rx"})
            {
                const auto &list = array(terms, "/terminals", side);
                auto &dst = std::string_view(side) == "tx" ? s.tx : s.rx;
                for (std::size_t i = 0; i < list.size(); ++i)
                    dst.push_back(read_terminal(list[i], "/terminals/" + std::string(side) + "/" + std::to_string(i)));
            }

            if (root.contains("parameters"))
            {
                const auto &params = member(root, r, "parameters");
                if (!params.is_object())
                    fail("/parameters", "expected an object of numbers");
                for (const auto &[key, v] : params.items())
                {
                    if (!v.is_number())
                        fail("/parameters/" + key, "expected a number");
                    s.parameters.emplace(key, v.get<double>());
                }
            }
            return s;
        }

        std::pair<int, int> line_column(std::string_view text, std::size_t offset)
        {
            int line = 1;
            int col = 1;
            for (std::size_t i = 0; i < std::min(offset, text.size()); ++i)
            {
                if (text[i] == '\n')
                {
                    ++line;
                    col = 1;
                }
                else
                {
                    ++col;
                }
            }
            return {line, col};
        }
    } // namespace

    ScenarioParseError::ScenarioParseError(const std::string &what, std::string field, int line, int column)
        : std::runtime_error(what), field_(std::move(field)), line_(line), column_(column)
    {
    }

    ScenarioValidationError::ScenarioValidationError(std::vector<Violation> violations)
        : std::runtime_error(violation_summary(violations)), violations_(std::move(violations))
    {
    }

    std::string to_json_text(const Scenario &s)
    {
        const auto &sc = s.scene;
        const auto &fp = sc.frequency_plan;
        json root;
        root["name"] = s.name;
        root["frequency_plan"] = {{"fc_ghz", fp.fc_ghz},
                                  {"bandwidth_ghz", fp.bandwidth_ghz},
                                  {"n_points", fp.n_points},
                                  {"tx_power_dbm", fp.tx_power_dbm}};
        root["environment"] = {{"plane_height_m", sc.plane_height_m},
                               {"room_height_m", sc.room_height_m},
                               {"polarization", std::string(to_string(sc.polarization))}};

        json mats = json::object();
        for (const auto &[key, m] : sc.materials)
        {
            json j{{"name", m.name}, {"model", std::string(to_string(m.model))}};
            if (m.model == MaterialModel::fixed_loss)
                j["reflection_loss_db"] = m.reflection_loss_db;
            if (m.model == MaterialModel::dielectric)
            {
                j["eps_real"] = m.eps_r.real();
                j["eps_imag"] = m.eps_r.imag();
            }
            mats[key] = std::move(j);
        }
        root["materials"] = std::move(mats);

        json segs = json::array();
        for (const auto &seg : sc.segments)
            segs.push_back({{"id", seg.id},
                            {"a", to_json(seg.a)},
                            {"b", to_json(seg.b)},
                            {"material", seg.material_id},
                            {"kind", std::string(to_string(seg.kind))}});
        root["segments"] = std::move(segs);

        json panels = json::object();
        for (const auto &[key, p] : sc.panels)
        {
            json cells = json::array();
            for (const auto &c : p.cells)
                cells.push_back(json::array({c.pitch_mm, c.width_mm, c.depth_mm}));
            panels[key] = {{"design_frequency_ghz", p.design_frequency_ghz},
                           {"size_x_m", p.size_x_m},
                           {"size_y_m", p.size_y_m},
                           {"conductivity_s_per_m", p.conductivity_s_per_m},
                           {"cells", std::move(cells)}};
        }
        root["panels"] = std::move(panels);

        json blockers = json::array();
        for (const auto &b : sc.blockers)
            blockers.push_back({{"center", to_json(b.center)},
                                {"width_m", b.width_m},
                                {"thickness_m", b.thickness_m},
                                {"height_m", b.height_m},
                                {"top_height_m", b.top_height_m}});
        root["blockers"] = std::move(blockers);

        json tx = json::array();
        for (const auto &t : s.tx)
            tx.push_back(to_json(t));
        json rx = json::array();
        for (const auto &t : s.rx)
            rx.push_back(to_json(t));
        root["terminals"] = {{"tx", std::move(tx)}, {"rx", std::move(rx)}};

        json params = json::object();
        for (const auto &[k, v] : s.parameters)
            params[k] = v;
        root["parameters"] = std::move(params);

        return root.dump(2) + "\n";
    }

    Scenario parse_scenario(std::string_view text, bool validate)
    {
        json root;
        try
        {
            root = json::parse(text.begin(), text.end());
        }
        catch (const json::parse_error &e)
        {
            const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
            throw ScenarioParseError("line " + std::to_string(line) + ", column " + std::to_string(col) +
                                         ": malformed JSON",
                                     "", line, col);
        }

        Scenario s;
        try
        {
            s = from_json(root);
        }
        catch (const json::exception &e)
        {
            throw ScenarioParseError(std::string("malformed scenario: ") + e.what(), "");
        }

        if (validate)
        {
            auto v = validate_scenario(s);
            if (!v.empty())
                throw ScenarioValidationError(std::move(v));
        }
        return s;
    }

    Scenario load_scenario(const std::filesystem::path &file, bool validate)
    {
        std::ifstream in(file, std::ios::binary);
        if (!in)
            throw std::runtime_error("cannot open scenario file '" + file.string() + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_scenario(buf.str(), validate);
    }

    void save_scenario(const Scenario &s, const std::filesystem::path &file)
    {
        std::ofstream out(file, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot write scenario file '" + file.string() + "'");
        out << to_json_text(s);
        if (!out)
            throw std::runtime_error("failed writing scenario file '" + file.string() + "'");
    }
} // namespace nlos
