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

#include "nlos/scenarios.hpp"

#include "nlos/units.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace nlos
{
    namespace
    {
        void add_polyline(Scene &scene, const std::string &prefix, const std::vector<Point2> &pts,
                          const std::string &material)
        {
            for (std::size_t i = 1; i < pts.size(); ++i)
                scene.segments.push_back(
                    {prefix + std::to_string(i), pts[i - 1], pts[i], material, SegmentKind::wall});
        }

        Terminal terminal(std::string label, Point2 at, AntennaPattern pattern, double az,
                          std::optional<double> sweep = std::nullopt)
        {
            return {std::move(label), at, pattern, Orientation(az), sweep};
        }

        const Terminal &find_label(const std::vector<Terminal> &list, std::string_view label)
        {
            const auto it = std::find_if(list.begin(), list.end(), [&](const Terminal &t) { return t.label == label; });
            if (it == list.end())
                throw std::out_of_range("scenario: no terminal labelled '" + std::string(label) + "'");
            return *it;
        }

        double distance_to_segment(Point2 p, const Segment &s)
        {
            const Vec2 ab = s.b - s.a;
            const double len2 = dot(ab, ab);
            const double t = len2 > 0.0 ? std::clamp(dot(p - s.a, ab) / len2, 0.0, 1.0) : 0.0;
            return distance(p, s.a + ab * t);
        }
    } // namespace

    const Terminal &Scenario::tx_at(std::string_view label) const { return find_label(tx, label); }
    const Terminal &Scenario::rx_at(std::string_view label) const { return find_label(rx, label); }

    std::string_view to_string(LCorridorVariant v)
    {
        switch (v)
        {
        case LCorridorVariant::none:
            return "none";
        case LCorridorVariant::vertical:
            return "vertical";
        case LCorridorVariant::horizontal:
            return "horizontal";
        }
        return "unknown";
    }

    std::optional<LCorridorVariant> parse_l_corridor_variant(std::string_view text)
    {
        for (auto v : {LCorridorVariant::none, LCorridorVariant::vertical, LCorridorVariant::horizontal})
            if (to_string(v) == text)
                return v;
        return std::nullopt;
    }

    std::string_view to_string(MeetingRoomCase c)
    {
        switch (c)
        {
        case MeetingRoomCase::los:
            return "los";
        case MeetingRoomCase::blocked:
            return "blocked";
        case MeetingRoomCase::blocked_tx_depointed:
            return "blocked_tx_depointed";
        case MeetingRoomCase::blocked_both_depointed:
            return "blocked_both_depointed";
        }
        return "unknown";
    }

    std::optional<MeetingRoomCase> parse_meeting_room_case(std::string_view text)
    {
        for (auto c : {MeetingRoomCase::los, MeetingRoomCase::blocked, MeetingRoomCase::blocked_tx_depointed,
                       MeetingRoomCase::blocked_both_depointed})
            if (to_string(c) == text)
                return c;
        return std::nullopt;
    }

    Scenario l_corridor(LCorridorVariant variant)
    {
        Scenario s;
        s.name = "l_corridor";
        s.scene.frequency_plan = vna_plan();
        s.scene.plane_height_m = 1.37;
        s.scene.room_height_m = 3.0;
        s.scene.materials.emplace("plasterboard", plasterboard());
        s.scene.materials.emplace("aluminum", aluminum());

        add_polyline(s.scene, "wall", {{0.0, 0.0}, {5.31, 0.0}, {5.31, 6.7}, {3.69, 6.7}, {3.69, 2.0}, {0.0, 2.0}, {0.0, 0.0}},
                     "plasterboard");

        const Point2 m{4.5, 1.0};
        if (variant != LCorridorVariant::none)
        {
            const double len = variant == LCorridorVariant::vertical ? 0.595 : 0.982;
            const Vec2 dir = Vec2{1.0, 1.0}.normalized();
            s.scene.segments.push_back({"panel", m - dir * (0.5 * len), m + dir * (0.5 * len), "aluminum",
                                        SegmentKind::flat_panel});
        }

        for (int i = 1; i <= 16; ++i)
            s.tx.push_back(terminal("Tx" + std::to_string(i), {4.5, 2.6 + 0.25 * (i - 1)}, standard_omni(), 270.0));
        const Point2 rx{1.62, 1.0};
        s.rx.push_back(terminal("Rx", rx, standard_horn(), azimuth_deg(m - rx)));
        return s;
    }

    Scenario t_corridor(bool with_panel, PanelMode mode, double tx_to_p0_m)
    {
        if (!(tx_to_p0_m > 0.0))
            throw std::domain_error("t_corridor: Tx to P0 distance must be positive");

        Scenario s;
        s.name = "t_corridor";
        s.parameters["tx_to_p0_m"] = tx_to_p0_m;
        s.scene.frequency_plan = vna_plan();
        s.scene.plane_height_m = 1.7;
        s.scene.room_height_m = 2.7;
        s.scene.materials.emplace("plasterboard", plasterboard());
        s.scene.materials.emplace("aluminum", aluminum());

        const double y_front = -1.215; // crossbar wall facing the stem
        const double y_back = 0.215;   // wall behind the panel
        const double stem_end = std::min(-7.0, -0.5 - tx_to_p0_m - 1.0);
        add_polyline(s.scene, "wall",
                     {{-10.0, y_front}, {-1.0, y_front}, {-1.0, stem_end}, {1.0, stem_end}, {1.0, y_front},
                      {5.0, y_front}, {5.0, y_back}, {-10.0, y_back}, {-10.0, y_front}},
                     "plasterboard");

        if (with_panel)
        {
            auto panel = design_panel(60.0, 80, mode);
            const double half = 0.5 * panel.size_x_m;
            // a -> b runs towards -x so the grooved face (left side) looks down the stem.
            s.scene.segments.push_back(
                {"reflectarray", {half, 0.0}, {-half, 0.0}, "aluminum", SegmentKind::reflectarray_panel});
            s.scene.panels.emplace("reflectarray", std::move(panel));
        }

        const double y_rx = -0.5;
        s.tx.push_back(terminal("Tx", {0.0, y_rx - tx_to_p0_m}, standard_horn(), 90.0));
        s.rx.push_back(terminal("P0", {0.0, y_rx}, standard_horn(), 270.0, 6.0));
        for (int k = 1; k <= 4; ++k)
            s.rx.push_back(terminal("R" + std::to_string(k), {static_cast<double>(k), y_rx}, standard_horn(), 270.0, 6.0));
        for (int k = 1; k <= 9; ++k)
            s.rx.push_back(terminal("L" + std::to_string(k), {-static_cast<double>(k), y_rx}, standard_horn(), 270.0, 6.0));
        return s;
    }

    Scenario meeting_room(MeetingRoomCase c)
    {
        Scenario s;
        s.name = "meeting_room";
        s.scene.frequency_plan = vna_plan();
        s.scene.plane_height_m = 1.71;
        s.scene.room_height_m = 2.5;
        s.scene.materials.emplace("plasterboard", plasterboard());
        s.scene.materials.emplace("whiteboard", whiteboard());

        const double w = 6.5;
        const double d = 2.2;
        const double board_lo = 3.15;
        const double board_hi = 5.15;
        add_polyline(s.scene, "wall", {{0.0, 0.0}, {w, 0.0}, {w, d}, {board_hi, d}}, "plasterboard");
        s.scene.segments.push_back({"whiteboard", {board_hi, d}, {board_lo, d}, "whiteboard", SegmentKind::flat_panel});
        s.scene.segments.push_back({"wall4", {board_lo, d}, {0.0, d}, "plasterboard", SegmentKind::wall});
        s.scene.segments.push_back({"wall5", {0.0, d}, {0.0, 0.0}, "plasterboard", SegmentKind::wall});

        const double y = d - 0.86;
        const Point2 tx{2.65, y};
        const Point2 rx{5.65, y};
        const bool blocked = c != MeetingRoomCase::los;
        if (blocked)
        {
            BlockerScreen b;
            b.center = {0.5 * (tx.x + rx.x), y};
            // Chest at 0.72 of stature (Drillis-Contini proportions) at antenna height.
            b.top_height_m = s.scene.plane_height_m + (1.0 - 0.72) * b.height_m;
            s.scene.blockers.push_back(b);
        }

        const bool tx_off = c == MeetingRoomCase::blocked_tx_depointed || c == MeetingRoomCase::blocked_both_depointed;
        const bool rx_off = c == MeetingRoomCase::blocked_both_depointed;
        s.tx.push_back(terminal("Tx", tx, standard_horn(), tx_off ? 30.0 : 0.0));
        s.rx.push_back(terminal("Rx", rx, standard_horn(), rx_off ? 150.0 : 180.0, 6.0));
        return s;
    }

    std::vector<Violation> validate_scenario(const Scenario &s)
    {
        auto out = validate_scene(s.scene);
        auto bad = [&](std::string subject, std::string msg) {
            out.push_back({ViolationKind::invalid_terminal, std::move(subject), std::move(msg)});
        };

        if (s.tx.empty())
            bad("tx", "scenario needs at least one transmitter");
        if (s.rx.empty())
            bad("rx", "scenario needs at least one receiver");

        std::set<std::string> labels;
        auto check = [&](const Terminal &t) {
            if (!labels.insert(t.label).second)
                bad(t.label, "terminal label used more than once");
            if (!std::isfinite(t.position.x) || !std::isfinite(t.position.y))
                bad(t.label, "position is not finite");
            try
            {
                (void)gain_dbi(t.pattern, 0.0, 0.0);
            }
            catch (const std::invalid_argument &e)
            {
                bad(t.label, e.what());
            }
            if (t.sweep_step_deg)
            {
                const double n = 360.0 / *t.sweep_step_deg;
                if (!(*t.sweep_step_deg > 0.0) || std::abs(n - std::round(n)) > 1e-9)
                    bad(t.label, "sweep step must divide 360 degrees");
            }
            for (const auto &seg : s.scene.segments)
                if (seg.is_obstacle() && seg.length() > 0.0 && distance_to_segment(t.position, seg) <= kMinHitDistance)
                    bad(t.label, "terminal lies on segment '" + seg.id + "'");
        };
        for (const auto &t : s.tx)
            check(t);
        for (const auto &t : s.rx)
            check(t);
        return out;
    }
} // namespace nlos
