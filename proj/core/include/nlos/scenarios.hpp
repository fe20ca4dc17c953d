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

#ifndef NLOS_SCENARIOS_HPP
#define NLOS_SCENARIOS_HPP

#include "nlos/raytrace.hpp"
#include "nlos/scene.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nlos
{
    /// A scene plus its measurement terminals. `parameters` carries builder
    /// inputs worth keeping with the file (for example the Tx to P0 distance).
    struct Scenario
    {
        std::string name;
        Scene scene;
        std::vector<Terminal> tx;
        std::vector<Terminal> rx;
        std::map<std::string, double> parameters;

        bool operator==(const Scenario &) const = default;

        /// Throws std::out_of_range for an unknown label.
        const Terminal &tx_at(std::string_view label) const;
        const Terminal &rx_at(std::string_view label) const;
    };

    enum class LCorridorVariant
    {
        none,
        vertical,
        horizontal,
    };

    std::string_view to_string(LCorridorVariant v);
    std::optional<LCorridorVariant> parse_l_corridor_variant(std::string_view text);

    enum class MeetingRoomCase
    {
        los,
        blocked,
        blocked_tx_depointed,
        blocked_both_depointed,
    };

    std::string_view to_string(MeetingRoomCase c);
    std::optional<MeetingRoomCase> parse_meeting_room_case(std::string_view text);

    inline constexpr double kDefaultTxToP0 = 5.10; // m, from the free-space received power at P0

    /// L-shaped plasterboard corridor (3.69 x 2 m and 4.7 x 1.62 m parts,
    /// 3 m high). Aluminium panel at 45 deg where the corridor axes meet;
    /// `vertical` puts its 0.595 m side in the propagation plane,
    /// `horizontal` its 0.982 m side. Tx1..Tx16 omni, Rx horn aimed at the
    /// panel centre. Terminal height 1.37 m.
    Scenario l_corridor(LCorridorVariant variant = LCorridorVariant::vertical);

    /// T junction: Tx horn at the end of the stem, 80-groove panel in the
    /// crossbar wall facing it, 0.215 m proud of the wall. Rx horn positions
    /// P0 (0.5 m in front of the panel), R1..R4 and L1..L9 at 1 m spacing
    /// along the crossbar, each swept in 6 deg steps. Height 1.7 m.
    Scenario t_corridor(bool with_panel = true, PanelMode mode = PanelMode::table2,
                        double tx_to_p0_m = kDefaultTxToP0);

    /// 6.5 x 2.2 x 2.5 m room, horns 3 m apart on a line parallel to the
    /// whiteboard wall at 0.86 m, board centred on the link. Blocked cases
    /// put a 0.45 x 0.13 x 1.72 m body midway, chest at antenna height.
    /// Depointing turns an antenna 30 deg towards the board.
    Scenario meeting_room(MeetingRoomCase c = MeetingRoomCase::los);

    /// validate_scene plus terminal checks (at least one Tx and Rx, unique
    /// labels, sane patterns and sweep steps, not sitting on a hard segment).
    std::vector<Violation> validate_scenario(const Scenario &s);
} // namespace nlos

#endif
