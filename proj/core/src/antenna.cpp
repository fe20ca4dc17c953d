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

#include "nlos/antenna.hpp"

#include "nlos/units.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nlos
{
    std::string_view to_string(PatternKind kind)
    {
        return kind == PatternKind::horn ? "horn" : "omni";
    }

    std::optional<PatternKind> parse_pattern_kind(std::string_view text)
    {
        if (text == "horn")
            return PatternKind::horn;
        if (text == "omni")
            return PatternKind::omni;
        return std::nullopt;
    }

    AntennaPattern AntennaPattern::horn(double gain_dbi, double hpbw_az_deg, double hpbw_el_deg,
                                        double sidelobe_floor_db)
    {
        return {PatternKind::horn, gain_dbi, hpbw_az_deg, hpbw_el_deg, sidelobe_floor_db};
    }

    AntennaPattern AntennaPattern::omni(double gain_dbi, double hpbw_el_deg, double sidelobe_floor_db)
    {
        return {PatternKind::omni, gain_dbi, 360.0, hpbw_el_deg, sidelobe_floor_db};
    }

    AntennaPattern standard_horn() { return AntennaPattern::horn(22.5, 13.0, 10.0); }
    AntennaPattern standard_omni() { return AntennaPattern::omni(2.0, 30.0); }

    double gain_dbi(const AntennaPattern &pattern, double offset_az_deg, double offset_el_deg)
    {
        if (pattern.hpbw_az_deg <= 0.0 || pattern.hpbw_el_deg <= 0.0 || pattern.sidelobe_floor_db <= 0.0)
            throw std::invalid_argument("antenna pattern: beamwidths and sidelobe floor must be positive");

        const double el = std::abs(wrap_deg_180(offset_el_deg)) / pattern.hpbw_el_deg;
        double drop = 12.0 * el * el;
        if (pattern.kind == PatternKind::horn)
        {
            const double az = std::abs(wrap_deg_180(offset_az_deg)) / pattern.hpbw_az_deg;
            drop += 12.0 * az * az;
        }
        return pattern.boresight_gain_dbi - std::min(drop, pattern.sidelobe_floor_db);
    }

    AntennaPattern boresight_normalized(const AntennaPattern &pattern)
    {
        AntennaPattern out = pattern;
        out.boresight_gain_dbi = 0.0;
        return out;
    }

    Orientation::Orientation(double azimuth_deg)
        : azimuth_deg_(wrap_deg_360(azimuth_deg))
    {
    }

    double Orientation::offset_to(double direction_az_deg) const
    {
        return wrap_deg_180(direction_az_deg - azimuth_deg_);
    }
} // namespace nlos
