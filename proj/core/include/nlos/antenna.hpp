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

#ifndef NLOS_ANTENNA_HPP
#define NLOS_ANTENNA_HPP

#include <optional>
#include <string_view>

namespace nlos
{
    enum class PatternKind
    {
        omni,
        horn,
    };

    std::string_view to_string(PatternKind kind);
    std::optional<PatternKind> parse_pattern_kind(std::string_view text);

    /// Parametric gain model: parabolic-in-dB main lobe (-3 dB at half the
    /// HPBW) clamped at a flat floor `sidelobe_floor_db` below boresight.
    /// Omni patterns ignore azimuth.
    struct AntennaPattern
    {
        PatternKind kind = PatternKind::omni;
        double boresight_gain_dbi = 0.0;
        double hpbw_az_deg = 360.0;
        double hpbw_el_deg = 90.0;
        double sidelobe_floor_db = 25.0;

        bool operator==(const AntennaPattern &) const = default;

        static AntennaPattern horn(double gain_dbi, double hpbw_az_deg, double hpbw_el_deg,
                                   double sidelobe_floor_db = 25.0);
        static AntennaPattern omni(double gain_dbi, double hpbw_el_deg, double sidelobe_floor_db = 25.0);
    };

    // Standard 60 GHz horn and omni.
    AntennaPattern standard_horn();  // 22.5 dBi, 13 deg az, 10 deg el
    AntennaPattern standard_omni();  // 2 dBi, 30 deg el

    double gain_dbi(const AntennaPattern &pattern, double offset_az_deg, double offset_el_deg);

    /// Same shape, boresight gain moved to 0 dBi. Used for the "antenna gains
    /// removed" view of a link.
    AntennaPattern boresight_normalized(const AntennaPattern &pattern);

    /// Pointing direction in the scene frame, degrees counterclockwise from +x,
    /// always held in [0, 360).
    class Orientation
    {
    public:
        Orientation() = default;
        explicit Orientation(double azimuth_deg);

        double azimuth_deg() const { return azimuth_deg_; }

        /// Signed angle from boresight to `direction_az_deg`, in (-180, 180].
        double offset_to(double direction_az_deg) const;

        bool operator==(const Orientation &) const = default;

    private:
        double azimuth_deg_ = 0.0;
    };
} // namespace nlos

#endif
