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

#ifndef NLOS_UNITS_HPP
#define NLOS_UNITS_HPP

#include <cmath>
#include <numbers>

namespace nlos
{
    inline constexpr double kSpeedOfLight = 299792458.0; // m/s
    inline constexpr double kPi = std::numbers::pi;

    constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
    constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

    inline double wavelength_m(double f_ghz) { return kSpeedOfLight / (f_ghz * 1e9); }
    inline double wavenumber(double f_ghz) { return 2.0 * kPi / wavelength_m(f_ghz); }

    // Wraps to (-180, 180].
    inline double wrap_deg_180(double deg)
    {
        double r = std::fmod(deg, 360.0);
        if (r <= -180.0)
            r += 360.0;
        else if (r > 180.0)
            r -= 360.0;
        return r;
    }

    // Wraps to [0, 360).
    inline double wrap_deg_360(double deg)
    {
        double r = std::fmod(deg, 360.0);
        if (r < 0.0)
            r += 360.0;
        if (r >= 360.0)
            r -= 360.0;
        return r;
    }

    inline double db_to_amplitude(double db) { return std::pow(10.0, db / 20.0); }
    inline double db_to_power(double db) { return std::pow(10.0, db / 10.0); }
    inline double amplitude_to_db(double a) { return 20.0 * std::log10(a); }
    inline double power_to_db(double p) { return 10.0 * std::log10(p); }
} // namespace nlos

#endif
