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

#ifndef NLOS_REFLECTARRAY_HPP
#define NLOS_REFLECTARRAY_HPP

#include "nlos/geometry.hpp"

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nlos
{
    /// One groove of a metal-only reflectarray, dimensions in millimetres.
    struct GrooveCell
    {
        double pitch_mm = 2.5;
        double width_mm = 2.0;
        double depth_mm = 0.0;

        bool operator==(const GrooveCell &) const = default;
    };

    /// Grooves ordered along the panel's local x axis (segment a -> b).
    struct GroovePanel
    {
        std::vector<GrooveCell> cells;
        double design_frequency_ghz = 60.0;
        double size_x_m = 0.0;
        double size_y_m = 0.0;
        double conductivity_s_per_m = 37.8e6;

        bool operator==(const GroovePanel &) const = default;

        double aperture_m() const; // sum of pitches
        /// Cell centre abscissae measured from the panel middle, m.
        std::vector<double> cell_centers_m() const;
    };

    std::vector<std::string> panel_problems(const GroovePanel &panel);

    enum class PanelMode
    {
        ideal_tem, // depths {0, lambda/4}, pitch lambda/2
        table2,    // fabricated cells: p = 2.5, b = 2, h = {2.3, 0.48} mm
    };

    std::string_view to_string(PanelMode mode);
    std::optional<PanelMode> parse_panel_mode(std::string_view text);

    enum class ElementFactor
    {
        groove, // sinc(k b sin(theta) / 2) * cos(theta)
        none,   // bare array factor
    };

    /// Reflection phase of a shorted parallel-plate groove under the TEM
    /// model, degrees in (-180, 180].
    double cell_phase_deg(const GrooveCell &cell, double f_ghz);

    /// Alternating two-cell panel. Throws std::domain_error for odd or
    /// non-positive `n_cells`, or f <= 0.
    GroovePanel design_panel(double f_ghz, int n_cells, PanelMode mode);

    /// Far-field bistatic amplitude of the panel relative to a same-size flat
    /// PEC plate viewed at specular (|A| = 1 there).
    ///
    /// Frame: local x along the cells, local y the outward (lit) normal.
    /// `incident_dir` is the propagation direction of the incoming wave in
    /// that frame (normal incidence is (0, -1)); `obs_angle_deg` is measured
    /// from the normal, positive towards +x. The element factor is applied
    /// on both the incident and the observed side, which keeps the result
    /// reciprocal.
    std::complex<double> scattered_amplitude(const GroovePanel &panel, Vec2 incident_dir, double obs_angle_deg,
                                             double f_ghz, ElementFactor ef = ElementFactor::groove);

    struct ScatterPattern
    {
        std::vector<double> angles_deg;
        std::vector<std::complex<double>> amplitude;
    };

    /// Pattern sampled on a uniform grid from -90 to +90 degrees inclusive.
    ScatterPattern scatter_pattern(const GroovePanel &panel, Vec2 incident_dir, double f_ghz,
                                   double step_deg = 0.1, ElementFactor ef = ElementFactor::groove);

    struct PeakSearch
    {
        double min_abs_angle_deg = 0.0; // ignore lobes closer to the normal than this
        double threshold_db = 10.0;     // keep lobes within this of the strongest one found
    };

    /// Lobe maxima of |A| on the pattern grid, strongest first. Grid end
    /// points count as maxima when they beat their single neighbour.
    std::vector<double> peak_directions(const ScatterPattern &pattern, PeakSearch search = {});
    std::vector<double> peak_directions(const GroovePanel &panel, Vec2 incident_dir, double f_ghz,
                                        ElementFactor ef = ElementFactor::groove, PeakSearch search = {});

    /// Half-power width of the lobe containing `peak_deg`, with linear
    /// interpolation in dB between grid samples. A lobe that is still above
    /// half power at the edge of the grid is cut there.
    double half_power_beamwidth_deg(const ScatterPattern &pattern, double peak_deg);

    /// (W / lambda) * integral |A|^2 dtheta over the visible range, which for
    /// a lossless reflector equals cos(theta_inc).
    double scattered_power(const GroovePanel &panel, Vec2 incident_dir, double f_ghz,
                           ElementFactor ef = ElementFactor::groove, double step_deg = 0.01);
} // namespace nlos

#endif
