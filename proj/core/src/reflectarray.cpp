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

#include "nlos/reflectarray.hpp"

#include "nlos/units.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace nlos
{
    namespace
    {
        using cplx = std::complex<double>;

        double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

        double element_factor(double sin_t, double cos_t, double k0, double width_m, ElementFactor ef)
        {
            if (ef == ElementFactor::none)
                return 1.0;
            return sinc(0.5 * k0 * width_m * sin_t) * cos_t;
        }
    } // namespace

    double GroovePanel::aperture_m() const
    {
        return std::accumulate(cells.begin(), cells.end(), 0.0,
                               [](double acc, const GrooveCell &c) { return acc + c.pitch_mm; }) *
               1e-3;
    }

    std::vector<double> GroovePanel::cell_centers_m() const
    {
        std::vector<double> x;
        x.reserve(cells.size());
        const double half = 0.5 * aperture_m();
        double edge = 0.0;
        for (const auto &c : cells)
        {
            const double p = c.pitch_mm * 1e-3;
            x.push_back(edge + 0.5 * p - half);
            edge += p;
        }
        return x;
    }

    std::vector<std::string> panel_problems(const GroovePanel &panel)
    {
        std::vector<std::string> out;
        if (panel.cells.empty())
            out.emplace_back("panel has no cells");
        for (std::size_t i = 0; i < panel.cells.size(); ++i)
        {
            const auto &c = panel.cells[i];
            if (!(c.width_mm > 0.0 && c.width_mm < c.pitch_mm))
                out.push_back("cell " + std::to_string(i) + ": width must satisfy 0 < b < p");
            if (!(c.depth_mm >= 0.0))
                out.push_back("cell " + std::to_string(i) + ": depth must be >= 0");
        }
        if (!(panel.design_frequency_ghz > 0.0))
            out.emplace_back("design frequency must be positive");
        if (!panel.cells.empty() && std::abs(panel.size_x_m - panel.aperture_m()) > 1e-9)
            out.emplace_back("size_x_m must equal the sum of cell pitches");
        return out;
    }

    std::string_view to_string(PanelMode mode) { return mode == PanelMode::table2 ? "table2" : "ideal_tem"; }

    std::optional<PanelMode> parse_panel_mode(std::string_view text)
    {
        if (text == "table2")
            return PanelMode::table2;
        if (text == "ideal_tem")
            return PanelMode::ideal_tem;
        return std::nullopt;
    }

    double cell_phase_deg(const GrooveCell &cell, double f_ghz)
    {
        // Shorted line: 180 deg at the mouth, minus the TEM round trip.
        const double round_trip = 2.0 * wavenumber(f_ghz) * cell.depth_mm * 1e-3;
        return wrap_deg_180(180.0 - rad_to_deg(round_trip));
    }

    GroovePanel design_panel(double f_ghz, int n_cells, PanelMode mode)
    {
        if (!(f_ghz > 0.0))
            throw std::domain_error("design_panel: frequency must be positive");
        if (n_cells <= 0 || n_cells % 2 != 0)
            throw std::domain_error("design_panel: cell count must be a positive even number");

        GroovePanel panel;
        panel.design_frequency_ghz = f_ghz;
        panel.cells.reserve(static_cast<std::size_t>(n_cells));

        GrooveCell first;
        GrooveCell second;
        if (mode == PanelMode::table2)
        {
            first = {2.5, 2.0, 2.3};
            second = {2.5, 2.0, 0.48};
        }
        else
        {
            const double lambda_mm = wavelength_m(f_ghz) * 1e3;
            const double pitch = 0.5 * lambda_mm;
            // Same width-to-pitch ratio as the fabricated cells.
            first = {pitch, 0.8 * pitch, 0.0};
            second = {pitch, 0.8 * pitch, 0.25 * lambda_mm};
        }
        for (int i = 0; i < n_cells; ++i)
            panel.cells.push_back(i % 2 == 0 ? first : second);

        panel.size_x_m = panel.aperture_m();
        panel.size_y_m = panel.size_x_m;
        return panel;
    }

    std::complex<double> scattered_amplitude(const GroovePanel &panel, Vec2 incident_dir, double obs_angle_deg,
                                             double f_ghz, ElementFactor ef)
    {
        if (panel.cells.empty())
            return 0.0;
        const Vec2 d = incident_dir.normalized();
        if (!(d.y < 0.0))
            return 0.0; // wave arriving from behind the grooved face

        const double k0 = wavenumber(f_ghz);
        const double sin_i = d.x;
        const double cos_i = -d.y;
        const double th = deg_to_rad(obs_angle_deg);
        const double sin_o = std::sin(th);
        const double cos_o = std::cos(th);
        const double du = sin_o - sin_i;

        const auto x = panel.cell_centers_m();
        cplx sum = 0.0;
        for (std::size_t n = 0; n < panel.cells.size(); ++n)
        {
            const auto &cell = panel.cells[n];
            const double b = cell.width_mm * 1e-3;
            const double phase = deg_to_rad(cell_phase_deg(cell, f_ghz)) + k0 * x[n] * du;
            const double ef_io = element_factor(sin_i, cos_i, k0, b, ef) * element_factor(sin_o, cos_o, k0, b, ef);
            sum += ef_io * std::polar(1.0, phase);
        }
        // A flat PEC plate has every cell at 180 deg; divide that out.
        return -sum / static_cast<double>(panel.cells.size());
    }

    ScatterPattern scatter_pattern(const GroovePanel &panel, Vec2 incident_dir, double f_ghz, double step_deg,
                                   ElementFactor ef)
    {
        if (!(step_deg > 0.0))
            throw std::invalid_argument("scatter_pattern: step must be positive");
        const auto n = static_cast<std::size_t>(std::lround(180.0 / step_deg)) + 1;
        ScatterPattern out;
        out.angles_deg.reserve(n);
        out.amplitude.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
        {
            const double a = (i + 1 == n) ? 90.0 : -90.0 + static_cast<double>(i) * step_deg;
            out.angles_deg.push_back(a);
            out.amplitude.push_back(scattered_amplitude(panel, incident_dir, a, f_ghz, ef));
        }
        return out;
    }

    std::vector<double> peak_directions(const ScatterPattern &pattern, PeakSearch search)
    {
        const auto &ang = pattern.angles_deg;
        const std::size_t n = ang.size();
        std::vector<double> mag(n);
        for (std::size_t i = 0; i < n; ++i)
            mag[i] = std::abs(pattern.amplitude[i]);

        std::vector<std::size_t> maxima;
        for (std::size_t i = 0; i < n; ++i)
        {
            if (std::abs(ang[i]) < search.min_abs_angle_deg)
                continue;
            const bool left_ok = (i == 0) || mag[i] > mag[i - 1];
            const bool right_ok = (i + 1 == n) || mag[i] >= mag[i + 1];
            if (n > 1 && left_ok && right_ok && mag[i] > 0.0)
                maxima.push_back(i);
        }
        if (maxima.empty())
            return {};

        double strongest = 0.0;
        for (auto i : maxima)
            strongest = std::max(strongest, mag[i]);
        const double floor = strongest * db_to_amplitude(-search.threshold_db);
        std::erase_if(maxima, [&](std::size_t i) { return mag[i] < floor; });

        std::sort(maxima.begin(), maxima.end(), [&](std::size_t a, std::size_t b) {
            if (mag[a] != mag[b])
                return mag[a] > mag[b];
            return ang[a] > ang[b];
        });

        std::vector<double> out;
        out.reserve(maxima.size());
        for (auto i : maxima)
            out.push_back(ang[i]);
        return out;
    }

    std::vector<double> peak_directions(const GroovePanel &panel, Vec2 incident_dir, double f_ghz,
                                        ElementFactor ef, PeakSearch search)
    {
        return peak_directions(scatter_pattern(panel, incident_dir, f_ghz, 0.1, ef), search);
    }

    double half_power_beamwidth_deg(const ScatterPattern &pattern, double peak_deg)
    {
        const auto &ang = pattern.angles_deg;
        const std::size_t n = ang.size();
        if (n == 0)
            return 0.0;

        std::size_t ip = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (std::abs(ang[i] - peak_deg) < std::abs(ang[ip] - peak_deg))
                ip = i;

        auto db = [&](std::size_t i) { return amplitude_to_db(std::abs(pattern.amplitude[i])); };
        const double level = db(ip) - 10.0 * std::log10(2.0);

        auto crossing = [&](std::size_t inside, std::size_t outside) {
            const double a = db(inside);
            const double b = db(outside);
            const double f = (a - level) / (a - b);
            return ang[inside] + f * (ang[outside] - ang[inside]);
        };

        double lo = ang.front();
        for (std::size_t i = ip; i > 0; --i)
        {
            if (db(i - 1) < level)
            {
                lo = crossing(i, i - 1);
                break;
            }
        }
        double hi = ang.back();
        for (std::size_t i = ip; i + 1 < n; ++i)
        {
            if (db(i + 1) < level)
            {
                hi = crossing(i, i + 1);
                break;
            }
        }
        return hi - lo;
    }

    double scattered_power(const GroovePanel &panel, Vec2 incident_dir, double f_ghz, ElementFactor ef,
                           double step_deg)
    {
        const auto p = scatter_pattern(panel, incident_dir, f_ghz, step_deg, ef);
        double integral = 0.0;
        for (std::size_t i = 1; i < p.angles_deg.size(); ++i)
        {
            const double h = deg_to_rad(p.angles_deg[i] - p.angles_deg[i - 1]);
            integral += 0.5 * h * (std::norm(p.amplitude[i]) + std::norm(p.amplitude[i - 1]));
        }
        return panel.aperture_m() / wavelength_m(f_ghz) * integral;
    }
} // namespace nlos
