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

#ifndef NLOS_DIFFRACTION_HPP
#define NLOS_DIFFRACTION_HPP

#include "nlos/geometry.hpp"

#include <complex>

namespace nlos
{
    /// Human body approximated as a perfectly absorbing vertical screen that
    /// faces the link it obstructs. It extends from the floor to
    /// `top_height_m`; the bottom edge is never considered.
    struct BlockerScreen
    {
        Point2 center;
        double width_m = 0.45;
        double thickness_m = 0.13; // kept for scenario fidelity, not used by the screen model
        double height_m = 1.72;
        double top_height_m = 1.72;

        bool operator==(const BlockerScreen &) const = default;
    };

    struct FresnelIntegrals
    {
        double c = 0.0; // integral of cos(pi t^2 / 2) from 0 to x
        double s = 0.0; // integral of sin(pi t^2 / 2) from 0 to x
    };

    /// Power series below |x| = 1.5, continued fraction above; accurate to a
    /// few ulps. C(+-inf) = S(+-inf) = +-0.5.
    FresnelIntegrals fresnel_integrals(double x);

    /// Normalised Fresnel aperture integral
    ///   ((1 + j) / 2) * integral_{v1}^{v2} exp(-j pi t^2 / 2) dt,
    /// equal to 1 over the whole line. Infinite limits are allowed.
    std::complex<double> fresnel_aperture(double v1, double v2);

    double fresnel_v(double clearance_m, double d1_m, double d2_m, double f_ghz);
    double fresnel_radius(double f_ghz, double d1_m, double d2_m);

    /// Field behind an absorbing half-plane relative to free space; v > 0 is
    /// an obstructing edge.
    std::complex<double> knife_edge_field(double v);

    /// -20 log10 |knife_edge_field(v)|.
    double knife_edge_loss(double v);

    /// Closed-form 6.9 + 20 log10(sqrt((v - 0.1)^2 + 1) + v - 0.1). Approximate;
    /// returns 0 for v <= -0.78.
    double knife_edge_loss_approx(double v);

    struct ElevatedPoint
    {
        Point2 xy;
        double height_m = 0.0;
    };

    /// Complex field ratio behind a blocker screen for the ray tx -> rx. The
    /// screen is taken perpendicular to the ray at the projection of its
    /// centre. Returns exactly 1 when that projection falls outside the ray.
    std::complex<double> screen_field_factor(const BlockerScreen &screen, ElevatedPoint tx, ElevatedPoint rx,
                                             double f_ghz);

    /// Lateral-only variant for an infinitely tall absorbing strip lying
    /// across the ray (the absorber_screen segment kind).
    std::complex<double> strip_field_factor(const Segment &strip, Point2 tx, Point2 rx, double f_ghz);

    /// -20 log10 |screen_field_factor|.
    double screen_blockage_loss(const BlockerScreen &screen, ElevatedPoint tx, ElevatedPoint rx, double f_ghz);
} // namespace nlos

#endif
