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

#ifndef NLOS_RAYTRACE_HPP
#define NLOS_RAYTRACE_HPP

#include "nlos/antenna.hpp"
#include "nlos/scene.hpp"

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nlos
{
    /// A radio end point: position, antenna and pointing. `sweep_step_deg`
    /// marks receivers that are rotated through 360 degrees.
    struct Terminal
    {
        std::string label;
        Point2 position;
        AntennaPattern pattern;
        Orientation orientation;
        std::optional<double> sweep_step_deg;

        bool operator==(const Terminal &) const = default;
    };

    enum class InteractionType
    {
        specular,
        reflectarray,
        diffraction,
    };

    std::string_view to_string(InteractionType type);

    struct Interaction
    {
        std::string segment_id;
        std::size_t segment = 0; // index into Scene::segments
        InteractionType type = InteractionType::specular;

        bool operator==(const Interaction &) const = default;
    };

    /// Polyline Tx -> interaction points -> Rx. There is exactly one interior
    /// vertex per interaction.
    struct PropagationPath
    {
        std::vector<Point2> vertices;
        std::vector<Interaction> interactions;
        double length_m = 0.0;
        double departure_az_deg = 0.0; // leaving Tx
        double arrival_az_deg = 0.0;   // direction from Rx back towards the last vertex

        std::size_t order() const { return interactions.size(); }
        double delay_s() const;
    };

    struct TraceOptions
    {
        int max_order = 2;             // specular / reflectarray bounces, 0..3
        bool corner_diffraction = true; // one knife-edge path per shadowing wall corner
    };

    /// LOS, image-method specular paths and reflectarray bounces up to
    /// `max_order`, plus corner-diffracted paths. Every leg is checked against
    /// the hard segments of the scene; absorber screens and blockers only
    /// attenuate (see path_gain). Sorted by (order, length, segment ids).
    /// Throws std::domain_error when tx == rx or max_order is outside 0..3.
    std::vector<PropagationPath> find_paths(const Scene &scene, Point2 tx, Point2 rx,
                                            const TraceOptions &options = {});

    enum class GainView
    {
        with_antennas,
        channel_only, // antenna patterns normalised to 0 dBi at boresight
    };

    std::string_view to_string(GainView view);
    std::optional<GainView> parse_gain_view(std::string_view text);

    struct LinkEnds
    {
        AntennaPattern tx_pattern;
        Orientation tx_orientation;
        AntennaPattern rx_pattern;
        Orientation rx_orientation;

        static LinkEnds of(const Terminal &tx, const Terminal &rx);
        LinkEnds swapped() const;
    };

    /// Free-space loss 20 log10(4 pi d / lambda). Throws std::domain_error for
    /// d <= 0 or f <= 0.
    double friis_path_loss(double f_ghz, double d_m);

    /// Complex path amplitude at one frequency: spreading lambda / (4 pi L),
    /// interaction coefficients, blocker and absorber factors on each leg,
    /// antenna amplitudes, and the propagation phase -k L.
    std::complex<double> path_gain(const PropagationPath &path, const Scene &scene, const LinkEnds &ends,
                                   double f_ghz, GainView view = GainView::with_antennas);

    /// path_gain without the exp(-j k L) propagation term.
    std::complex<double> path_gain_excluding_delay(const PropagationPath &path, const Scene &scene,
                                                   const LinkEnds &ends, double f_ghz,
                                                   GainView view = GainView::with_antennas);

    /// A path with its frequency-dependent amplitude, delay phase excluded.
    /// The gain function refers to the scene it was built from, which must
    /// outlive it.
    struct LinkBudgetTerm
    {
        PropagationPath path;
        std::function<std::complex<double>(double f_ghz)> gain_fn;

        double delay_s() const { return path.delay_s(); }
    };

    std::vector<LinkBudgetTerm> link_budget(const Scene &scene, const std::vector<PropagationPath> &paths,
                                            const LinkEnds &ends, GainView view);
} // namespace nlos

#endif
