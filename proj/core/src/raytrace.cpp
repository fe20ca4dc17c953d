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

#include "nlos/raytrace.hpp"

#include "nlos/units.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace nlos
{
    namespace
    {
        using cplx = std::complex<double>;

        struct Step
        {
            std::size_t segment;
            InteractionType type;
        };

        // Reflection points for P -> s1 -> ... -> sm -> Q by back-tracing
        // from Q through the successive images of P.
        std::optional<std::vector<Point2>> solve_images(const Scene &scene, Point2 p, Point2 q,
                                                        const std::vector<std::size_t> &chain)
        {
            std::vector<Point2> images;
            images.reserve(chain.size() + 1);
            images.push_back(p);
            for (auto idx : chain)
                images.push_back(mirror(images.back(), scene.segments[idx]));

            std::vector<Point2> points(chain.size());
            Point2 target = q;
            for (std::size_t j = chain.size(); j > 0; --j)
            {
                const Vec2 d = images[j] - target;
                const double len = d.norm();
                if (!(len > kMinHitDistance))
                    return std::nullopt;
                const auto hit = intersect(target, d / len, scene.segments[chain[j - 1]]);
                if (!hit || hit->t >= len - kMinHitDistance)
                    return std::nullopt;
                points[j - 1] = hit->point;
                target = hit->point;
            }
            return points;
        }

        bool leg_clear(const Scene &scene, const std::vector<std::size_t> &hard, Point2 p, Point2 q)
        {
            return std::none_of(hard.begin(), hard.end(),
                                [&](std::size_t i) { return blocks(scene.segments[i], p, q); });
        }

        PropagationPath make_path(const Scene &scene, std::vector<Point2> vertices, const std::vector<Step> &steps)
        {
            PropagationPath path;
            path.vertices = std::move(vertices);
            for (const auto &s : steps)
                path.interactions.push_back({scene.segments[s.segment].id, s.segment, s.type});
            for (std::size_t i = 1; i < path.vertices.size(); ++i)
                path.length_m += distance(path.vertices[i - 1], path.vertices[i]);
            const auto &v = path.vertices;
            path.departure_az_deg = azimuth_deg(v[1] - v[0]);
            path.arrival_az_deg = azimuth_deg(v[v.size() - 2] - v.back());
            return path;
        }

        std::optional<std::vector<Point2>> resolve(const Scene &scene, Point2 tx, Point2 rx,
                                                   const std::vector<Step> &steps)
        {
            std::vector<Point2> vertices{tx};
            std::vector<std::size_t> chain;
            Point2 anchor = tx;

            auto close_chain = [&](Point2 end) -> bool {
                if (chain.empty())
                    return true;
                auto pts = solve_images(scene, anchor, end, chain);
                if (!pts)
                    return false;
                vertices.insert(vertices.end(), pts->begin(), pts->end());
                chain.clear();
                return true;
            };

            for (const auto &s : steps)
            {
                if (s.type == InteractionType::specular)
                {
                    chain.push_back(s.segment);
                    continue;
                }
                const Point2 centre = scene.segments[s.segment].midpoint();
                if (!close_chain(centre))
                    return std::nullopt;
                vertices.push_back(centre);
                anchor = centre;
            }
            if (!close_chain(rx))
                return std::nullopt;
            vertices.push_back(rx);

            // Reflectarrays only work from their grooved face.
            for (std::size_t k = 0; k < steps.size(); ++k)
            {
                if (steps[k].type != InteractionType::reflectarray)
                    continue;
                const auto &seg = scene.segments[steps[k].segment];
                const Point2 c = vertices[k + 1];
                if (!(dot(vertices[k] - c, seg.normal()) > kMinHitDistance) ||
                    !(dot(vertices[k + 2] - c, seg.normal()) > kMinHitDistance))
                    return std::nullopt;
            }
            return vertices;
        }

        void enumerate(const std::vector<Step> &candidates, int max_order, std::vector<Step> &prefix,
                       const std::function<void(const std::vector<Step> &)> &visit)
        {
            if (!prefix.empty())
                visit(prefix);
            if (static_cast<int>(prefix.size()) == max_order)
                return;
            for (const auto &c : candidates)
            {
                if (!prefix.empty() && prefix.back().segment == c.segment)
                    continue;
                prefix.push_back(c);
                enumerate(candidates, max_order, prefix, visit);
                prefix.pop_back();
            }
        }

        struct Corner
        {
            Point2 at;
            std::vector<std::size_t> walls;
            std::vector<double> wall_az; // direction of each wall leaving the corner
        };

        std::vector<Corner> wall_corners(const Scene &scene)
        {
            std::vector<Corner> corners;
            auto add = [&](Point2 p, Point2 other, std::size_t idx) {
                for (auto &c : corners)
                {
                    if (distance(c.at, p) <= kIntersectTolerance)
                    {
                        c.walls.push_back(idx);
                        c.wall_az.push_back(azimuth_deg(other - p));
                        return;
                    }
                }
                corners.push_back({p, {idx}, {azimuth_deg(other - p)}});
            };
            for (std::size_t i = 0; i < scene.segments.size(); ++i)
            {
                const auto &s = scene.segments[i];
                if (s.kind != SegmentKind::wall || !(s.length() > 0.0))
                    continue;
                add(s.a, s.b, i);
                add(s.b, s.a, i);
            }
            return corners;
        }

        // Tx and Rx must both see the corner from one free sector wider than
        // a half plane, i.e. the corner is an exterior (convex) edge for them.
        bool in_common_wide_sector(const Corner &c, double az_t, double az_r)
        {
            std::vector<double> az;
            for (double a : c.wall_az)
                az.push_back(wrap_deg_360(a));
            std::sort(az.begin(), az.end());
            auto sector_of = [&](double a) {
                a = wrap_deg_360(a);
                for (std::size_t i = 0; i < az.size(); ++i)
                    if (a < az[i])
                        return i;
                return std::size_t{0};
            };
            const std::size_t st = sector_of(az_t);
            if (st != sector_of(az_r))
                return false;
            if (az.size() == 1)
                return true;
            const double lo = st == 0 ? az.back() : az[st - 1];
            const double width = wrap_deg_360(az[st] - lo);
            return width > 180.0 + 1e-9;
        }

        double amplitude_of(const AntennaPattern &p, double offset_az_deg)
        {
            return db_to_amplitude(gain_dbi(p, offset_az_deg, 0.0));
        }

        cplx interaction_coefficient(const PropagationPath &path, std::size_t k, const Scene &scene, double f_ghz)
        {
            const auto &in = path.interactions[k];
            const auto &seg = scene.segments[in.segment];
            const Point2 prev = path.vertices[k];
            const Point2 here = path.vertices[k + 1];
            const Point2 next = path.vertices[k + 2];

            switch (in.type)
            {
            case InteractionType::specular: {
                const Vec2 d_in = (here - prev).normalized();
                const double c = std::min(1.0, std::abs(dot(d_in, seg.normal())));
                const double theta = std::min(rad_to_deg(std::acos(c)), 90.0 - 1e-9);
                return reflection_coefficient(scene.material_of(seg), theta, scene.polarization, f_ghz);
            }
            case InteractionType::reflectarray: {
                const Vec2 ex = seg.direction();
                const Vec2 ey = seg.normal();
                const Vec2 d_in = (here - prev).normalized();
                const Vec2 d_out = (next - here).normalized();
                const Vec2 local_in{dot(d_in, ex), dot(d_in, ey)};
                const double obs = rad_to_deg(std::atan2(dot(d_out, ex), dot(d_out, ey)));
                // Relative amplitude is +1 for a PEC plate; the plate itself reflects with -1.
                return -scattered_amplitude(scene.panel_of(seg), local_in, obs, f_ghz);
            }
            case InteractionType::diffraction: {
                const double d = distance(path.vertices.front(), path.vertices.back());
                const double excess = std::max(0.0, path.length_m - d);
                const double v = 2.0 * std::sqrt(excess / wavelength_m(f_ghz));
                const double k0 = wavenumber(f_ghz);
                return knife_edge_field(v) * std::polar(1.0, k0 * excess) * (path.length_m / d);
            }
            }
            return 0.0;
        }
    } // namespace

    double PropagationPath::delay_s() const { return length_m / kSpeedOfLight; }

    std::string_view to_string(InteractionType type)
    {
        switch (type)
        {
        case InteractionType::specular:
            return "specular";
        case InteractionType::reflectarray:
            return "reflectarray";
        case InteractionType::diffraction:
            return "diffraction";
        }
        return "unknown";
    }

    std::vector<PropagationPath> find_paths(const Scene &scene, Point2 tx, Point2 rx, const TraceOptions &options)
    {
        if (tx == rx)
            throw std::domain_error("find_paths: tx and rx coincide");
        if (options.max_order < 0 || options.max_order > 3)
            throw std::domain_error("find_paths: max_order must be within 0..3");

        std::vector<std::size_t> hard;
        std::vector<Step> candidates;
        for (std::size_t i = 0; i < scene.segments.size(); ++i)
        {
            const auto &s = scene.segments[i];
            if (!(s.length() > 0.0))
                continue;
            if (s.is_obstacle())
                hard.push_back(i);
            if (s.is_reflector() && scene.materials.contains(s.material_id))
                candidates.push_back({i, InteractionType::specular});
            else if (s.kind == SegmentKind::reflectarray_panel && scene.panels.contains(s.id))
                candidates.push_back({i, InteractionType::reflectarray});
        }

        std::vector<PropagationPath> paths;
        if (leg_clear(scene, hard, tx, rx))
            paths.push_back(make_path(scene, {tx, rx}, {}));

        std::vector<Step> prefix;
        enumerate(candidates, options.max_order, prefix, [&](const std::vector<Step> &steps) {
            auto vertices = resolve(scene, tx, rx, steps);
            if (!vertices)
                return;
            for (std::size_t i = 1; i < vertices->size(); ++i)
                if (!leg_clear(scene, hard, (*vertices)[i - 1], (*vertices)[i]))
                    return;
            paths.push_back(make_path(scene, std::move(*vertices), steps));
        });

        if (options.corner_diffraction && options.max_order >= 1)
        {
            for (const auto &corner : wall_corners(scene))
            {
                if (corner.at == tx || corner.at == rx)
                    continue;
                const bool shadows = std::any_of(corner.walls.begin(), corner.walls.end(),
                                                 [&](std::size_t i) { return blocks(scene.segments[i], tx, rx); });
                if (!shadows)
                    continue;
                if (!in_common_wide_sector(corner, azimuth_deg(tx - corner.at), azimuth_deg(rx - corner.at)))
                    continue;
                if (!leg_clear(scene, hard, tx, corner.at) || !leg_clear(scene, hard, corner.at, rx))
                    continue;
                // Attributed to the lowest-index wall meeting at the corner.
                const std::size_t w = *std::min_element(corner.walls.begin(), corner.walls.end());
                paths.push_back(make_path(scene, {tx, corner.at, rx}, {{w, InteractionType::diffraction}}));
            }
        }

        std::stable_sort(paths.begin(), paths.end(), [](const PropagationPath &a, const PropagationPath &b) {
            if (a.order() != b.order())
                return a.order() < b.order();
            if (a.length_m != b.length_m)
                return a.length_m < b.length_m;
            for (std::size_t i = 0; i < a.interactions.size(); ++i)
            {
                if (a.interactions[i].segment_id != b.interactions[i].segment_id)
                    return a.interactions[i].segment_id < b.interactions[i].segment_id;
                if (a.interactions[i].type != b.interactions[i].type)
                    return a.interactions[i].type < b.interactions[i].type;
            }
            return false;
        });
        return paths;
    }

    std::string_view to_string(GainView view)
    {
        return view == GainView::channel_only ? "channel_only" : "with_antennas";
    }

    std::optional<GainView> parse_gain_view(std::string_view text)
    {
        if (text == "with_antennas")
            return GainView::with_antennas;
        if (text == "channel_only")
            return GainView::channel_only;
        return std::nullopt;
    }

    LinkEnds LinkEnds::of(const Terminal &tx, const Terminal &rx)
    {
        return {tx.pattern, tx.orientation, rx.pattern, rx.orientation};
    }

    LinkEnds LinkEnds::swapped() const { return {rx_pattern, rx_orientation, tx_pattern, tx_orientation}; }

    double friis_path_loss(double f_ghz, double d_m)
    {
        if (!(d_m > 0.0))
            throw std::domain_error("friis_path_loss: distance must be positive");
        if (!(f_ghz > 0.0))
            throw std::domain_error("friis_path_loss: frequency must be positive");
        return 20.0 * std::log10(4.0 * kPi * d_m / wavelength_m(f_ghz));
    }

    std::complex<double> path_gain_excluding_delay(const PropagationPath &path, const Scene &scene,
                                                   const LinkEnds &ends, double f_ghz, GainView view)
    {
        cplx g = wavelength_m(f_ghz) / (4.0 * kPi * path.length_m);
        for (std::size_t k = 0; k < path.interactions.size(); ++k)
            g *= interaction_coefficient(path, k, scene, f_ghz);

        for (std::size_t i = 1; i < path.vertices.size(); ++i)
        {
            const Point2 p = path.vertices[i - 1];
            const Point2 q = path.vertices[i];
            for (const auto &b : scene.blockers)
                g *= screen_field_factor(b, {p, scene.plane_height_m}, {q, scene.plane_height_m}, f_ghz);
            for (const auto &s : scene.segments)
                if (s.kind == SegmentKind::absorber_screen && blocks(s, p, q))
                    g *= strip_field_factor(s, p, q, f_ghz);
        }

        const bool iso = view == GainView::channel_only;
        const auto tx_p = iso ? boresight_normalized(ends.tx_pattern) : ends.tx_pattern;
        const auto rx_p = iso ? boresight_normalized(ends.rx_pattern) : ends.rx_pattern;
        g *= amplitude_of(tx_p, ends.tx_orientation.offset_to(path.departure_az_deg));
        g *= amplitude_of(rx_p, ends.rx_orientation.offset_to(path.arrival_az_deg));
        return g;
    }

    std::complex<double> path_gain(const PropagationPath &path, const Scene &scene, const LinkEnds &ends,
                                   double f_ghz, GainView view)
    {
        return path_gain_excluding_delay(path, scene, ends, f_ghz, view) *
               std::polar(1.0, -wavenumber(f_ghz) * path.length_m);
    }

    std::vector<LinkBudgetTerm> link_budget(const Scene &scene, const std::vector<PropagationPath> &paths,
                                            const LinkEnds &ends, GainView view)
    {
        std::vector<LinkBudgetTerm> terms;
        terms.reserve(paths.size());
        for (const auto &p : paths)
        {
            terms.push_back({p, [&scene, p, ends, view](double f_ghz) {
                                 return path_gain_excluding_delay(p, scene, ends, f_ghz, view);
                             }});
        }
        return terms;
    }
} // namespace nlos
