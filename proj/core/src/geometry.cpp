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

#include "nlos/geometry.hpp"

#include "nlos/units.hpp"

#include <algorithm>
#include <array>

namespace nlos
{
    double azimuth_deg(Vec2 dir)
    {
        return wrap_deg_180(rad_to_deg(std::atan2(dir.y, dir.x)));
    }

    Vec2 unit_from_azimuth(double azimuth_deg)
    {
        const double r = deg_to_rad(azimuth_deg);
        return {std::cos(r), std::sin(r)};
    }

    namespace
    {
        constexpr std::array<std::pair<SegmentKind, std::string_view>, 4> kKindNames{{
            {SegmentKind::wall, "wall"},
            {SegmentKind::flat_panel, "flat_panel"},
            {SegmentKind::reflectarray_panel, "reflectarray_panel"},
            {SegmentKind::absorber_screen, "absorber_screen"},
        }};

        bool near(Point2 a, Point2 b) { return distance(a, b) <= kIntersectTolerance; }
    } // namespace

    std::string_view to_string(SegmentKind kind)
    {
        for (const auto &[k, name] : kKindNames)
            if (k == kind)
                return name;
        return "unknown";
    }

    std::optional<SegmentKind> parse_segment_kind(std::string_view text)
    {
        for (const auto &[k, name] : kKindNames)
            if (name == text)
                return k;
        return std::nullopt;
    }

    std::optional<RayHit> intersect(Point2 ray_origin, Vec2 ray_dir, const Segment &seg)
    {
        const Vec2 e = seg.b - seg.a;
        const double len = e.norm();
        if (len == 0.0)
            return std::nullopt;

        const double denom = cross(ray_dir, e);
        if (std::abs(denom) <= 1e-14 * len)
            return std::nullopt;

        // origin + t * dir = a + s * e
        const Vec2 w = seg.a - ray_origin;
        const double t = cross(w, e) / denom;
        const double s = cross(w, ray_dir) / denom;

        const double slack = kIntersectTolerance / len;
        if (s < -slack || s > 1.0 + slack || t <= kMinHitDistance)
            return std::nullopt;

        return RayHit{t, ray_origin + ray_dir * t, std::clamp(s, 0.0, 1.0)};
    }

    Point2 mirror(Point2 p, const Segment &seg)
    {
        const Vec2 n = seg.normal();
        const double h = dot(p - seg.a, n);
        return p - n * (2.0 * h);
    }

    bool blocks(const Segment &seg, Point2 p, Point2 q)
    {
        const Vec2 d = q - p;
        const double len = d.norm();
        if (len <= kMinHitDistance)
            return false;
        const auto hit = intersect(p, d / len, seg);
        return hit && hit->t < len - kMinHitDistance;
    }

    bool segments_conflict(const Segment &s1, const Segment &s2)
    {
        const Vec2 r = s1.b - s1.a;
        const Vec2 q = s2.b - s2.a;
        const double len1 = r.norm();
        const double len2 = q.norm();
        if (len1 == 0.0 || len2 == 0.0)
            return false;

        const Vec2 w = s2.a - s1.a;
        const double denom = cross(r, q);

        if (std::abs(denom) <= 1e-14 * len1 * len2)
        {
            // Parallel: only collinear overlap of positive length conflicts.
            if (std::abs(cross(w, r)) / len1 > kIntersectTolerance)
                return false;
            const double u0 = dot(s2.a - s1.a, r) / (len1 * len1);
            const double u1 = dot(s2.b - s1.a, r) / (len1 * len1);
            const double lo = std::max(0.0, std::min(u0, u1));
            const double hi = std::min(1.0, std::max(u0, u1));
            return (hi - lo) * len1 > kIntersectTolerance;
        }

        const double s = cross(w, q) / denom;
        const double u = cross(w, r) / denom;
        const double slack1 = kIntersectTolerance / len1;
        const double slack2 = kIntersectTolerance / len2;
        if (s < -slack1 || s > 1.0 + slack1 || u < -slack2 || u > 1.0 + slack2)
            return false;

        const Point2 p = s1.a + r * s;
        const bool end1 = near(p, s1.a) || near(p, s1.b);
        const bool end2 = near(p, s2.a) || near(p, s2.b);
        return !(end1 && end2);
    }
} // namespace nlos
