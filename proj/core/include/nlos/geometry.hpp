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

#ifndef NLOS_GEOMETRY_HPP
#define NLOS_GEOMETRY_HPP

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

namespace nlos
{
    /// Displacement in the horizontal propagation plane, meters.
    struct Vec2
    {
        double x = 0.0;
        double y = 0.0;

        constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
        constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
        constexpr Vec2 operator-() const { return {-x, -y}; }
        constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
        constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
        bool operator==(const Vec2 &) const = default;

        double norm() const { return std::hypot(x, y); }
        Vec2 normalized() const { return *this / norm(); }
        // Counterclockwise quarter turn.
        constexpr Vec2 perp() const { return {-y, x}; }
    };

    constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
    constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

    /// Azimuth of a direction, degrees counterclockwise from +x, in (-180, 180].
    double azimuth_deg(Vec2 dir);
    Vec2 unit_from_azimuth(double azimuth_deg);

    /// Location in the horizontal propagation plane, meters.
    struct Point2
    {
        double x = 0.0;
        double y = 0.0;

        constexpr Vec2 operator-(Point2 o) const { return {x - o.x, y - o.y}; }
        constexpr Point2 operator+(Vec2 v) const { return {x + v.x, y + v.y}; }
        constexpr Point2 operator-(Vec2 v) const { return {x - v.x, y - v.y}; }
        bool operator==(const Point2 &) const = default;
    };

    inline double distance(Point2 a, Point2 b) { return (b - a).norm(); }

    enum class SegmentKind
    {
        wall,
        flat_panel,
        reflectarray_panel,
        absorber_screen,
    };

    std::string_view to_string(SegmentKind kind);
    std::optional<SegmentKind> parse_segment_kind(std::string_view text);

    /// Oriented planar boundary element. The front face of a segment is on
    /// the left of a -> b; only reflectarray panels care which face is lit.
    struct Segment
    {
        std::string id;
        Point2 a;
        Point2 b;
        std::string material_id;
        SegmentKind kind = SegmentKind::wall;

        bool operator==(const Segment &) const = default;

        double length() const { return distance(a, b); }
        Vec2 direction() const { return (b - a).normalized(); }
        Vec2 normal() const { return direction().perp(); }
        Point2 midpoint() const { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }

        // Hard segments stop rays; absorber screens only attenuate them.
        bool is_obstacle() const { return kind != SegmentKind::absorber_screen; }
        bool is_reflector() const { return kind == SegmentKind::wall || kind == SegmentKind::flat_panel; }
    };

    inline constexpr double kIntersectTolerance = 1e-9; // m, slack at segment endpoints
    inline constexpr double kMinHitDistance = 1e-6;     // m, hits closer than this are ignored

    struct RayHit
    {
        double t = 0.0;       // distance along the ray, m
        Point2 point;         // hit location
        double fraction = 0.0; // position along the segment, 0 at a, 1 at b
    };

    /// Nearest crossing of the ray origin + t * dir (t > kMinHitDistance) with
    /// the segment, or nothing. `dir` must be a unit vector. Parallel and
    /// collinear configurations never report a hit.
    std::optional<RayHit> intersect(Point2 ray_origin, Vec2 ray_dir, const Segment &seg);

    /// Reflection of p across the infinite line carrying seg.
    Point2 mirror(Point2 p, const Segment &seg);

    /// True when the open segment p -> q is crossed by seg at a point that is
    /// farther than kMinHitDistance from both p and q.
    bool blocks(const Segment &seg, Point2 p, Point2 q);

    /// True when the two segments cross or overlap anywhere other than at a
    /// shared endpoint.
    bool segments_conflict(const Segment &s1, const Segment &s2);
} // namespace nlos

#endif
