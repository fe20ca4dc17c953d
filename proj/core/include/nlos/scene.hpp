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

#ifndef NLOS_SCENE_HPP
#define NLOS_SCENE_HPP

#include "nlos/diffraction.hpp"
#include "nlos/frequency_plan.hpp"
#include "nlos/geometry.hpp"
#include "nlos/materials.hpp"
#include "nlos/reflectarray.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace nlos
{
    /// Everything the propagation engine needs about an environment. All
    /// terminals, reflector centres and blocker chests sit in one horizontal
    /// plane at `plane_height_m`; room height is metadata only.
    struct Scene
    {
        std::vector<Segment> segments;
        std::map<std::string, Material> materials;
        std::map<std::string, GroovePanel> panels; // keyed by reflectarray segment id
        std::vector<BlockerScreen> blockers;
        FrequencyPlan frequency_plan;
        double plane_height_m = 1.5;
        double room_height_m = 3.0;
        Polarization polarization = Polarization::te;

        bool operator==(const Scene &) const = default;

        const Material &material_of(const Segment &seg) const;
        const GroovePanel &panel_of(const Segment &seg) const;
    };

    enum class ViolationKind
    {
        degenerate_segment,
        duplicate_id,
        missing_material,
        invalid_material,
        missing_panel,
        invalid_panel,
        self_intersection,
        invalid_blocker,
        invalid_frequency_plan,
        invalid_terminal,
    };

    std::string_view to_string(ViolationKind kind);

    struct Violation
    {
        ViolationKind kind;
        std::string subject;
        std::string message;

        bool operator==(const Violation &) const = default;
    };

    std::string describe(const Violation &v);

    /// One entry per broken invariant; empty means the scene is usable.
    std::vector<Violation> validate_scene(const Scene &scene);
} // namespace nlos

#endif
