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

#include "nlos/scene.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace nlos
{
    std::vector<double> FrequencyPlan::frequencies_ghz() const
    {
        std::vector<double> f;
        f.reserve(static_cast<std::size_t>(std::max(n_points, 0)));
        for (int i = 0; i < n_points; ++i)
            f.push_back(frequency_ghz(i));
        return f;
    }

    FrequencyPlan vna_plan() { return {60.0, 2.0, 401, 0.0}; }

    std::vector<std::string> plan_problems(const FrequencyPlan &plan)
    {
        std::vector<std::string> out;
        if (plan.n_points < 2)
            out.emplace_back("n_points must be >= 2");
        if (!(plan.fc_ghz > 0.0))
            out.emplace_back("fc_ghz must be positive");
        if (!(plan.bandwidth_ghz > 0.0) || !(plan.bandwidth_ghz < 2.0 * plan.fc_ghz))
            out.emplace_back("bandwidth_ghz must be positive and below 2 * fc_ghz");
        if (!std::isfinite(plan.tx_power_dbm))
            out.emplace_back("tx_power_dbm must be finite");
        return out;
    }

    const Material &Scene::material_of(const Segment &seg) const
    {
        const auto it = materials.find(seg.material_id);
        if (it == materials.end())
            throw std::out_of_range("scene: unknown material '" + seg.material_id + "'");
        return it->second;
    }

    const GroovePanel &Scene::panel_of(const Segment &seg) const
    {
        const auto it = panels.find(seg.id);
        if (it == panels.end())
            throw std::out_of_range("scene: no panel for segment '" + seg.id + "'");
        return it->second;
    }

    std::string_view to_string(ViolationKind kind)
    {
        switch (kind)
        {
        case ViolationKind::degenerate_segment:
            return "degenerate segment";
        case ViolationKind::duplicate_id:
            return "duplicate id";
        case ViolationKind::missing_material:
            return "missing material";
        case ViolationKind::invalid_material:
            return "invalid material";
        case ViolationKind::missing_panel:
            return "missing panel";
        case ViolationKind::invalid_panel:
            return "invalid panel";
        case ViolationKind::self_intersection:
            return "self intersection";
        case ViolationKind::invalid_blocker:
            return "invalid blocker";
        case ViolationKind::invalid_frequency_plan:
            return "frequency-plan violation";
        case ViolationKind::invalid_terminal:
            return "invalid terminal";
        }
        return "unknown";
    }

    std::string describe(const Violation &v)
    {
        std::string s(to_string(v.kind));
        if (!v.subject.empty())
            s += " [" + v.subject + "]";
        if (!v.message.empty())
            s += ": " + v.message;
        return s;
    }

    std::vector<Violation> validate_scene(const Scene &scene)
    {
        std::vector<Violation> out;
        auto add = [&](ViolationKind k, std::string subject, std::string msg) {
            out.push_back({k, std::move(subject), std::move(msg)});
        };

        std::set<std::string> seen;
        for (const auto &seg : scene.segments)
        {
            if (!seen.insert(seg.id).second)
                add(ViolationKind::duplicate_id, seg.id, "segment id used more than once");
            if (!(seg.length() > 0.0) || !std::isfinite(seg.length()))
                add(ViolationKind::degenerate_segment, seg.id, "endpoints coincide or are not finite");
            if (!scene.materials.contains(seg.material_id))
                add(ViolationKind::missing_material, seg.id, "material '" + seg.material_id + "' is not defined");
            if (seg.kind == SegmentKind::reflectarray_panel && !scene.panels.contains(seg.id))
                add(ViolationKind::missing_panel, seg.id, "reflectarray segment has no panel entry");
        }

        for (const auto &[id, m] : scene.materials)
            if (auto problem = material_problem(m))
                add(ViolationKind::invalid_material, id, *problem);

        for (const auto &[id, panel] : scene.panels)
        {
            for (auto &p : panel_problems(panel))
                add(ViolationKind::invalid_panel, id, std::move(p));
        }

        for (std::size_t i = 0; i < scene.segments.size(); ++i)
        {
            for (std::size_t j = i + 1; j < scene.segments.size(); ++j)
            {
                const auto &s1 = scene.segments[i];
                const auto &s2 = scene.segments[j];
                if (s1.length() > 0.0 && s2.length() > 0.0 && segments_conflict(s1, s2))
                    add(ViolationKind::self_intersection, s1.id + "/" + s2.id,
                        "segments cross away from a shared endpoint");
            }
        }

        for (std::size_t i = 0; i < scene.blockers.size(); ++i)
        {
            const auto &b = scene.blockers[i];
            if (!(b.width_m > 0.0) || !(b.height_m > 0.0) || !(b.thickness_m >= 0.0))
                add(ViolationKind::invalid_blocker, "blocker " + std::to_string(i),
                    "width and height must be positive");
        }

        for (auto &p : plan_problems(scene.frequency_plan))
            add(ViolationKind::invalid_frequency_plan, "frequency_plan", std::move(p));

        return out;
    }
} // namespace nlos
