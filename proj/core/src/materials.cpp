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

#include "nlos/materials.hpp"

#include "nlos/units.hpp"

#include <cmath>
#include <stdexcept>

namespace nlos
{
    std::string_view to_string(MaterialModel model)
    {
        switch (model)
        {
        case MaterialModel::perfect_conductor:
            return "perfect_conductor";
        case MaterialModel::fixed_loss:
            return "fixed_loss";
        case MaterialModel::dielectric:
            return "dielectric";
        }
        return "unknown";
    }

    std::optional<MaterialModel> parse_material_model(std::string_view text)
    {
        if (text == "perfect_conductor")
            return MaterialModel::perfect_conductor;
        if (text == "fixed_loss")
            return MaterialModel::fixed_loss;
        if (text == "dielectric")
            return MaterialModel::dielectric;
        return std::nullopt;
    }

    std::string_view to_string(Polarization pol) { return pol == Polarization::te ? "te" : "tm"; }

    std::optional<Polarization> parse_polarization(std::string_view text)
    {
        if (text == "te")
            return Polarization::te;
        if (text == "tm")
            return Polarization::tm;
        return std::nullopt;
    }

    Material Material::perfect_conductor(std::string name)
    {
        return {std::move(name), MaterialModel::perfect_conductor, 0.0, {1.0, 0.0}};
    }

    Material Material::fixed_loss(std::string name, double loss_db)
    {
        return {std::move(name), MaterialModel::fixed_loss, loss_db, {1.0, 0.0}};
    }

    Material Material::dielectric(std::string name, std::complex<double> eps_r)
    {
        return {std::move(name), MaterialModel::dielectric, 0.0, eps_r};
    }

    Material plasterboard() { return Material::dielectric("plasterboard", {2.73, -0.02}); }
    Material whiteboard() { return Material::fixed_loss("whiteboard", 0.55); }
    Material aluminum() { return Material::perfect_conductor("aluminum"); }

    std::optional<std::string> material_problem(const Material &m)
    {
        switch (m.model)
        {
        case MaterialModel::perfect_conductor:
            return std::nullopt;
        case MaterialModel::fixed_loss:
            if (!(m.reflection_loss_db >= 0.0) || !std::isfinite(m.reflection_loss_db))
                return "reflection_loss_db must be finite and >= 0";
            return std::nullopt;
        case MaterialModel::dielectric:
            if (!(m.eps_r.real() >= 1.0) || !std::isfinite(m.eps_r.real()))
                return "Re(eps_r) must be finite and >= 1";
            if (!(m.eps_r.imag() <= 0.0))
                return "Im(eps_r) must be <= 0 (passive, exp(+jwt) convention)";
            return std::nullopt;
        }
        return "unknown material model";
    }

    std::complex<double> reflection_coefficient(const Material &m, double incidence_deg,
                                                Polarization pol, double /*f_ghz*/)
    {
        if (!(incidence_deg >= 0.0 && incidence_deg < 90.0))
            throw std::domain_error("reflection_coefficient: incidence angle must lie in [0, 90) degrees");

        switch (m.model)
        {
        case MaterialModel::perfect_conductor:
            return {-1.0, 0.0};
        case MaterialModel::fixed_loss:
            return {-db_to_amplitude(-m.reflection_loss_db), 0.0};
        case MaterialModel::dielectric:
            break;
        }

        const double th = deg_to_rad(incidence_deg);
        const double c = std::cos(th);
        const double s = std::sin(th);
        const std::complex<double> root = std::sqrt(m.eps_r - s * s);

        if (pol == Polarization::te)
            return (c - root) / (c + root);
        return -(m.eps_r * c - root) / (m.eps_r * c + root);
    }
} // namespace nlos
