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

#ifndef NLOS_MATERIALS_HPP
#define NLOS_MATERIALS_HPP

#include <complex>
#include <optional>
#include <string>
#include <string_view>

namespace nlos
{
    enum class MaterialModel
    {
        perfect_conductor,
        fixed_loss,
        dielectric,
    };

    enum class Polarization
    {
        te, // E perpendicular to the plane of incidence (vertical E on vertical walls)
        tm,
    };

    std::string_view to_string(MaterialModel model);
    std::optional<MaterialModel> parse_material_model(std::string_view text);
    std::string_view to_string(Polarization pol);
    std::optional<Polarization> parse_polarization(std::string_view text);

    // Time dependence is exp(+j 2 pi f t) throughout the library, so lossy
    // permittivities carry a negative imaginary part: eps_r = eps' - j eps''.
    struct Material
    {
        std::string name;
        MaterialModel model = MaterialModel::perfect_conductor;
        double reflection_loss_db = 0.0;          // fixed_loss only
        std::complex<double> eps_r{1.0, 0.0};      // dielectric only

        bool operator==(const Material &) const = default;

        static Material perfect_conductor(std::string name);
        static Material fixed_loss(std::string name, double loss_db);
        static Material dielectric(std::string name, std::complex<double> eps_r);
    };

    Material plasterboard();  // eps_r = 2.73 - j0.02 at 60 GHz
    Material whiteboard();    // 0.55 dB fixed loss
    Material aluminum();      // perfect conductor

    /// Empty when the material is physically admissible.
    std::optional<std::string> material_problem(const Material &m);

    /// Specular reflection coefficient. Conductors and fixed-loss surfaces
    /// return a real negative value (180 deg phase) for both polarizations;
    /// dielectrics use the Fresnel equations, with the TM sign chosen so that
    /// TE and TM agree at normal incidence. Throws std::domain_error unless
    /// 0 <= incidence_deg < 90.
    std::complex<double> reflection_coefficient(const Material &m, double incidence_deg,
                                                Polarization pol, double f_ghz);
} // namespace nlos

#endif
