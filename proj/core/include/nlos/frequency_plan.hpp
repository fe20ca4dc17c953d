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

#ifndef NLOS_FREQUENCY_PLAN_HPP
#define NLOS_FREQUENCY_PLAN_HPP

#include <string>
#include <vector>

namespace nlos
{
    /// Swept-frequency measurement grid: n_points samples spanning
    /// fc +- bandwidth / 2, ends included.
    struct FrequencyPlan
    {
        double fc_ghz = 60.0;
        double bandwidth_ghz = 2.0;
        int n_points = 401;
        double tx_power_dbm = 0.0;

        bool operator==(const FrequencyPlan &) const = default;

        double step_ghz() const { return bandwidth_ghz / (n_points - 1); }
        double frequency_ghz(int i) const { return fc_ghz - 0.5 * bandwidth_ghz + i * step_ghz(); }
        std::vector<double> frequencies_ghz() const;
    };

    /// VNA sweep: 60 GHz centre, 2 GHz span, 401 points, 0 dBm.
    FrequencyPlan vna_plan();

    std::vector<std::string> plan_problems(const FrequencyPlan &plan);
} // namespace nlos

#endif
