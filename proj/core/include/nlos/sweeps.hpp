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

#ifndef NLOS_SWEEPS_HPP
#define NLOS_SWEEPS_HPP

#include "nlos/raytrace.hpp"

#include <span>
#include <string>
#include <vector>

namespace nlos
{
    struct AoaSample
    {
        double azimuth_deg = 0.0;
        double power_dbm = 0.0;
    };

    struct AoaResult
    {
        std::vector<AoaSample> samples;
        double best_azimuth_deg = 0.0;
        double best_power_dbm = 0.0;
    };

    /// Rotates the Rx antenna through 360 degrees in `step_deg` increments
    /// starting at 0 deg azimuth. Power at fc is Pt + 10 log10 sum |g|^2
    /// (paths added incoherently, as a rotating horn sees them). Throws
    /// std::invalid_argument unless step_deg divides 360.
    AoaResult aoa_sweep(const Scene &scene, const Terminal &tx, const Terminal &rx, double step_deg,
                        const TraceOptions &options = {}, GainView view = GainView::with_antennas);

    /// Average path loss over the scene's frequency plan.
    double link_path_loss(const Scene &scene, const Terminal &tx, const Terminal &rx,
                          const TraceOptions &options = {}, GainView view = GainView::with_antennas);

    struct CoveragePoint
    {
        std::string label;
        Point2 position;
        double path_loss_db = 0.0;
    };

    /// link_path_loss for each Tx against a fixed Rx, in input order.
    std::vector<CoveragePoint> coverage_sweep(const Scene &scene, std::span<const Terminal> txs, const Terminal &rx,
                                              const TraceOptions &options = {},
                                              GainView view = GainView::with_antennas);
} // namespace nlos

#endif
