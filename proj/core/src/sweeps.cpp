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

#include "nlos/sweeps.hpp"

#include "nlos/channel.hpp"
#include "nlos/units.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace nlos
{
    AoaResult aoa_sweep(const Scene &scene, const Terminal &tx, const Terminal &rx, double step_deg,
                        const TraceOptions &options, GainView view)
    {
        if (!(step_deg > 0.0))
            throw std::invalid_argument("aoa_sweep: step must be positive");
        const double count = 360.0 / step_deg;
        const long n = std::lround(count);
        if (n < 1 || std::abs(count - static_cast<double>(n)) > 1e-9)
            throw std::invalid_argument("aoa_sweep: step must divide 360 degrees");

        const double fc = scene.frequency_plan.fc_ghz;
        const auto paths = find_paths(scene, tx.position, rx.position, options);

        // Path powers with an isotropic receiver; the rotated horn is applied below.
        LinkEnds ends = LinkEnds::of(tx, rx);
        ends.rx_pattern = AntennaPattern::omni(0.0, 90.0);
        std::vector<double> power(paths.size());
        for (std::size_t i = 0; i < paths.size(); ++i)
            power[i] = std::norm(path_gain_excluding_delay(paths[i], scene, ends, fc, view));

        const auto rx_pattern = view == GainView::channel_only ? boresight_normalized(rx.pattern) : rx.pattern;

        AoaResult out;
        out.best_power_dbm = -std::numeric_limits<double>::infinity();
        out.samples.reserve(static_cast<std::size_t>(n));
        for (long s = 0; s < n; ++s)
        {
            const Orientation o(static_cast<double>(s) * step_deg);
            double sum = 0.0;
            for (std::size_t i = 0; i < paths.size(); ++i)
                sum += power[i] * db_to_power(gain_dbi(rx_pattern, o.offset_to(paths[i].arrival_az_deg), 0.0));
            const double dbm = scene.frequency_plan.tx_power_dbm + power_to_db(sum);
            out.samples.push_back({o.azimuth_deg(), dbm});
            if (dbm > out.best_power_dbm)
            {
                out.best_power_dbm = dbm;
                out.best_azimuth_deg = o.azimuth_deg();
            }
        }
        return out;
    }

    double link_path_loss(const Scene &scene, const Terminal &tx, const Terminal &rx, const TraceOptions &options,
                          GainView view)
    {
        const auto paths = find_paths(scene, tx.position, rx.position, options);
        if (paths.empty())
            return std::numeric_limits<double>::infinity();
        const auto terms = link_budget(scene, paths, LinkEnds::of(tx, rx), view);
        return average_path_loss(synthesize(terms, scene.frequency_plan));
    }

    std::vector<CoveragePoint> coverage_sweep(const Scene &scene, std::span<const Terminal> txs, const Terminal &rx,
                                              const TraceOptions &options, GainView view)
    {
        std::vector<CoveragePoint> out;
        out.reserve(txs.size());
        for (const auto &tx : txs)
            out.push_back({tx.label, tx.position, link_path_loss(scene, tx, rx, options, view)});
        return out;
    }
} // namespace nlos
