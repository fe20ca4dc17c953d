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

#ifndef NLOS_CHANNEL_HPP
#define NLOS_CHANNEL_HPP

#include "nlos/frequency_plan.hpp"
#include "nlos/raytrace.hpp"

#include <complex>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace nlos
{
    /// Complex frequency response sampled on a plan's grid.
    struct ChannelResponse
    {
        FrequencyPlan plan;
        std::vector<std::complex<double>> samples;
    };

    /// H(f_i) = sum over terms of gain(f_i) * exp(-j 2 pi f_i tau).
    /// Throws std::invalid_argument for an empty term list or a bad plan.
    ChannelResponse synthesize(const std::vector<LinkBudgetTerm> &terms, const FrequencyPlan &plan);

    /// -10 log10(mean |H|^2); +inf for an all-zero response.
    double average_path_loss(const ChannelResponse &resp);

    enum class Window
    {
        rectangular,
        hann,
    };

    enum class PdpNormalization
    {
        absolute,
        relative_to_global_max,
    };

    std::string_view to_string(Window w);
    std::optional<Window> parse_window(std::string_view text);
    std::string_view to_string(PdpNormalization n);
    std::optional<PdpNormalization> parse_normalization(std::string_view text);

    struct Pdp
    {
        std::vector<double> delays_ns;
        std::vector<double> power_db;
        PdpNormalization normalization = PdpNormalization::absolute;
        double resolution_ns = 0.0; // 1 / bandwidth
        int zero_pad = 1;

        /// Index of the strongest bin (first one on ties).
        std::size_t peak_index() const;
    };

    /// Power delay profile by inverse DFT of the windowed response, zero
    /// padded to zero_pad * n_points bins over 1 / step delay. With the
    /// rectangular window and zero_pad = 1 the linear bin powers sum to
    /// mean |H|^2. Relative normalisation shifts this profile alone so its
    /// maximum is 0 dB; use normalize_to_global_max for a set.
    Pdp pdp(const ChannelResponse &resp, Window window = Window::rectangular,
            PdpNormalization normalization = PdpNormalization::absolute, int zero_pad = 4);

    /// Shifts every profile by the maximum bin over the whole set.
    void normalize_to_global_max(std::span<Pdp> set);
} // namespace nlos

#endif
