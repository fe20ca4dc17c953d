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

#include "nlos/channel.hpp"

#include "nlos/units.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace nlos
{
    ChannelResponse synthesize(const std::vector<LinkBudgetTerm> &terms, const FrequencyPlan &plan)
    {
        if (terms.empty())
            throw std::invalid_argument("synthesize: no paths");
        if (!plan_problems(plan).empty())
            throw std::invalid_argument("synthesize: invalid frequency plan");

        ChannelResponse resp{plan, std::vector<std::complex<double>>(static_cast<std::size_t>(plan.n_points))};
        for (int i = 0; i < plan.n_points; ++i)
        {
            const double f = plan.frequency_ghz(i);
            std::complex<double> h = 0.0;
            for (const auto &t : terms)
                h += t.gain_fn(f) * std::polar(1.0, -2.0 * kPi * f * 1e9 * t.delay_s());
            resp.samples[static_cast<std::size_t>(i)] = h;
        }
        return resp;
    }

    double average_path_loss(const ChannelResponse &resp)
    {
        if (resp.samples.empty())
            return std::numeric_limits<double>::infinity();
        double sum = 0.0;
        for (const auto &h : resp.samples)
            sum += std::norm(h);
        const double mean = sum / static_cast<double>(resp.samples.size());
        if (mean <= 0.0)
            return std::numeric_limits<double>::infinity();
        return -10.0 * std::log10(mean);
    }

    std::string_view to_string(Window w) { return w == Window::hann ? "hann" : "rectangular"; }

    std::optional<Window> parse_window(std::string_view text)
    {
        if (text == "rectangular")
            return Window::rectangular;
        if (text == "hann")
            return Window::hann;
        return std::nullopt;
    }

    std::string_view to_string(PdpNormalization n)
    {
        return n == PdpNormalization::relative_to_global_max ? "relative" : "absolute";
    }

    std::optional<PdpNormalization> parse_normalization(std::string_view text)
    {
        if (text == "absolute")
            return PdpNormalization::absolute;
        if (text == "relative")
            return PdpNormalization::relative_to_global_max;
        return std::nullopt;
    }

    std::size_t Pdp::peak_index() const
    {
        return static_cast<std::size_t>(std::max_element(power_db.begin(), power_db.end()) - power_db.begin());
    }

    Pdp pdp(const ChannelResponse &resp, Window window, PdpNormalization normalization, int zero_pad)
    {
        if (zero_pad < 1)
            throw std::invalid_argument("pdp: zero_pad must be >= 1");
        const std::size_t n = resp.samples.size();
        if (n < 2)
            throw std::invalid_argument("pdp: response needs at least two samples");

        std::vector<double> w(n, 1.0);
        if (window == Window::hann)
        {
            for (std::size_t i = 0; i < n; ++i)
                w[i] = 0.5 - 0.5 * std::cos(2.0 * kPi * static_cast<double>(i) / static_cast<double>(n - 1));
            // Keep the coherent gain of a single path unchanged.
            const double mean = std::accumulate(w.begin(), w.end(), 0.0) / static_cast<double>(n);
            for (auto &x : w)
                x /= mean;
        }

        const std::size_t m = n * static_cast<std::size_t>(zero_pad);
        const double step_hz = resp.plan.step_ghz() * 1e9;

        Pdp out;
        out.normalization = normalization;
        out.zero_pad = zero_pad;
        out.resolution_ns = 1.0 / resp.plan.bandwidth_ghz;
        out.delays_ns.resize(m);
        out.power_db.resize(m);
        std::vector<std::complex<double>> twiddle(m);
        for (std::size_t j = 0; j < m; ++j)
            twiddle[j] = std::polar(1.0, 2.0 * kPi * static_cast<double>(j) / static_cast<double>(m));
        std::vector<std::complex<double>> weighted(n);
        for (std::size_t i = 0; i < n; ++i)
            weighted[i] = w[i] * resp.samples[i];

        for (std::size_t k = 0; k < m; ++k)
        {
            std::complex<double> h = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                h += weighted[i] * twiddle[(i * k) % m];
            h /= static_cast<double>(n);
            out.delays_ns[k] = static_cast<double>(k) / (static_cast<double>(m) * step_hz) * 1e9;
            out.power_db[k] = 10.0 * std::log10(std::norm(h));
        }

        if (normalization == PdpNormalization::relative_to_global_max)
        {
            const double peak = *std::max_element(out.power_db.begin(), out.power_db.end());
            if (std::isfinite(peak))
                for (auto &p : out.power_db)
                    p -= peak;
        }
        return out;
    }

    void normalize_to_global_max(std::span<Pdp> set)
    {
        double peak = -std::numeric_limits<double>::infinity();
        for (const auto &p : set)
            for (double v : p.power_db)
                peak = std::max(peak, v);
        if (!std::isfinite(peak))
            return;
        for (auto &p : set)
        {
            for (auto &v : p.power_db)
                v -= peak;
            p.normalization = PdpNormalization::relative_to_global_max;
        }
    }
} // namespace nlos
