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

#include "nlos/diffraction.hpp"

#include "nlos/units.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nlos
{
    namespace
    {
        using cplx = std::complex<double>;

        constexpr double kEps = std::numeric_limits<double>::epsilon();
        constexpr double kTiny = std::numeric_limits<double>::min();
        constexpr int kMaxIterations = 200;
        constexpr double kSeriesLimit = 1.5;

        FresnelIntegrals series(double x)
        {
            // C and S interleaved: term_k = (pi/2 x^2)^k / k! * x / (2k+1).
            double sum_c = x;
            double sum_s = 0.0;
            double sum = 0.0;
            double sign = 1.0;
            const double fact = 0.5 * kPi * x * x;
            double term = x;
            bool odd = true;
            int n = 3;
            for (int k = 1; k <= kMaxIterations; ++k)
            {
                term *= fact / k;
                sum += sign * term / n;
                const double test = std::abs(sum) * kEps;
                if (odd)
                {
                    sign = -sign;
                    sum_s = sum;
                    sum = sum_c;
                }
                else
                {
                    sum_c = sum;
                    sum = sum_s;
                }
                if (term < test)
                    break;
                odd = !odd;
                n += 2;
            }
            return {sum_c, sum_s};
        }

        FresnelIntegrals continued_fraction(double x)
        {
            // Modified Lentz evaluation of the complementary error function form.
            const double pix2 = kPi * x * x;
            cplx b(1.0, -pix2);
            cplx cc(1.0 / kTiny, 0.0);
            cplx d = 1.0 / b;
            cplx h = d;
            int n = -1;
            for (int k = 2; k <= kMaxIterations; ++k)
            {
                n += 2;
                const double a = -static_cast<double>(n * (n + 1));
                b += 4.0;
                d = 1.0 / (a * d + b);
                cc = b + a / cc;
                const cplx del = cc * d;
                h *= del;
                if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < kEps)
                    break;
            }
            h *= cplx(x, -x);
            const cplx cs = cplx(0.5, 0.5) * (1.0 - cplx(std::cos(0.5 * pix2), std::sin(0.5 * pix2)) * h);
            return {cs.real(), cs.imag()};
        }

        double fresnel_scale(double d1_m, double d2_m, double f_ghz)
        {
            return std::sqrt(2.0 * (1.0 / d1_m + 1.0 / d2_m) / wavelength_m(f_ghz));
        }
    } // namespace

    FresnelIntegrals fresnel_integrals(double x)
    {
        if (std::isinf(x))
            return x > 0 ? FresnelIntegrals{0.5, 0.5} : FresnelIntegrals{-0.5, -0.5};
        const double ax = std::abs(x);
        FresnelIntegrals r;
        if (ax < std::sqrt(kTiny))
            r = {ax, 0.0};
        else if (ax <= kSeriesLimit)
            r = series(ax);
        else
            r = continued_fraction(ax);
        if (x < 0.0)
            r = {-r.c, -r.s};
        return r;
    }

    std::complex<double> fresnel_aperture(double v1, double v2)
    {
        const FresnelIntegrals f1 = fresnel_integrals(v1);
        const FresnelIntegrals f2 = fresnel_integrals(v2);
        return cplx(0.5, 0.5) * cplx(f2.c - f1.c, -(f2.s - f1.s));
    }

    double fresnel_v(double clearance_m, double d1_m, double d2_m, double f_ghz)
    {
        return clearance_m * fresnel_scale(d1_m, d2_m, f_ghz);
    }

    double fresnel_radius(double f_ghz, double d1_m, double d2_m)
    {
        return std::sqrt(wavelength_m(f_ghz) * d1_m * d2_m / (d1_m + d2_m));
    }

    std::complex<double> knife_edge_field(double v)
    {
        return fresnel_aperture(v, std::numeric_limits<double>::infinity());
    }

    double knife_edge_loss(double v)
    {
        return -amplitude_to_db(std::abs(knife_edge_field(v)));
    }

    double knife_edge_loss_approx(double v)
    {
        if (v <= -0.78)
            return 0.0;
        const double u = v - 0.1;
        return 6.9 + 20.0 * std::log10(std::sqrt(u * u + 1.0) + u);
    }

    std::complex<double> screen_field_factor(const BlockerScreen &screen, ElevatedPoint tx, ElevatedPoint rx,
                                             double f_ghz)
    {
        const Vec2 leg = rx.xy - tx.xy;
        const double span = leg.norm();
        if (span <= 0.0)
            return 1.0;
        const Vec2 u = leg / span;
        const Vec2 rel = screen.center - tx.xy;
        const double along = dot(rel, u);
        if (along <= 0.0 || along >= span)
            return 1.0;

        const double s = fresnel_scale(along, span - along, f_ghz);
        const double lateral = cross(u, rel);
        const double half = 0.5 * screen.width_m;
        const cplx gx = fresnel_aperture((lateral - half) * s, (lateral + half) * s);

        const double ray_height = tx.height_m + (along / span) * (rx.height_m - tx.height_m);
        const cplx gy = fresnel_aperture(-std::numeric_limits<double>::infinity(),
                                         (screen.top_height_m - ray_height) * s);
        return 1.0 - gx * gy;
    }

    std::complex<double> strip_field_factor(const Segment &strip, Point2 tx, Point2 rx, double f_ghz)
    {
        const Vec2 leg = rx - tx;
        const double span = leg.norm();
        if (span <= 0.0)
            return 1.0;
        const Vec2 u = leg / span;
        const double along = dot(strip.midpoint() - tx, u);
        if (along <= 0.0 || along >= span)
            return 1.0;

        const double s = fresnel_scale(along, span - along, f_ghz);
        const double la = cross(u, strip.a - tx) * s;
        const double lb = cross(u, strip.b - tx) * s;
        return 1.0 - fresnel_aperture(std::min(la, lb), std::max(la, lb));
    }

    double screen_blockage_loss(const BlockerScreen &screen, ElevatedPoint tx, ElevatedPoint rx, double f_ghz)
    {
        return -amplitude_to_db(std::abs(screen_field_factor(screen, tx, rx, f_ghz)));
    }
} // namespace nlos
