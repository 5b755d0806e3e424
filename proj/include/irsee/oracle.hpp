// SPDX-License-Identifier: Apache-2.0
//
// irsee - energy-efficiency analysis of IRS-aided links under statistical QoS
// Copyright (C) 2026 The irsee authors
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

// Independent reference computations used by the validation suite: adaptive
// quadrature, exhaustive phase search and finite differences. Nothing here
// calls the closed forms it is meant to check.

#ifndef IRSEE_ORACLE_HPP
#define IRSEE_ORACLE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "channel.hpp"

namespace irsee::oracle
{

namespace detail
{
// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule.
constexpr std::array<double, 8> xgk = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                       0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                       0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                       0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> wgk = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                       0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                       0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                       0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> wg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                      0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment
{
    double kronrod;
    double error;
};

inline Segment gk15(const std::function<double(double)>& f, double a, double b)
{
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double k = fc * wgk[7];
    double g = fc * wg[3];
    for (int j = 0; j < 7; ++j)
    {
        const double dx = h * xgk[j];
        const double s = f(c - dx) + f(c + dx);
        k += wgk[j] * s;
        if (j % 2 == 1)
            g += wg[j / 2] * s;
    }
    return {k * h, std::abs((k - g) * h)};
}

inline double adapt(const std::function<double(double)>& f, double a, double b, Segment whole, double abs_tol,
                    int depth)
{
    if (whole.error <= abs_tol || depth >= 60)
        return whole.kronrod;
    const double m = 0.5 * (a + b);
    const Segment left = gk15(f, a, m);
    const Segment right = gk15(f, m, b);
    return adapt(f, a, m, left, 0.5 * abs_tol, depth + 1) + adapt(f, m, b, right, 0.5 * abs_tol, depth + 1);
}
} // namespace detail

/// Adaptive Gauss-Kronrod (G7/K15) quadrature of f on [a, b] with bisection
/// until the embedded error estimate drops below rel_tol * |estimate|.
inline double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-13)
{
    // coarse pass to fix the absolute target
    constexpr int pieces = 16;
    double rough = 0.0;
    std::vector<detail::Segment> seg(pieces);
    const double w = (b - a) / pieces;
    for (int i = 0; i < pieces; ++i)
    {
        seg[i] = detail::gk15(f, a + i * w, a + (i + 1) * w);
        rough += seg[i].kronrod;
    }
    const double abs_tol = std::max(rel_tol * std::abs(rough), 1e-300);
    double total = 0.0;
    for (int i = 0; i < pieces; ++i)
        total += detail::adapt(f, a + i * w, a + (i + 1) * w, seg[i], abs_tol / pieces, 0);
    return total;
}

/// Upper integration limit for a Gamma(alpha, beta) density weighted by at
/// most x^2: beyond it the tail mass of Gamma(alpha + 2) is far below 1e-12
/// (Chernoff bound exp(-a^2 / (2 (k + a))) with a = 30 sqrt(k) + 60).
inline double gamma_upper_limit(double alpha, double beta)
{
    const double k = alpha + 2.0;
    return beta * (k + 30.0 * std::sqrt(k) + 60.0);
}

/// E{w(Y)} for Y ~ Gamma(alpha, beta) by quadrature of w against the density.
/// Integrates in t with y = t^2 so that shapes down to 1/2 stay regular.
inline double gamma_expectation(double alpha, double beta, const std::function<double(double)>& weight,
                                double rel_tol = 1e-13)
{
    const double log_norm = -alpha * std::log(beta) - std::lgamma(alpha);
    auto integrand = [&](double t) {
        if (t <= 0.0)
            return 0.0;
        const double y = t * t;
        // density(y) dy = exp(log_norm) y^(alpha-1) e^(-y/beta) 2 t dt
        const double log_dens = log_norm + (2.0 * alpha - 1.0) * std::log(t) - y / beta;
        return weight(y) * 2.0 * std::exp(log_dens);
    };
    return integrate(integrand, 0.0, std::sqrt(gamma_upper_limit(alpha, beta)), rel_tol);
}

/// Largest |h_bar|^2 over a uniform grid of `points` phases per element.
inline double grid_search_gain(const ChannelRealization& real, const LinkLosses& losses, int points)
{
    const std::size_t n = real.size();
    std::vector<int> idx(n, 0);
    std::vector<std::complex<double>> rotor(points);
    for (int p = 0; p < points; ++p)
        rotor[p] = std::polar(1.0, 2.0 * std::numbers::pi * p / points);
    const double sc = std::sqrt(losses.cascade());
    const std::complex<double> direct = std::sqrt(losses.direct) * real.h;
    double best = 0.0;
    while (true)
    {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k)
            acc += real.f[k] * rotor[idx[k]] * real.g[k];
        best = std::max(best, std::norm(sc * acc + direct));
        std::size_t k = 0;
        while (k < n && ++idx[k] == points)
            idx[k++] = 0;
        if (k == n)
            break;
    }
    return best;
}

/// (f(h) - f(-h)) / (2h)
inline double central_first(const std::function<double(double)>& f, double h) { return (f(h) - f(-h)) / (2.0 * h); }

/// (f(h) - 2 f(0) + f(-h)) / h^2
inline double central_second(const std::function<double(double)>& f, double h)
{
    return (f(h) - 2.0 * f(0.0) + f(-h)) / (h * h);
}

} // namespace irsee::oracle

#endif
