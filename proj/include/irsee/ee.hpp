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

#ifndef IRSEE_EE_HPP
#define IRSEE_EE_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "effcap.hpp"
#include "stats.hpp"

namespace irsee
{

enum class Regime
{
    low_power,
    low_power_large_n,
    low_power_discrete,
    wideband_case_i,
    wideband_case_ii
};

enum class Method
{
    closed_form,
    monte_carlo
};

inline std::string to_string(Regime r)
{
    switch (r)
    {
    case Regime::low_power:
        return "low_power";
    case Regime::low_power_large_n:
        return "low_power_large_n";
    case Regime::low_power_discrete:
        return "low_power_discrete";
    case Regime::wideband_case_i:
        return "wideband_case_i";
    case Regime::wideband_case_ii:
        return "wideband_case_ii";
    }
    return "low_power";
}

inline Regime parse_regime(const std::string& s)
{
    for (Regime r : {Regime::low_power, Regime::low_power_large_n, Regime::low_power_discrete,
                     Regime::wideband_case_i, Regime::wideband_case_ii})
        if (to_string(r) == s)
            return r;
    throw std::invalid_argument("unknown regime '" + s + "'");
}

inline std::string to_string(Method m) { return m == Method::closed_form ? "closed_form" : "monte_carlo"; }

inline Method parse_method(const std::string& s)
{
    if (s == "closed_form")
        return Method::closed_form;
    if (s == "monte_carlo")
        return Method::monte_carlo;
    throw std::invalid_argument("unknown method '" + s + "'");
}

inline double to_db(double linear) { return 10.0 * std::log10(linear); }
inline double from_db(double db) { return std::pow(10.0, db / 10.0); }

/// Minimum bit energy and wideband slope of one operating regime.
///
/// Limits that the large-N analysis allows (zero bit energy, infinite slope)
/// are carried as explicit flags; the numeric fields then hold 0 / -inf / +inf.
struct EeMetrics
{
    double eb_n0_min_linear = 0.0;
    double eb_n0_min_db = 0.0;
    double s0 = 0.0; // bit/s/Hz per 3 dB
    Regime regime = Regime::low_power;
    Method method = Method::closed_form;
    bool eb_n0_min_saturated = false; // minimum bit energy reached 0
    bool s0_saturated = false;        // slope reached +inf
};

inline EeMetrics make_metrics(double eb_linear, double s0, Regime regime, Method method)
{
    EeMetrics m;
    m.regime = regime;
    m.method = method;
    if (!(eb_linear > 0.0))
    {
        m.eb_n0_min_saturated = true;
        m.eb_n0_min_linear = 0.0;
        m.eb_n0_min_db = -std::numeric_limits<double>::infinity();
    }
    else
    {
        m.eb_n0_min_linear = eb_linear;
        m.eb_n0_min_db = to_db(eb_linear);
    }
    if (!std::isfinite(s0))
    {
        m.s0_saturated = true;
        m.s0 = std::numeric_limits<double>::infinity();
    }
    else
    {
        m.s0 = s0;
    }
    return m;
}

/// Eb/N0_min = 1/C'(0), S0 = -2 C'(0)^2 ln2 / C''(0).
inline EeMetrics metrics_from_derivatives(double dot_c0, double ddot_c0, Regime regime = Regime::low_power,
                                          Method method = Method::closed_form)
{
    if (!(dot_c0 > 0.0))
        throw std::domain_error("metrics_from_derivatives: first derivative must be positive");
    if (!(ddot_c0 < 0.0))
        throw std::domain_error("metrics_from_derivatives: second derivative must be negative");
    return make_metrics(1.0 / dot_c0, -2.0 * dot_c0 * dot_c0 * std::numbers::ln2 / ddot_c0, regime, method);
}

/// Low-power regime from the moments of xi:
///   Eb/N0_min = ln2 / E{xi}                          (independent of mu)
///   S0 = 2 ln2 E{xi}^2 / [(muTB + ln2) E{xi^2} - muTB E{xi}^2]
inline EeMetrics low_power_metrics(const MomentPair& moments, double mu_t_b, Regime regime = Regime::low_power,
                                   Method method = Method::closed_form)
{
    constexpr double ln2 = std::numbers::ln2;
    if (!(moments.m1 > 0.0))
        throw std::domain_error("low_power_metrics: E{xi} must be positive");
    if (!(mu_t_b >= 0.0))
        throw std::domain_error("low_power_metrics: mu*T*B must be >= 0");
    const double e1 = moments.m1;
    if (mu_t_b == 0.0)
        return make_metrics(ln2 / e1, 2.0 * e1 * e1 / moments.m2, regime, method);
    const double denom = (mu_t_b + ln2) * moments.m2 - mu_t_b * e1 * e1;
    return make_metrics(ln2 / e1, 2.0 * ln2 * e1 * e1 / denom, regime, method);
}

/// Low-power metrics from the large-N closed-form moments of xi (continuous or
/// quantized phases).
inline EeMetrics low_power_metrics_closed(const LinkLosses& losses, const FadingConfig& fading, std::size_t n,
                                          const PhaseMode& mode, double mu_t_b)
{
    const MomentPair m = xi_moments_large_n(losses, fading, n, mode);
    return low_power_metrics(m, mu_t_b, is_discrete(mode) ? Regime::low_power_discrete : Regime::low_power_large_n,
                             Method::closed_form);
}

/// ln2 / (l_h E{xi_d^2}) of the direct link alone; +inf without a direct link.
inline double non_irs_min_bit_energy(double l_h, double m_h)
{
    if (!(l_h >= 0.0))
        throw std::domain_error("non_irs_min_bit_energy: l_h must be >= 0");
    if (l_h == 0.0)
        return std::numeric_limits<double>::infinity();
    return std::numbers::ln2 / (l_h * nakagami_kth_moment(m_h, 2));
}

/// s = mu T P / (N0 N_c ln2), the Laplace rate of the case-I wideband limit.
inline double wideband_rate(double p_over_n0, double n_c, double mu_t)
{
    return mu_t * p_over_n0 / (n_c * std::numbers::ln2);
}

namespace detail
{
inline void check_wideband_args(double p_over_n0, double n_c, double mu_t)
{
    if (!(p_over_n0 > 0.0))
        throw std::domain_error("wideband metrics: p_over_n0 must be positive");
    if (!(n_c >= 1.0))
        throw std::domain_error("wideband metrics: n_c must be >= 1");
    if (!(mu_t >= 0.0))
        throw std::domain_error("wideband metrics: mu*T must be >= 0");
}

inline EeMetrics no_qos_limit(const MomentPair& m, Regime regime, Method method)
{
    if (!(m.m1 > 0.0))
        throw std::domain_error("wideband metrics: E{xi} must be positive");
    return make_metrics(std::numbers::ln2 / m.m1, 2.0 * m.m1 * m.m1 / m.m2, regime, method);
}
} // namespace detail

/// Case-I sparse-multipath metrics (N_c fixed, B_c -> inf), evaluated with
/// sample expectations over raw gains:
///   Eb/N0_min = -s ln2 / ln E{e^{-s xi}}
///   S0 = 2 (ln E{e^{-s xi}} / s)^2 E{e^{-s xi}} / E{xi^2 e^{-s xi}}
/// mu = 0 takes the analytic no-QoS limit.
inline EeMetrics wideband_case_i_metrics(std::span<const double> gains, double p_over_n0, double n_c, double mu_t)
{
    detail::check_wideband_args(p_over_n0, n_c, mu_t);
    detail::check_gains(gains, 0.0, "wideband_case_i_metrics");
    if (mu_t == 0.0)
        return detail::no_qos_limit(sample_moments(gains), Regime::wideband_case_i, Method::monte_carlo);

    const double s = wideband_rate(p_over_n0, n_c, mu_t);
    const double xi_min = *std::min_element(gains.begin(), gains.end());
    const double n = double(gains.size());
    // ln E{e^{-s xi}}; shift only when the exponents leave [-1, 1]
    const double xi_max = *std::max_element(gains.begin(), gains.end());
    const double shift = (s * xi_max <= 1.0) ? 0.0 : -s * xi_min;
    const double log_laplace =
        shift + std::log1p(pairwise_sum(gains, [=](double x) { return std::expm1(-s * x - shift); }) / n);
    // E{xi^2 e^{-s xi}} / E{e^{-s xi}} with a common shift cancelling out
    const double num = pairwise_sum(gains, [=](double x) { return x * x * std::exp(-s * (x - xi_min)); });
    const double den = pairwise_sum(gains, [=](double x) { return std::exp(-s * (x - xi_min)); });
    const double weighted_ratio = num / den;

    const double eb = -s * std::numbers::ln2 / log_laplace;
    const double q = log_laplace / s;
    return make_metrics(eb, 2.0 * q * q / weighted_ratio, Regime::wideband_case_i, Method::monte_carlo);
}

/// Case-I metrics for a Gamma(alpha, beta) gain law:
///   Eb/N0_min = s ln2 / (alpha ln(s beta + 1))
///   S0 = 2 alpha (beta + 1/s)^2 / ((alpha + 1) beta^2) ln(s beta + 1)^2
inline EeMetrics wideband_case_i_metrics(const GammaParams& p, double p_over_n0, double n_c, double mu_t)
{
    detail::check_wideband_args(p_over_n0, n_c, mu_t);
    p.validate();
    if (mu_t == 0.0)
        return detail::no_qos_limit({p.mean(), gamma_kth_moment(p, 2)}, Regime::wideband_case_i,
                                    Method::closed_form);
    const double s = wideband_rate(p_over_n0, n_c, mu_t);
    const double l = std::log1p(s * p.beta);
    const double eb = s * std::numbers::ln2 / (p.alpha * l);
    const double b = p.beta + 1.0 / s;
    const double s0 = 2.0 * p.alpha * b * b / ((p.alpha + 1.0) * p.beta * p.beta) * l * l;
    return make_metrics(eb, s0, Regime::wideband_case_i, Method::closed_form);
}

/// Case-I closed form for the IRS scenario: Gamma law matched to the
/// large-N moments of xi (quantized moments in discrete mode).
inline EeMetrics wideband_case_i_metrics_closed(const LinkLosses& losses, const FadingConfig& fading, std::size_t n,
                                                const PhaseMode& mode, double p_over_n0, double n_c, double mu_t)
{
    const GammaParams p = moment_match_gamma(xi_moments_large_n(losses, fading, n, mode));
    return wideband_case_i_metrics(p, p_over_n0, n_c, mu_t);
}

/// Case-II sparse multipath (N_c and B_c both unbounded): ln2/E{xi}, 2E{xi}^2/E{xi^2}.
inline EeMetrics wideband_case_ii_metrics(const MomentPair& moments, Method method = Method::closed_form)
{
    return detail::no_qos_limit(moments, Regime::wideband_case_ii, method);
}

struct JensenGap
{
    double wideband_case_i = 0.0; // Eb/N0_min with bounded N_c
    double low_power = 0.0;       // ln2 / E{xi}
    double gap = 0.0;             // >= 0
};

/// Excess minimum bit energy of case-I sparse multipath over the low-power value.
inline JensenGap jensen_gap(std::span<const double> gains, double p_over_n0, double n_c, double mu_t)
{
    if (!(mu_t > 0.0))
        throw std::domain_error("jensen_gap: mu*T must be positive");
    const double tilde = wideband_case_i_metrics(gains, p_over_n0, n_c, mu_t).eb_n0_min_linear;
    const double bar = std::numbers::ln2 / sample_moments(gains).m1;
    double gap = tilde - bar;
    if (gap < 0.0)
    {
        // degenerate laws give equality up to rounding
        if (-gap > 1e-12 * bar)
            throw std::logic_error("jensen_gap: case-I minimum below the low-power minimum");
        return {bar, bar, 0.0};
    }
    return {tilde, bar, gap};
}

/// C_E ~ S0/(10 log10 2) (Eb/N0|dB - Eb/N0_min|dB), clipped at 0.
inline std::vector<std::pair<double, double>> linear_approx_curve(const EeMetrics& metrics,
                                                                  std::span<const double> eb_n0_db_grid)
{
    std::vector<std::pair<double, double>> out;
    out.reserve(eb_n0_db_grid.size());
    const double per_db = metrics.s0 / (10.0 * std::log10(2.0));
    for (double db : eb_n0_db_grid)
        out.emplace_back(db, std::max(0.0, per_db * (db - metrics.eb_n0_min_db)));
    return out;
}

} // namespace irsee

#endif
