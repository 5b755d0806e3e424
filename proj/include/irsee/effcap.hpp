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

#ifndef IRSEE_EFFCAP_HPP
#define IRSEE_EFFCAP_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>

#include "parallel.hpp"
#include "stats.hpp"

namespace irsee
{

/// QoS exponent mu (1/bit), block duration T (s) and bandwidth B (Hz).
struct QosConfig
{
    double mu = 0.1;
    double block_duration_t = 2e-3;
    double bandwidth_b = 1e5;

    double mu_t_b() const { return mu * block_duration_t * bandwidth_b; }

    void validate() const
    {
        if (!(mu >= 0.0))
            throw std::domain_error("QosConfig: mu must be >= 0");
        if (!(block_duration_t > 0.0) || !(bandwidth_b > 0.0))
            throw std::domain_error("QosConfig: block duration and bandwidth must be positive");
    }
};

enum class MultipathGrowth
{
    rich,
    sparse_case_i,
    sparse_case_ii
};

inline std::string to_string(MultipathGrowth g)
{
    switch (g)
    {
    case MultipathGrowth::rich:
        return "rich";
    case MultipathGrowth::sparse_case_i:
        return "sparse_case_i";
    case MultipathGrowth::sparse_case_ii:
        return "sparse_case_ii";
    }
    return "rich";
}

inline MultipathGrowth parse_growth(const std::string& s)
{
    if (s == "rich")
        return MultipathGrowth::rich;
    if (s == "sparse_case_i")
        return MultipathGrowth::sparse_case_i;
    if (s == "sparse_case_ii")
        return MultipathGrowth::sparse_case_ii;
    throw std::invalid_argument("unknown multipath growth '" + s + "'");
}

/// Wideband operating point: P/N0 (Hz), N_c subchannels of coherence bandwidth B_c (Hz).
struct WidebandConfig
{
    double p_over_n0 = 1e6;
    double n_c = 5.0;
    double b_c = 1e4;
    MultipathGrowth growth = MultipathGrowth::sparse_case_i;

    double bandwidth() const { return n_c * b_c; }
    double subchannel_snr() const { return p_over_n0 / (n_c * b_c); }

    void validate() const
    {
        if (!(p_over_n0 > 0.0))
            throw std::domain_error("WidebandConfig: p_over_n0 must be positive");
        if (!(n_c >= 1.0))
            throw std::domain_error("WidebandConfig: n_c must be >= 1");
        if (!(b_c > 0.0))
            throw std::domain_error("WidebandConfig: b_c must be positive");
    }
};

/// ln( mean_i exp(e_i) ) without overflow or underflow.
///
/// The sum is taken over expm1(e_i - shift) and closed with log1p so that
/// exponents close to zero keep full relative precision. The shift is the
/// largest exponent unless all exponents already lie in [-1, 1].
inline double log_mean_exp(std::span<const double> e)
{
    if (e.empty())
        throw std::invalid_argument("log_mean_exp: empty input");
    const auto [lo, hi] = std::minmax_element(e.begin(), e.end());
    const double shift = (*lo >= -1.0 && *hi <= 1.0) ? 0.0 : *hi;
    const double mean = pairwise_sum(e, [shift](double v) { return std::expm1(v - shift); }) / double(e.size());
    return shift + std::log1p(mean);
}

namespace detail
{
// ln mean exp(-a log1p(snr xi_i)); exponents are generated on the fly.
inline double log_mean_exp_rate(std::span<const double> gains, double snr, double a)
{
    const auto [lo, hi] = std::minmax_element(gains.begin(), gains.end());
    // exponent is monotone in xi, so its extremes sit at the extreme gains
    const double e_at_lo = -a * std::log1p(snr * *lo);
    const double e_at_hi = -a * std::log1p(snr * *hi);
    const double e_min = std::min(e_at_lo, e_at_hi);
    const double e_max = std::max(e_at_lo, e_at_hi);
    const double shift = (e_min >= -1.0 && e_max <= 1.0) ? 0.0 : e_max;
    const double mean =
        pairwise_sum(gains, [=](double xi) { return std::expm1(-a * std::log1p(snr * xi) - shift); }) /
        double(gains.size());
    return shift + std::log1p(mean);
}

inline void check_gains(std::span<const double> gains, double snr, const char* who)
{
    if (gains.empty())
        throw std::invalid_argument(std::string(who) + ": empty gain sample");
    const auto [lo, hi] = std::minmax_element(gains.begin(), gains.end());
    if (!(*lo >= 0.0) || !std::isfinite(*hi))
        throw std::domain_error(std::string(who) + ": gains must be finite and non-negative");
    // negative SNR is admitted only for finite-difference probes around zero
    if (!(1.0 + snr * *hi > 0.0))
        throw std::domain_error(std::string(who) + ": 1 + snr*xi must stay positive");
}
} // namespace detail

/// Normalized effective capacity (bit/s/Hz) of the empirical gain law:
///   C_E = -1/(mu T B) ln E{ exp(-mu T B log2(1 + snr xi)) },
/// and the ergodic capacity E{log2(1 + snr xi)} when mu T B = 0.
inline double effective_capacity_mc(std::span<const double> gains, double snr, double mu_t_b)
{
    detail::check_gains(gains, snr, "effective_capacity_mc");
    if (!(mu_t_b >= 0.0))
        throw std::domain_error("effective_capacity_mc: mu*T*B must be >= 0");
    if (mu_t_b == 0.0)
        return pairwise_sum(gains, [snr](double xi) { return std::log1p(snr * xi); }) / double(gains.size()) /
               std::numbers::ln2;
    return -detail::log_mean_exp_rate(gains, snr, mu_t_b / std::numbers::ln2) / mu_t_b;
}

/// Effective capacity per unit bandwidth of N_c parallel subchannels of width
/// B_c: per-subchannel SNR P/(N0 N_c B_c) and exponent mu T B_c.
inline double effective_capacity_wideband(std::span<const double> gains, const WidebandConfig& wb, double mu_t)
{
    wb.validate();
    if (!(mu_t >= 0.0))
        throw std::domain_error("effective_capacity_wideband: mu*T must be >= 0");
    return effective_capacity_mc(gains, wb.subchannel_snr(), mu_t * wb.b_c);
}

struct CeDerivatives
{
    double first = 0.0;  // dC_E/dSNR at 0
    double second = 0.0; // d^2C_E/dSNR^2 at 0
};

/// First and second SNR-derivatives of C_E at SNR = 0 from the moments of xi.
inline CeDerivatives c_e_derivatives_at_zero(const MomentPair& moments, double mu_t_b)
{
    constexpr double ln2 = std::numbers::ln2;
    const double a = mu_t_b / (ln2 * ln2);
    return {moments.m1 / ln2, a * moments.m1 * moments.m1 - (a + 1.0 / ln2) * moments.m2};
}

struct QueueThreshold
{
    double q_max = 0.0; // bits
};

struct DelayThreshold
{
    double delta = 0.0; // rate tied to the arrival/service processes
    double d_max = 0.0; // s
};

/// Pr{Q >= Q_max} ~ exp(-mu Q_max).
inline double qos_probability(double mu, QueueThreshold t)
{
    if (!(mu >= 0.0) || !(t.q_max >= 0.0))
        throw std::domain_error("qos_probability: mu and Q_max must be >= 0");
    return std::exp(-mu * t.q_max);
}

/// Pr{D >= D_max} ~ exp(-mu delta D_max).
inline double qos_probability(double mu, DelayThreshold t)
{
    if (!(mu >= 0.0) || !(t.delta >= 0.0) || !(t.d_max >= 0.0))
        throw std::domain_error("qos_probability: mu, delta and D_max must be >= 0");
    return std::exp(-mu * t.delta * t.d_max);
}

} // namespace irsee

#endif
