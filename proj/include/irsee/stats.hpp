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

#ifndef IRSEE_STATS_HPP
#define IRSEE_STATS_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>

#include "channel.hpp"
#include "irs.hpp"
#include "parallel.hpp"

namespace irsee
{

/// Gamma(shape alpha, scale beta): mean alpha*beta, variance alpha*beta^2.
struct GammaParams
{
    double alpha = 1.0;
    double beta = 1.0;

    double mean() const { return alpha * beta; }
    double variance() const { return alpha * beta * beta; }

    void validate() const
    {
        if (!(alpha > 0.0) || !(beta > 0.0))
            throw std::domain_error("GammaParams: alpha and beta must be positive");
    }
};

/// First and second raw moments of a non-negative random variable.
struct MomentPair
{
    double m1 = 0.0;
    double m2 = 0.0;

    double variance() const { return m2 - m1 * m1; }
};

/// Raised when the moments describe a point mass (no Gamma fit exists).
class DegenerateDistribution : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

/// Moment-matched Gamma law: alpha = m1^2/(m2 - m1^2), beta = (m2 - m1^2)/m1.
inline GammaParams moment_match_gamma(const MomentPair& moments)
{
    if (!(moments.m1 > 0.0))
        throw std::domain_error("moment_match_gamma: first moment must be positive");
    const double var = moments.m2 - moments.m1 * moments.m1;
    if (!(var > 0.0))
        throw DegenerateDistribution("moment_match_gamma: zero or negative variance (m1=" +
                                     std::to_string(moments.m1) + ", m2=" + std::to_string(moments.m2) + ")");
    return {moments.m1 * moments.m1 / var, var / moments.m1};
}

/// E{X^k} for X ~ Nakagami(m, 1): m^(-k/2) Gamma(m + k/2) / Gamma(m).
inline double nakagami_kth_moment(double m, int k)
{
    if (!(m >= 0.5))
        throw std::domain_error("nakagami_kth_moment: shape must be >= 0.5");
    if (k < 1)
        throw std::domain_error("nakagami_kth_moment: order must be >= 1");
    const double half_k = 0.5 * k;
    return std::exp(std::lgamma(m + half_k) - std::lgamma(m) - half_k * std::log(m));
}

/// E{Y^k} for Y ~ Gamma(alpha, beta): beta^k alpha (alpha+1) ... (alpha+k-1).
inline double gamma_kth_moment(const GammaParams& p, int k)
{
    if (k < 1)
        throw std::domain_error("gamma_kth_moment: order must be >= 1");
    double acc = 1.0;
    for (int i = 0; i < k; ++i)
        acc *= p.beta * (p.alpha + i);
    return acc;
}

namespace detail
{
// E{|f_n||g_n|} for independent unit-spread Nakagami factors.
inline double double_nakagami_mean(double m_g, double m_f)
{
    return nakagami_kth_moment(m_g, 1) * nakagami_kth_moment(m_f, 1);
}

inline void check_shapes(std::size_t n, double m_g, double m_f)
{
    if (n < 1)
        throw std::domain_error("reflected-sum moments need at least one element");
    if (!(m_g >= 0.5) || !(m_f >= 0.5))
        throw std::domain_error("reflected-sum moments: Nakagami shapes must be >= 0.5");
}
} // namespace detail

/// Exact moments of xi_r = sum_n |f_n||g_n|.
inline MomentPair xi_r_moments(std::size_t n, double m_g, double m_f)
{
    detail::check_shapes(n, m_g, m_f);
    const double nn = double(n);
    const double per = detail::double_nakagami_mean(m_g, m_f);
    return {nn * per, nn + nn * (nn - 1.0) * per * per};
}

/// Moments of the quantized reflected sum sum_n |f_n||g_n| e^{j e_n}: the mean
/// shrinks by the loss factor, the cross terms of the second moment by its square.
/// The second moment is E{|.|^2}.
inline MomentPair xi_bar_r_moments(std::size_t n, double m_g, double m_f, int bits)
{
    detail::check_shapes(n, m_g, m_f);
    const double loss = quantization_loss_factor(bits);
    const double nn = double(n);
    const double per = detail::double_nakagami_mean(m_g, m_f) * loss;
    return {nn * per, nn + nn * (nn - 1.0) * per * per};
}

inline MomentPair reflected_moments(std::size_t n, const FadingConfig& fading, const PhaseMode& mode)
{
    if (const auto* d = std::get_if<DiscretePhases>(&mode))
        return xi_bar_r_moments(n, fading.m_g, fading.m_f, d->bits);
    return xi_r_moments(n, fading.m_g, fading.m_f);
}

/// Coefficients of the fourth-power expansion used for E{xi^2}. Exposed so a
/// corrupted set can serve as a negative control for the validation suite.
struct FourthPowerCoefficients
{
    double d4 = 1.0;   // l_h^2 E{xi_d^4}
    double r4 = 1.0;   // (l_f l_g)^2 E{xi_r^4}
    double d2r2 = 6.0; // l_h l_f l_g E{xi_d^2} E{xi_r^2}
    double d3r1 = 4.0; // l_h sqrt(l_h l_f l_g) E{xi_d^3} E{xi_r}
    double d1r3 = 4.0; // l_f l_g sqrt(l_h l_f l_g) E{xi_d} E{xi_r^3}
};

/// Large-N closed-form moments of xi = (sqrt(l_h) xi_d + sqrt(l_f l_g) xi_r)^2.
///
/// xi_d moments are exact Nakagami moments. E{xi_r} and E{xi_r^2} are exact;
/// the third and fourth moments come from the moment-matched Gamma law of
/// xi_r. In discrete mode the quantized reflected-sum moments are substituted.
/// The approximation is meant for N >= 10; it is not gated.
inline MomentPair xi_moments_large_n(const LinkLosses& losses, const FadingConfig& fading, std::size_t n,
                                     const PhaseMode& mode, const FourthPowerCoefficients& c = {})
{
    fading.validate();
    validate(mode);
    const double lh = losses.direct;
    const double lc = losses.cascade();
    const double cross = std::sqrt(lh * lc);

    const double d1 = nakagami_kth_moment(fading.m_h, 1);
    const double d2 = nakagami_kth_moment(fading.m_h, 2);
    const double d3 = nakagami_kth_moment(fading.m_h, 3);
    const double d4 = nakagami_kth_moment(fading.m_h, 4);

    double r1 = 0.0, r2 = 0.0, r3 = 0.0, r4 = 0.0;
    if (n > 0)
    {
        const MomentPair r = reflected_moments(n, fading, mode);
        const GammaParams g = moment_match_gamma(r);
        r1 = r.m1;
        r2 = r.m2;
        r3 = gamma_kth_moment(g, 3);
        r4 = gamma_kth_moment(g, 4);
    }

    const double m1 = lh * d2 + lc * r2 + 2.0 * cross * d1 * r1;
    const double m2 = c.d4 * lh * lh * d4 + c.r4 * lc * lc * r4 + c.d2r2 * lh * lc * d2 * r2 +
                      c.d3r1 * lh * cross * d3 * r1 + c.d1r3 * lc * cross * d1 * r3;
    return {m1, m2};
}

/// E{exp(-s Y)} for Y ~ Gamma(alpha, beta): (s beta + 1)^(-alpha).
inline double gamma_laplace_expectation(const GammaParams& p, double s)
{
    if (!(s >= 0.0))
        throw std::domain_error("gamma_laplace_expectation: rate must be >= 0");
    return std::exp(-p.alpha * std::log1p(s * p.beta));
}

/// E{Y^2 exp(-s Y)} for Y ~ Gamma(alpha, beta): alpha(alpha+1) beta^2 (s beta + 1)^(-(alpha+2)).
inline double gamma_weighted_second_moment(const GammaParams& p, double s)
{
    if (!(s >= 0.0))
        throw std::domain_error("gamma_weighted_second_moment: rate must be >= 0");
    return p.alpha * (p.alpha + 1.0) * p.beta * p.beta * std::exp(-(p.alpha + 2.0) * std::log1p(s * p.beta));
}

inline double gamma_pdf(const GammaParams& p, double x)
{
    if (x < 0.0)
        return 0.0;
    if (x == 0.0)
        return p.alpha < 1.0 ? HUGE_VAL : (p.alpha == 1.0 ? 1.0 / p.beta : 0.0);
    return std::exp((p.alpha - 1.0) * std::log(x) - x / p.beta - p.alpha * std::log(p.beta) - std::lgamma(p.alpha));
}

/// Empirical raw moments, pairwise-summed.
inline MomentPair sample_moments(std::span<const double> x)
{
    if (x.empty())
        throw std::invalid_argument("sample_moments: empty sample");
    const double n = double(x.size());
    return {pairwise_sum(x) / n, pairwise_sum(x, [](double v) { return v * v; }) / n};
}

} // namespace irsee

#endif
