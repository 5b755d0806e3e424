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

// Cross-checks of the closed forms against the independent references in
// oracle.hpp and against Monte Carlo.

#ifndef IRSEE_VALIDATE_HPP
#define IRSEE_VALIDATE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "ee.hpp"
#include "effcap.hpp"
#include "irs.hpp"
#include "oracle.hpp"
#include "sampler.hpp"
#include "scenario.hpp"
#include "stats.hpp"

namespace irsee
{

struct CheckResult
{
    std::string name;
    bool passed = false;
    double measured = 0.0;  // error statistic of the check
    double tolerance = 0.0; // passes when measured <= tolerance
    std::string detail;
};

struct ValidationReport
{
    std::vector<CheckResult> checks;

    bool all_passed() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
    }
};

struct ValidationOptions
{
    std::size_t mc_samples = 1000000;    // realizations for the moment and derivative checks
    std::size_t moment_samples = 200000; // realizations for the reflected-sum checks
    std::size_t moment_elements = 8;     // N for the reflected-sum checks
    int phase_realizations = 100;
    int phase_grid_points = 64;
    int quadrature_triples = 50;
    FourthPowerCoefficients coefficients; // replaced by a corrupted set in the negative control
    unsigned workers = default_workers();
};

inline void print_report(const ValidationReport& report, std::ostream& out)
{
    for (const auto& c : report.checks)
        out << (c.passed ? "PASS " : "FAIL ") << c.name << "  measured=" << detail::fmt(c.measured)
            << " tol=" << detail::fmt(c.tolerance) << (c.detail.empty() ? "" : "  " + c.detail) << '\n';
}

namespace detail
{
inline CheckResult make_check(std::string name, double measured, double tolerance, std::string detail = {})
{
    return {std::move(name), measured <= tolerance, measured, tolerance, std::move(detail)};
}

inline double rel_err(double a, double ref) { return std::abs(a - ref) / std::abs(ref); }

// Largest |mean - expected| in units of the standard error.
inline double z_score(std::span<const double> x, double expected)
{
    const MomentPair m = sample_moments(x);
    const double se = std::sqrt(std::max(m.variance(), 0.0) / double(x.size()));
    return se > 0.0 ? std::abs(m.m1 - expected) / se : (m.m1 == expected ? 0.0 : HUGE_VAL);
}
} // namespace detail

/// Closed-form phases against an exhaustive grid, for N = 1, 2, 3.
/// measured = largest relative amount by which the grid optimum beats them.
inline CheckResult check_phase_optimality(const ScenarioConfig& cfg, int realizations, int grid_points,
                                          std::uint64_t seed)
{
    const LinkLosses losses = cfg.losses();
    double worst = 0.0;
    int trials = 0;
    for (std::size_t n = 1; n <= 3; ++n)
        for (int i = 0; i < realizations; ++i, ++trials)
        {
            // a stream family disjoint from the Monte Carlo draws
            const ChannelRealization real = sample_channel(cfg.fading, n, mix_seed(seed + 0x5eed), trials);
            const double closed = gain_for_mode(real, ContinuousPhases{}, losses).xi;
            const double grid = oracle::grid_search_gain(real, losses, grid_points);
            worst = std::max(worst, (grid - closed) / grid);
        }
    return detail::make_check("phase_optimality", std::max(worst, 0.0), 1e-12,
                              std::to_string(trials) + " realizations, N in {1,2,3}, " +
                                  std::to_string(grid_points) + "-point grid");
}

/// Monte Carlo moments of the reflected sum, continuous and quantized phases,
/// against the exact expressions; measured = worst z-score.
inline std::vector<CheckResult> check_reflected_moments(const FadingConfig& fading, std::size_t n,
                                                        std::size_t samples, std::uint64_t seed, unsigned workers)
{
    constexpr int max_bits = 3;
    // derotated by arg(h): the continuous sum is then real and equal to xi_r
    std::vector<double> cont(samples);
    std::vector<std::vector<double>> re(max_bits, std::vector<double>(samples));
    std::vector<std::vector<double>> sq(max_bits, std::vector<double>(samples));
    std::vector<double> cont_sq(samples);
    const std::uint64_t family = mix_seed(seed + 0x4d0e);
    parallel_for(
        samples,
        [&](std::size_t i) {
            const ChannelRealization real = sample_channel(fading, n, family, i);
            const std::vector<double> theta = optimal_phases(real);
            const std::complex<double> derot = std::polar(1.0, -safe_arg(real.h));
            const auto reflected = [&](std::span<const double> ph) {
                std::complex<double> acc{0.0, 0.0};
                for (std::size_t k = 0; k < n; ++k)
                    acc += real.f[k] * std::polar(1.0, ph[k]) * real.g[k];
                return acc * derot;
            };
            const std::complex<double> c = reflected(theta);
            cont[i] = c.real();
            cont_sq[i] = std::norm(c);
            for (int b = 1; b <= max_bits; ++b)
            {
                const std::complex<double> q = reflected(quantize_phases(theta, b));
                re[b - 1][i] = q.real();
                sq[b - 1][i] = std::norm(q);
            }
        },
        workers);

    std::vector<CheckResult> out;
    const MomentPair exact = xi_r_moments(n, fading.m_g, fading.m_f);
    const double z_c = std::max(detail::z_score(cont, exact.m1), detail::z_score(cont_sq, exact.m2));
    out.push_back(detail::make_check("reflected_moments_continuous", z_c, 3.0,
                                     "N=" + std::to_string(n) + ", " + std::to_string(samples) + " draws, z-score"));
    double z_q = 0.0;
    for (int b = 1; b <= max_bits; ++b)
    {
        const MomentPair q = xi_bar_r_moments(n, fading.m_g, fading.m_f, b);
        z_q = std::max({z_q, detail::z_score(re[b - 1], q.m1), detail::z_score(sq[b - 1], q.m2)});
    }
    out.push_back(detail::make_check("reflected_moments_quantized", z_q, 3.0,
                                     "N=" + std::to_string(n) + ", b=1..3, z-score"));
    return out;
}

/// Large-N closed-form moments of xi against Monte Carlo on exact draws.
inline CheckResult check_closed_form_moments(const ScenarioConfig& cfg, std::span<const double> gains,
                                             const FourthPowerCoefficients& coeffs)
{
    const MomentPair closed = xi_moments_large_n(cfg.losses(), cfg.fading, cfg.n_elements, cfg.phase_mode, coeffs);
    const MomentPair mc = sample_moments(gains);
    const double e1 = detail::rel_err(closed.m1, mc.m1);
    const double e2 = detail::rel_err(closed.m2, mc.m2);
    return detail::make_check("closed_form_moments", std::max(e1, e2), 0.02,
                              "N=" + std::to_string(cfg.n_elements) + ", rel err m1=" + detail::fmt(e1) +
                                  " m2=" + detail::fmt(e2));
}

/// Derivatives of C_E at SNR = 0 against central differences of the Monte
/// Carlo effective capacity on the same draws.
inline std::vector<CheckResult> check_derivatives(std::span<const double> gains, double mu_t_b)
{
    const auto c_e = [&](double snr) { return effective_capacity_mc(gains, snr, mu_t_b); };
    const CeDerivatives d = c_e_derivatives_at_zero(sample_moments(gains), mu_t_b);
    const double fd1 = oracle::central_first(c_e, 1e-4);
    const double fd2 = oracle::central_second(c_e, 1e-2);
    const std::string where = "muTB=" + detail::fmt(mu_t_b);
    return {detail::make_check("derivative_first", detail::rel_err(fd1, d.first), 0.005, where),
            detail::make_check("derivative_second", detail::rel_err(fd2, d.second), 0.02, where)};
}

/// Gamma Laplace expectations against quadrature over random (alpha, beta, s).
inline CheckResult check_gamma_laplace(int triples, std::uint64_t seed)
{
    PhiloxStream rng(mix_seed(seed + 0x1a91), 0);
    double worst = 0.0;
    for (int i = 0; i < triples; ++i)
    {
        const double alpha = 0.5 + 19.5 * rng.uniform();
        const double beta = std::pow(10.0, -1.0 + 2.0 * rng.uniform());
        const double s = std::pow(10.0, -2.0 + 3.0 * rng.uniform()) / beta;
        const GammaParams p{alpha, beta};
        const double q1 = oracle::gamma_expectation(alpha, beta, [s](double y) { return std::exp(-s * y); });
        const double q2 = oracle::gamma_expectation(alpha, beta, [s](double y) { return y * y * std::exp(-s * y); });
        worst = std::max({worst, detail::rel_err(gamma_laplace_expectation(p, s), q1),
                          detail::rel_err(gamma_weighted_second_moment(p, s), q2)});
    }
    return detail::make_check("gamma_laplace_identities", worst, 1e-8, std::to_string(triples) + " triples");
}

/// Ordering claims over a 3x3x3 grid of (N, fading shape, mu); measured is the
/// number of violations.
inline CheckResult check_inequalities(const ScenarioConfig& cfg)
{
    const LinkLosses losses = cfg.losses();
    const std::size_t ns[] = {10, 100, 1000};
    const double shapes[] = {0.5, 1.0, 3.0};
    const double mus[] = {0.01, 0.1, 1.0};
    int violations = 0;
    int cases = 0;
    std::string first;
    const auto expect = [&](bool ok, const std::string& what) {
        ++cases;
        if (!ok && violations++ == 0)
            first = what;
    };
    for (std::size_t n : ns)
        for (double m : shapes)
            for (double mu : mus)
            {
                const FadingConfig fading{m, m, m};
                const double mtb = mu * cfg.qos.block_duration_t * cfg.qos.bandwidth_b;
                const std::string at = "N=" + std::to_string(n) + " m=" + detail::fmt(m) + " mu=" + detail::fmt(mu);
                const EeMetrics cont = low_power_metrics_closed(losses, fading, n, ContinuousPhases{}, mtb);
                expect(non_irs_min_bit_energy(losses.direct, m) > cont.eb_n0_min_linear, "direct-only " + at);
                double prev = HUGE_VAL;
                for (int b = 1; b <= 4; ++b)
                {
                    const double eb = low_power_metrics_closed(losses, fading, n, DiscretePhases{b}, mtb)
                                          .eb_n0_min_linear;
                    expect(eb >= cont.eb_n0_min_linear, "discrete>=continuous " + at);
                    expect(eb <= prev, "monotone in bits " + at);
                    prev = eb;
                }
                const double high_b =
                    low_power_metrics_closed(losses, fading, n, DiscretePhases{40}, mtb).eb_n0_min_linear;
                expect(detail::rel_err(high_b, cont.eb_n0_min_linear) < 1e-12, "bits->inf " + at);

                const GammaParams law = moment_match_gamma(xi_moments_large_n(losses, fading, n, ContinuousPhases{}));
                const double mu_t = mu * cfg.qos.block_duration_t;
                const double p_over_n0 = cfg.wideband ? cfg.wideband->p_over_n0 : 1e6;
                const double n_c = cfg.wideband ? cfg.wideband->n_c : 5.0;
                const double tilde = wideband_case_i_metrics(law, p_over_n0, n_c, mu_t).eb_n0_min_linear;
                expect(tilde > std::numbers::ln2 / law.mean(), "jensen " + at);
                const double xi0 = law.mean();
                const std::vector<double> flat(16, xi0);
                // equality up to rounding
                expect(jensen_gap(flat, p_over_n0, n_c, mu_t).gap <= 1e-12 * std::numbers::ln2 / xi0,
                       "jensen equality " + at);
            }
    return detail::make_check("inequality_suite", violations, 0.0,
                              std::to_string(cases) + " cases" + (first.empty() ? "" : "; first failure: " + first));
}

/// Runs every check for the scenario.
inline ValidationReport validate(const ScenarioConfig& cfg, const ValidationOptions& opt = {})
{
    cfg.validate();
    ValidationReport r;
    r.checks.push_back(check_phase_optimality(cfg, opt.phase_realizations, opt.phase_grid_points, cfg.seed));
    for (auto& c : check_reflected_moments(cfg.fading, opt.moment_elements, opt.moment_samples, cfg.seed, opt.workers))
        r.checks.push_back(std::move(c));
    const GainTable table = draw_gains(cfg.losses(), cfg.fading, cfg.n_elements, cfg.phase_mode, opt.mc_samples,
                                       cfg.seed, opt.workers);
    if (cfg.n_elements > 0)
        r.checks.push_back(check_closed_form_moments(cfg, table.gains(0), opt.coefficients));
    for (auto& c : check_derivatives(table.gains(0), cfg.qos.mu_t_b()))
        r.checks.push_back(std::move(c));
    r.checks.push_back(check_gamma_laplace(opt.quadrature_triples, cfg.seed));
    r.checks.push_back(check_inequalities(cfg));
    return r;
}

} // namespace irsee

#endif
