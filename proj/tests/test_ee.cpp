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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "irsee/ee.hpp"
#include "irsee/sampler.hpp"
#include "irsee/scenario.hpp"

using namespace irsee;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using std::numbers::ln2;

namespace
{
const LinkLosses reference_losses() { return link_losses(Geometry{}, PathLossModel{}); }
const FadingConfig reference_fading{1.0, 1.0, 2.0};
} // namespace

TEST_CASE("metrics from derivatives", "[ee]")
{
    const EeMetrics awgn = metrics_from_derivatives(1.0 / ln2, -1.0 / ln2);
    CHECK_THAT(awgn.eb_n0_min_linear, WithinRel(ln2, 1e-15));
    CHECK_THAT(awgn.eb_n0_min_db, WithinAbs(-1.5917, 1e-4));
    CHECK_THAT(awgn.s0, WithinRel(2.0, 1e-15));
    CHECK_THAT(metrics_from_derivatives(1.0 / ln2, -2.0 / ln2).s0, WithinRel(1.0, 1e-15));
    CHECK_THROWS_AS(metrics_from_derivatives(1.0, 0.1), std::domain_error);
    CHECK_THROWS_AS(metrics_from_derivatives(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(metrics_from_derivatives(0.0, -1.0), std::domain_error);
}

TEST_CASE("low-power metrics from moments", "[ee]")
{
    const EeMetrics a = low_power_metrics({1.0, 1.0}, 0.0);
    CHECK_THAT(a.eb_n0_min_linear, WithinRel(ln2, 1e-15));
    CHECK_THAT(a.s0, WithinRel(2.0, 1e-15));
    CHECK_THAT(low_power_metrics({1.0, 2.0}, 0.0).s0, WithinRel(1.0, 1e-15));
    CHECK_THAT(low_power_metrics({1.0, 2.0}, ln2).s0, WithinRel(2.0 / 3.0, 1e-15));
    CHECK_THROWS_AS(low_power_metrics({0.0, 1.0}, 0.0), std::domain_error);
    CHECK_THROWS_AS(low_power_metrics({1.0, 2.0}, -1.0), std::domain_error);

    // the route through the derivatives gives the same pair
    const MomentPair m{0.7, 1.3};
    for (double a_tb : {0.0, 1.0, 20.0})
    {
        const CeDerivatives d = c_e_derivatives_at_zero(m, a_tb);
        const EeMetrics x = metrics_from_derivatives(d.first, d.second);
        const EeMetrics y = low_power_metrics(m, a_tb);
        CHECK_THAT(x.eb_n0_min_linear, WithinRel(y.eb_n0_min_linear, 1e-14));
        CHECK_THAT(x.s0, WithinRel(y.s0, 1e-13));
    }
}

TEST_CASE("low-power minimum bit energy does not depend on mu; slope decreases with it", "[ee]")
{
    const MomentPair m = xi_moments_large_n(reference_losses(), reference_fading, 100, ContinuousPhases{});
    const double ref = low_power_metrics(m, 0.0).eb_n0_min_linear;
    double prev = HUGE_VAL;
    for (double mu : {0.0, 0.001, 0.01, 0.1, 1.0})
    {
        const EeMetrics e = low_power_metrics(m, mu * 2e-3 * 1e5);
        CHECK(e.eb_n0_min_linear == ref);
        CHECK(e.s0 < prev);
        prev = e.s0;
    }
}

TEST_CASE("large-N closed-form metrics", "[ee]")
{
    const LinkLosses l = reference_losses();
    SECTION("bit energy falls with N")
    {
        double prev = HUGE_VAL;
        for (std::size_t n : {1u, 10u, 50u, 100u, 1000u, 10000u})
        {
            const double eb = low_power_metrics_closed(l, reference_fading, n, ContinuousPhases{}, 20.0)
                                  .eb_n0_min_linear;
            REQUIRE(eb < prev);
            prev = eb;
        }
    }
    SECTION("huge N: bit energy towards zero and slope towards two")
    {
        const EeMetrics big = low_power_metrics_closed(l, reference_fading, 1000000, ContinuousPhases{}, 0.0);
        CHECK(big.eb_n0_min_linear < 1e-3 * low_power_metrics_closed(l, reference_fading, 100, ContinuousPhases{}, 0.0)
                                                 .eb_n0_min_linear);
        CHECK_THAT(big.s0, WithinAbs(2.0, 1e-3));
        CHECK(big.regime == Regime::low_power_large_n);
    }
    SECTION("fine quantization reduces to continuous phases")
    {
        const EeMetrics c = low_power_metrics_closed(l, reference_fading, 64, ContinuousPhases{}, 20.0);
        const EeMetrics d = low_power_metrics_closed(l, reference_fading, 64, DiscretePhases{40}, 20.0);
        CHECK_THAT(d.eb_n0_min_linear, WithinRel(c.eb_n0_min_linear, 1e-14));
        CHECK_THAT(d.s0, WithinRel(c.s0, 1e-13));
        CHECK(d.regime == Regime::low_power_discrete);
    }
    SECTION("coarse quantization costs bit energy")
    {
        for (std::size_t n : {10u, 100u, 1000u})
        {
            const double c =
                low_power_metrics_closed(l, reference_fading, n, ContinuousPhases{}, 20.0).eb_n0_min_linear;
            double prev = HUGE_VAL;
            for (int b = 1; b <= 5; ++b)
            {
                const double d =
                    low_power_metrics_closed(l, reference_fading, n, DiscretePhases{b}, 20.0).eb_n0_min_linear;
                REQUIRE(d >= c);
                REQUIRE(d <= prev);
                prev = d;
            }
        }
    }
}

TEST_CASE("closed-form bit energy against Monte Carlo", "[ee]")
{
    const LinkLosses l = reference_losses();
    const GainTable t = draw_gains(l, reference_fading, 100, ContinuousPhases{}, 100000, 71, 1);
    const double mc = 1.0 / c_e_derivatives_at_zero(sample_moments(t.gains(0)), 20.0).first;
    const double cf = low_power_metrics_closed(l, reference_fading, 100, ContinuousPhases{}, 20.0).eb_n0_min_linear;
    CHECK_THAT(cf, WithinRel(mc, 0.02));
}

TEST_CASE("direct-link-only bit energy", "[ee]")
{
    CHECK_THAT(non_irs_min_bit_energy(1.0, 1.0), WithinRel(ln2, 1e-15));
    CHECK(non_irs_min_bit_energy(0.0, 1.0) == std::numeric_limits<double>::infinity());
    CHECK_THROWS_AS(non_irs_min_bit_energy(-1.0, 1.0), std::domain_error);
    const LinkLosses l = reference_losses();
    CHECK_THAT(non_irs_min_bit_energy(l.direct, 2.0), WithinRel(ln2 / (1e-3 * std::pow(10.0, -3.6)), 1e-12));
    for (std::size_t n : {1u, 2u, 10u, 100u})
        for (const PhaseMode& mode : {PhaseMode{ContinuousPhases{}}, PhaseMode{DiscretePhases{1}}})
            CHECK(non_irs_min_bit_energy(l.direct, 2.0) >
                  low_power_metrics_closed(l, reference_fading, n, mode, 20.0).eb_n0_min_linear);
}

TEST_CASE("wideband case I", "[ee]")
{
    SECTION("degenerate gain gives the Jensen equality")
    {
        const std::vector<double> flat(100, 0.4);
        const EeMetrics m = wideband_case_i_metrics(flat, 1e6, 5.0, 2e-4);
        CHECK_THAT(m.eb_n0_min_linear, WithinRel(ln2 / 0.4, 1e-10));
    }
    SECTION("unit Gamma law at unit rate")
    {
        // s = mu T P / (N0 N_c ln2) = 1
        CHECK(wideband_rate(1.0, 1.0, ln2) == 1.0);
        const EeMetrics m = wideband_case_i_metrics(GammaParams{1.0, 1.0}, 1.0, 1.0, ln2);
        CHECK_THAT(m.eb_n0_min_linear, WithinRel(1.0, 1e-14));
        CHECK(m.method == Method::closed_form);
        CHECK(m.regime == Regime::wideband_case_i);
    }
    SECTION("vanishing QoS exponent meets the low-power values")
    {
        const GammaParams p{3.0, 0.2};
        const MomentPair mom{p.mean(), gamma_kth_moment(p, 2)};
        const EeMetrics lp = low_power_metrics(mom, 0.0);
        const EeMetrics limit = wideband_case_i_metrics(p, 1e6, 5.0, 0.0);
        CHECK(limit.eb_n0_min_linear == lp.eb_n0_min_linear);
        CHECK_THAT(limit.s0, WithinRel(lp.s0, 1e-14));
        const EeMetrics near = wideband_case_i_metrics(p, 1e6, 5.0, 1e-12);
        CHECK_THAT(near.eb_n0_min_linear, WithinRel(lp.eb_n0_min_linear, 1e-6));
        CHECK_THAT(near.s0, WithinRel(lp.s0, 1e-5));
    }
    SECTION("closed form matches sample expectations on exact Gamma draws")
    {
        const GammaParams p{2.5, 0.4};
        PhiloxStream rng(72, 0);
        std::gamma_distribution<double> gd(p.alpha, p.beta);
        std::vector<double> x(1000000);
        for (auto& v : x)
            v = gd(rng);
        for (double mu_t : {1e-6, 1e-5, 1e-4})
        {
            const EeMetrics cf = wideband_case_i_metrics(p, 1e6, 5.0, mu_t);
            const EeMetrics mc = wideband_case_i_metrics(x, 1e6, 5.0, mu_t);
            INFO("mu T = " << mu_t);
            CHECK_THAT(mc.eb_n0_min_linear, WithinRel(cf.eb_n0_min_linear, 0.02));
            CHECK_THAT(mc.s0, WithinRel(cf.s0, 0.02));
        }
    }
    SECTION("growing scale drives bit energy to zero and slope up")
    {
        double eb_prev = HUGE_VAL, s0_prev = 0.0;
        for (double beta : {1e2, 1e4, 1e8, 1e12})
        {
            const EeMetrics m = wideband_case_i_metrics(GammaParams{5.0, beta}, 1.0, 1.0, ln2);
            REQUIRE(m.eb_n0_min_linear < eb_prev);
            REQUIRE(m.s0 > s0_prev);
            eb_prev = m.eb_n0_min_linear;
            s0_prev = m.s0;
        }
        CHECK(eb_prev < 0.01);
        CHECK(s0_prev > 100.0);
    }
    CHECK_THROWS_AS(wideband_case_i_metrics(GammaParams{1, 1}, 0.0, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(wideband_case_i_metrics(GammaParams{1, 1}, 1.0, 0.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(wideband_case_i_metrics(GammaParams{1, 1}, 1.0, 1.0, -1.0), std::domain_error);
}

TEST_CASE("saturated metrics carry explicit flags", "[ee]")
{
    const EeMetrics m = make_metrics(0.0, std::numeric_limits<double>::infinity(), Regime::wideband_case_i,
                                     Method::closed_form);
    CHECK(m.eb_n0_min_saturated);
    CHECK(m.s0_saturated);
    CHECK(m.eb_n0_min_linear == 0.0);
    CHECK(m.eb_n0_min_db == -std::numeric_limits<double>::infinity());
    const EeMetrics ok = make_metrics(ln2, 2.0, Regime::low_power, Method::closed_form);
    CHECK_FALSE(ok.eb_n0_min_saturated);
    CHECK_FALSE(ok.s0_saturated);
}

TEST_CASE("wideband case II", "[ee]")
{
    const EeMetrics a = wideband_case_ii_metrics({1.0, 2.0});
    CHECK_THAT(a.eb_n0_min_linear, WithinRel(ln2, 1e-15));
    CHECK_THAT(a.s0, WithinRel(1.0, 1e-15));
    CHECK_THROWS_AS(wideband_case_ii_metrics({0.0, 1.0}), std::domain_error);

    PhiloxStream rng(73, 0);
    for (int i = 0; i < 100; ++i)
    {
        const double m1 = std::pow(10.0, -8 + 8 * rng.uniform());
        const MomentPair m{m1, m1 * m1 * (1.0 + rng.uniform())};
        const EeMetrics w = wideband_case_ii_metrics(m);
        const EeMetrics lp = low_power_metrics(m, 0.0);
        REQUIRE(w.eb_n0_min_linear == lp.eb_n0_min_linear);
        REQUIRE_THAT(w.s0, WithinRel(lp.s0, 1e-15));
    }

    // many subchannels take case I to the case-II values
    const MomentPair mom = xi_moments_large_n(reference_losses(), reference_fading, 100, ContinuousPhases{});
    const GammaParams law = moment_match_gamma(mom);
    const EeMetrics ii = wideband_case_ii_metrics(mom);
    const EeMetrics i_many = wideband_case_i_metrics(law, 1e6, 1e9, 0.1 * 2e-3);
    CHECK_THAT(i_many.eb_n0_min_linear, WithinRel(ii.eb_n0_min_linear, 0.01));
    CHECK_THAT(i_many.s0, WithinRel(ii.s0, 0.01));
}

TEST_CASE("Jensen gap", "[ee]")
{
    const std::vector<double> flat(50, 2.0);
    CHECK(jensen_gap(flat, 1.0, 1.0, ln2).gap == 0.0);

    const std::vector<double> two{1.0, 3.0};
    const JensenGap j = jensen_gap(two, 1.0, 1.0, ln2);
    CHECK_THAT(j.wideband_case_i, WithinRel(ln2 / -std::log((std::exp(-1.0) + std::exp(-3.0)) / 2.0), 1e-13));
    CHECK_THAT(j.low_power, WithinRel(ln2 / 2.0, 1e-15));
    CHECK(j.gap > 0.0);
    CHECK_THROWS_AS(jensen_gap(two, 1.0, 1.0, 0.0), std::domain_error);
}

TEST_CASE("Jensen gap is positive under resampling for the reference scenario", "[ee]")
{
    const ScenarioConfig cfg = precise_preset();
    const GainTable t = draw_gains(cfg.losses(), cfg.fading, cfg.n_elements, cfg.phase_mode, 100000, 74, 1);
    const auto& g = t.gains(0);
    const double mu_t = 0.1 * cfg.qos.block_duration_t;
    PhiloxStream rng(75, 0);
    std::vector<double> gaps;
    std::vector<double> resample(g.size());
    for (int b = 0; b < 100; ++b)
    {
        for (auto& v : resample)
            v = g[std::size_t(rng.uniform() * double(g.size()))];
        gaps.push_back(jensen_gap(resample, cfg.wideband->p_over_n0, cfg.wideband->n_c, mu_t).gap);
    }
    std::sort(gaps.begin(), gaps.end());
    // lower 1% quantile of the bootstrap distribution
    CHECK(gaps[0] > 0.0);
    CHECK(jensen_gap(g, cfg.wideband->p_over_n0, cfg.wideband->n_c, mu_t).gap > 0.0);
}

TEST_CASE("linear approximation of the tradeoff curve", "[ee]")
{
    EeMetrics m = make_metrics(from_db(-1.0), 2.0, Regime::low_power, Method::closed_form);
    const std::vector<double> grid{-1.0, -1.0 + 10.0 * std::log10(2.0), -5.0};
    const auto c = linear_approx_curve(m, grid);
    CHECK_THAT(c[0].second, WithinAbs(0.0, 1e-12));
    CHECK_THAT(c[1].second, WithinRel(2.0, 1e-12));
    CHECK(c[2].second == 0.0);
    m.s0 = 1.0;
    const std::vector<double> ten{9.0};
    CHECK_THAT(linear_approx_curve(m, ten)[0].second, WithinRel(10.0 / (10.0 * std::log10(2.0)), 1e-12));
}

TEST_CASE("dB conversions and enum names", "[ee]")
{
    CHECK_THAT(to_db(ln2), WithinAbs(-1.5917, 1e-4));
    CHECK_THAT(from_db(to_db(3.7)), WithinRel(3.7, 1e-14));
    for (Regime r : {Regime::low_power, Regime::low_power_large_n, Regime::low_power_discrete, Regime::wideband_case_i,
                     Regime::wideband_case_ii})
        CHECK(parse_regime(to_string(r)) == r);
    CHECK(parse_method("monte_carlo") == Method::monte_carlo);
    CHECK_THROWS(parse_regime("midband"));
    CHECK_THROWS(parse_method("guess"));
}
