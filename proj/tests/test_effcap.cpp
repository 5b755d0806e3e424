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
#include <numbers>
#include <random>
#include <vector>

#include "irsee/effcap.hpp"
#include "irsee/oracle.hpp"
#include "irsee/rng.hpp"
#include "irsee/stats.hpp"

using namespace irsee;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using std::numbers::ln2;

namespace
{
std::vector<double> exponential_gains(std::size_t n, std::uint64_t seed)
{
    PhiloxStream rng(seed, 0);
    std::exponential_distribution<double> e(1.0);
    std::vector<double> x(n);
    for (auto& v : x)
        v = e(rng);
    return x;
}
} // namespace

TEST_CASE("log-mean-exp", "[effcap]")
{
    const std::vector<double> small{-0.3, 0.2, 0.05};
    const double naive = std::log((std::exp(-0.3) + std::exp(0.2) + std::exp(0.05)) / 3.0);
    CHECK_THAT(log_mean_exp(small), WithinRel(naive, 1e-12));

    const std::vector<double> huge{1000.0, 999.0};
    CHECK_THAT(log_mean_exp(huge), WithinRel(1000.0 + std::log((1.0 + std::exp(-1.0)) / 2.0), 1e-14));
    const std::vector<double> tiny{-2000.0, -2001.0};
    CHECK_THAT(log_mean_exp(tiny), WithinRel(-2000.0 + std::log((1.0 + std::exp(-1.0)) / 2.0), 1e-14));

    // full relative precision for exponents near zero
    const std::vector<double> near_zero{1e-17, 3e-17};
    CHECK_THAT(log_mean_exp(near_zero), WithinRel(2e-17, 1e-12));
    CHECK_THROWS_AS(log_mean_exp(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("effective capacity of simple laws", "[effcap]")
{
    const std::vector<double> point{2.5};
    for (double a : {0.0, 1e-6, 0.3, 5.0, 200.0})
        CHECK_THAT(effective_capacity_mc(point, 0.8, a), WithinRel(std::log2(1.0 + 0.8 * 2.5), 1e-13));

    const std::vector<double> two{1.0, 3.0};
    CHECK_THAT(effective_capacity_mc(two, 1.0, 1.0),
               WithinRel(-std::log((std::exp(-1.0) + std::exp(-2.0)) / 2.0), 1e-13));
    CHECK_THAT(effective_capacity_mc(two, 1.0, 1e6), WithinAbs(1.0, 1e-5));
    CHECK_THAT(effective_capacity_mc(two, 1.0, 0.0), WithinRel(1.5, 1e-14));
}

TEST_CASE("effective capacity argument checks", "[effcap]")
{
    const std::vector<double> x{1.0};
    CHECK_THROWS_AS(effective_capacity_mc(std::vector<double>{}, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(effective_capacity_mc(x, 1.0, -1.0), std::domain_error);
    CHECK_THROWS_AS(effective_capacity_mc(std::vector<double>{-1.0}, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(effective_capacity_mc(x, -2.0, 1.0), std::domain_error);
    // small negative SNR stays admissible for finite differences around zero
    CHECK_NOTHROW(effective_capacity_mc(x, -1e-4, 1.0));
}

TEST_CASE("effective capacity is nonincreasing in the QoS exponent and sandwiched", "[effcap]")
{
    const auto g = exponential_gains(20000, 61);
    const double g_min = *std::min_element(g.begin(), g.end());
    for (double snr : {1e-3, 0.1, 1.0, 10.0, 1e3})
    {
        const double ergodic = effective_capacity_mc(g, snr, 0.0);
        const double worst = std::log2(1.0 + snr * g_min);
        double prev = ergodic;
        for (double a = 1e-4; a < 1e4; a *= 3.0)
        {
            const double c = effective_capacity_mc(g, snr, a);
            REQUIRE(c <= prev * (1.0 + 1e-12));
            REQUIRE(c >= worst * (1.0 - 1e-12));
            prev = c;
        }
    }
}

TEST_CASE("effective capacity stays finite at extreme exponents", "[effcap]")
{
    const auto g = exponential_gains(10000, 62);
    for (double a : {1.0, 200.0, 1e4})
        for (double snr : {1e-6, 1.0, 1e6})
        {
            const double c = effective_capacity_mc(g, snr, a);
            REQUIRE(std::isfinite(c));
            REQUIRE(c >= 0.0);
        }
}

TEST_CASE("effective capacity is continuous at mu = 0", "[effcap]")
{
    const auto g = exponential_gains(10000, 63);
    for (double snr : {1e-3, 1.0, 100.0})
        CHECK(std::abs(effective_capacity_mc(g, snr, 1e-8) - effective_capacity_mc(g, snr, 0.0)) < 1e-6);
}

TEST_CASE("wideband effective capacity", "[effcap]")
{
    const auto g = exponential_gains(5000, 64);
    const double mu_t = 0.1 * 2e-3;
    SECTION("single subchannel reduces to the narrowband form")
    {
        const WidebandConfig wb{1e6, 1.0, 1e5, MultipathGrowth::rich};
        CHECK(effective_capacity_wideband(g, wb, mu_t) == effective_capacity_mc(g, 1e6 / 1e5, mu_t * 1e5));
    }
    SECTION("large coherence bandwidth approaches the linear regime")
    {
        const std::vector<double> one{1.0};
        const WidebandConfig wb{1e6, 5.0, 1e9, MultipathGrowth::sparse_case_i};
        const double limit = 1e6 / (5.0 * 1e9 * ln2);
        CHECK_THAT(effective_capacity_wideband(one, wb, mu_t), WithinRel(limit, 1e-3));
    }
    SECTION("no QoS constraint gives the ergodic rate")
    {
        const WidebandConfig wb{1e6, 5.0, 1e4, MultipathGrowth::sparse_case_i};
        double s = 0.0;
        for (double x : g)
            s += std::log2(1.0 + wb.subchannel_snr() * x);
        CHECK_THAT(effective_capacity_wideband(g, wb, 0.0), WithinRel(s / double(g.size()), 1e-12));
    }
    CHECK_THROWS_AS(effective_capacity_wideband(g, WidebandConfig{1e6, 0.5, 1e4, MultipathGrowth::rich}, mu_t),
                    std::domain_error);
}

TEST_CASE("derivatives at zero SNR", "[effcap]")
{
    const CeDerivatives a = c_e_derivatives_at_zero({1.0, 1.0}, 0.0);
    CHECK_THAT(a.first, WithinRel(1.0 / ln2, 1e-15));
    CHECK_THAT(a.second, WithinRel(-1.0 / ln2, 1e-15));
    const CeDerivatives b = c_e_derivatives_at_zero({1.0, 2.0}, 0.0);
    CHECK_THAT(b.second, WithinRel(-2.0 / ln2, 1e-15));
    for (double a_tb : {0.0, 0.5, 20.0, 200.0})
        CHECK(c_e_derivatives_at_zero({1.0, 1.5}, a_tb).second < 0.0);
}

TEST_CASE("derivatives agree with finite differences of the Monte Carlo capacity", "[effcap]")
{
    const auto g = exponential_gains(200000, 65);
    const MomentPair m = sample_moments(g);
    for (double a : {0.0, 0.2, 2.0})
    {
        const auto f = [&](double snr) { return effective_capacity_mc(g, snr, a); };
        const CeDerivatives d = c_e_derivatives_at_zero(m, a);
        INFO("muTB = " << a);
        CHECK_THAT(oracle::central_first(f, 1e-4), WithinRel(d.first, 0.005));
        CHECK_THAT(oracle::central_second(f, 1e-2), WithinRel(d.second, 0.02));
    }
}

TEST_CASE("QoS violation probabilities", "[effcap]")
{
    CHECK(qos_probability(0.0, QueueThreshold{100.0}) == 1.0);
    CHECK_THAT(qos_probability(0.1, QueueThreshold{100.0}), WithinRel(4.539992976248485e-5, 1e-12));
    CHECK_THAT(qos_probability(1.0, DelayThreshold{2.0, 5.0}), WithinRel(std::exp(-10.0), 1e-14));
    CHECK_THROWS_AS(qos_probability(-1.0, QueueThreshold{1.0}), std::domain_error);
    CHECK_THROWS_AS(qos_probability(1.0, QueueThreshold{-1.0}), std::domain_error);
    CHECK_THROWS_AS(qos_probability(1.0, DelayThreshold{-1.0, 1.0}), std::domain_error);
}

TEST_CASE("configuration records", "[effcap]")
{
    const QosConfig q{0.1, 2e-3, 1e5};
    CHECK_THAT(q.mu_t_b(), WithinRel(20.0, 1e-14));
    CHECK_THROWS_AS((QosConfig{-0.1, 2e-3, 1e5}.validate()), std::domain_error);
    CHECK_THROWS_AS((QosConfig{0.1, 0.0, 1e5}.validate()), std::domain_error);
    const WidebandConfig wb{1e6, 5.0, 1e4, MultipathGrowth::sparse_case_ii};
    CHECK(wb.bandwidth() == 5e4);
    CHECK(wb.subchannel_snr() == 20.0);
    CHECK(parse_growth(to_string(wb.growth)) == wb.growth);
    CHECK_THROWS(parse_growth("dense"));
}
