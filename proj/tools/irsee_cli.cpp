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

// irsee command line: metrics, sweep, validate, probe.
// Exit codes: 0 success, 1 validation failure, 2 configuration error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "irsee/irsee.hpp"

namespace
{

struct CommonOptions
{
    std::string config_path;
    std::string preset = "precise";
    unsigned threads = irsee::default_workers();
    std::optional<std::size_t> samples;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> n_elements;
    std::optional<std::string> phase_mode;
    std::optional<double> mu;
};

void add_common(CLI::App* app, CommonOptions& o)
{
    app->add_option("--config", o.config_path, "key = value scenario file");
    app->add_option("--preset", o.preset, "base scenario: paper (10^3 draws) or precise (10^5 draws)")
        ->check(CLI::IsMember({"paper", "precise"}));
    app->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
    app->add_option("--samples", o.samples, "override the realization count");
    app->add_option("--seed", o.seed, "override the seed");
    app->add_option("-n,--elements", o.n_elements, "override the number of IRS elements");
    app->add_option("--phase-mode", o.phase_mode, "continuous or discrete:<bits>");
    app->add_option("--mu", o.mu, "override the QoS exponent (1/bit)");
}

irsee::ScenarioConfig resolve(const CommonOptions& o)
{
    irsee::ScenarioConfig cfg = irsee::preset(o.preset);
    if (!o.config_path.empty())
        cfg = irsee::load_config(o.config_path, cfg);
    if (o.samples)
        cfg.samples = *o.samples;
    if (o.seed)
        cfg.seed = *o.seed;
    if (o.n_elements)
        cfg.n_elements = *o.n_elements;
    if (o.phase_mode)
    {
        try
        {
            cfg.phase_mode = irsee::parse_phase_mode(*o.phase_mode);
        }
        catch (const std::exception& e)
        {
            throw irsee::ConfigError(e.what());
        }
    }
    if (o.mu)
        cfg.qos.mu = *o.mu;
    cfg.validate();
    return cfg;
}

void print_metrics(const irsee::EeMetrics& m, std::ostream& out)
{
    using irsee::detail::fmt;
    out << "regime = " << irsee::to_string(m.regime) << '\n'
        << "method = " << irsee::to_string(m.method) << '\n'
        << "eb_n0_min_linear = " << fmt(m.eb_n0_min_linear) << '\n'
        << "eb_n0_min_db = " << fmt(m.eb_n0_min_db) << '\n'
        << "s0 = " << fmt(m.s0) << '\n'
        << "eb_n0_min_saturated = " << int(m.eb_n0_min_saturated) << '\n'
        << "s0_saturated = " << int(m.s0_saturated) << '\n';
}

int run_metrics(const CommonOptions& common, const std::string& regime_name, const std::string& method_name)
{
    using namespace irsee;
    const ScenarioConfig cfg = resolve(common);
    const Regime regime = parse_regime(regime_name);
    const Method method = parse_method(method_name);
    const LinkLosses losses = cfg.losses();
    const double mtb = cfg.qos.mu_t_b();

    auto require_wideband = [&]() -> const WidebandConfig& {
        if (!cfg.wideband)
            throw ConfigError("regime " + regime_name + " needs p_over_n0, n_c and b_c in the scenario");
        return *cfg.wideband;
    };
    auto gains = [&] {
        return draw_gains(losses, cfg.fading, cfg.n_elements, cfg.phase_mode, cfg.samples, cfg.seed, common.threads)
            .gains(0);
    };

    EeMetrics m;
    switch (regime)
    {
    case Regime::low_power:
        if (method == Method::closed_form)
            m = low_power_metrics(xi_moments_large_n(losses, cfg.fading, cfg.n_elements, cfg.phase_mode), mtb,
                                  Regime::low_power, Method::closed_form);
        else
            m = low_power_metrics(sample_moments(gains()), mtb, Regime::low_power, Method::monte_carlo);
        break;
    case Regime::low_power_large_n:
    case Regime::low_power_discrete:
        if (method == Method::monte_carlo)
            m = low_power_metrics(sample_moments(gains()), mtb, regime, Method::monte_carlo);
        else
            m = low_power_metrics_closed(losses, cfg.fading, cfg.n_elements, cfg.phase_mode, mtb);
        break;
    case Regime::wideband_case_i:
    {
        const WidebandConfig& wb = require_wideband();
        const double mu_t = cfg.qos.mu * cfg.qos.block_duration_t;
        if (method == Method::monte_carlo)
            m = wideband_case_i_metrics(gains(), wb.p_over_n0, wb.n_c, mu_t);
        else
            m = wideband_case_i_metrics_closed(losses, cfg.fading, cfg.n_elements, cfg.phase_mode, wb.p_over_n0,
                                               wb.n_c, mu_t);
        break;
    }
    case Regime::wideband_case_ii:
        if (method == Method::monte_carlo)
            m = wideband_case_ii_metrics(sample_moments(gains()), Method::monte_carlo);
        else
            m = wideband_case_ii_metrics(xi_moments_large_n(losses, cfg.fading, cfg.n_elements, cfg.phase_mode));
        break;
    }
    print_metrics(m, std::cout);
    std::cout << "non_irs_eb_n0_min_db = " << detail::fmt(to_db(non_irs_min_bit_energy(losses.direct, cfg.fading.m_h)))
              << '\n';
    return 0;
}

struct SweepOptions
{
    int figure = 0;
    std::string wideband_case = "i";
    std::vector<double> mu_list;
    std::vector<std::size_t> n_list;
    std::string out;
    int per_decade = 40;
};

irsee::SweepResult build_sweep(const irsee::ScenarioConfig& base, const SweepOptions& s, const CommonOptions& common)
{
    using namespace irsee;
    const unsigned threads = common.threads;
    ScenarioConfig cfg = base;
    auto mus = [&](std::vector<double> fallback) { return s.mu_list.empty() ? fallback : s.mu_list; };
    auto snr_grid = [&](const ScenarioConfig& c) { return default_snr_grid(nominal_mean_gain(c), s.per_decade); };

    switch (s.figure)
    {
    case 1:
    {
        const auto mu = mus({0.0, 0.001, 0.01, 0.1});
        return tradeoff_sweep(cfg, mu, snr_grid(cfg), threads);
    }
    case 2:
    {
        if (!common.n_elements)
            cfg.n_elements = 60;
        const auto mu = mus({0.1});
        return irs_vs_baseline_sweep(cfg, mu, snr_grid(cfg), threads);
    }
    case 3:
    {
        std::vector<std::size_t> ns = s.n_list;
        if (ns.empty())
            ns = {10, 100, 1000, 10000};
        const std::vector<PhaseMode> modes = {ContinuousPhases{}, DiscretePhases{1}, DiscretePhases{2}};
        if (!s.mu_list.empty())
            cfg.qos.mu = s.mu_list.front();
        ScenarioConfig smallest = cfg;
        smallest.n_elements = ns.front();
        return element_count_sweep(cfg, ns, modes, snr_grid(smallest), threads);
    }
    case 4:
    {
        // bit energy against N for several mu; only the summary matters, so the curves stay coarse
        std::vector<std::size_t> ns = s.n_list;
        if (ns.empty())
            ns = {10, 20, 40, 60, 80, 100, 150, 200, 300, 500};
        const std::vector<PhaseMode> modes = {ContinuousPhases{}, DiscretePhases{1}, DiscretePhases{2}};
        ScenarioConfig smallest = cfg;
        smallest.n_elements = ns.front();
        const auto grid = default_snr_grid(nominal_mean_gain(smallest), 4);
        SweepResult merged;
        for (double mu : mus({0.01, 0.1, 1.0}))
        {
            cfg.qos.mu = mu;
            SweepResult part = element_count_sweep(cfg, ns, modes, grid, threads);
            if (merged.name.empty())
                merged = std::move(part);
            else
            {
                merged.rows.insert(merged.rows.end(), part.rows.begin(), part.rows.end());
                merged.summary.insert(merged.summary.end(), part.summary.begin(), part.summary.end());
            }
        }
        detail::sort_rows(merged.rows);
        merged.name = "bit_energy_vs_elements";
        merged.metadata["sweep"] = merged.name;
        return merged;
    }
    case 5:
    {
        const WidebandCase which = s.wideband_case == "ii" ? WidebandCase::ii : WidebandCase::i;
        // reference operating point of the wideband curves unless overridden
        if (!common.n_elements)
            cfg.n_elements = 500;
        if (cfg.wideband && common.config_path.empty())
            cfg.wideband->p_over_n0 = 1e5;
        const auto mu = mus({0.01, 0.1, 1.0});
        const auto grid = log_grid(1e4, 1e9, 10);
        return wideband_sweep(cfg, which, mu, grid, NcGrowth{}, threads);
    }
    default:
        throw ConfigError("--figure must be 1..5");
    }
}

int run_sweep(const CommonOptions& common, const SweepOptions& s)
{
    const irsee::ScenarioConfig cfg = resolve(common);
    const irsee::SweepResult r = build_sweep(cfg, s, common);
    if (s.out.empty())
    {
        irsee::write_rows_csv(r, std::cout);
        return 0;
    }
    auto open = [](const std::string& path) {
        std::ofstream f(path, std::ios::binary);
        if (!f)
            throw irsee::ConfigError("cannot write '" + path + "'");
        return f;
    };
    {
        auto f = open(s.out + ".csv");
        irsee::write_rows_csv(r, f);
    }
    {
        auto f = open(s.out + "_summary.csv");
        irsee::write_summary_csv(r, f);
    }
    {
        auto f = open(s.out + ".meta");
        irsee::write_metadata(r, f);
    }
    std::cerr << "wrote " << s.out << ".csv, " << s.out << "_summary.csv, " << s.out << ".meta (" << r.rows.size()
              << " rows)\n";
    return 0;
}

int run_validate(const CommonOptions& common, std::optional<std::size_t> mc_samples)
{
    const irsee::ScenarioConfig cfg = resolve(common);
    irsee::ValidationOptions opt;
    opt.workers = common.threads;
    if (mc_samples)
        opt.mc_samples = *mc_samples;
    const irsee::ValidationReport report = irsee::validate(cfg, opt);
    irsee::print_report(report, std::cout);
    return report.all_passed() ? 0 : 1;
}

int run_probe(double mu, std::optional<double> q_max, std::optional<double> delta, std::optional<double> d_max)
{
    double p = 0.0;
    if (q_max && !delta && !d_max)
        p = irsee::qos_probability(mu, irsee::QueueThreshold{*q_max});
    else if (!q_max && delta && d_max)
        p = irsee::qos_probability(mu, irsee::DelayThreshold{*delta, *d_max});
    else
        throw irsee::ConfigError("probe needs either --q-max or both --delta and --d-max");
    std::cout << "probability = " << irsee::detail::fmt(p) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"irsee: spectral- and energy-efficiency analysis of IRS-aided links under statistical QoS"};
    app.require_subcommand(1);

    CommonOptions common;

    auto* metrics = app.add_subcommand("metrics", "minimum bit energy and wideband slope for a scenario");
    add_common(metrics, common);
    std::string regime = "low_power_large_n";
    std::string method = "closed_form";
    metrics->add_option("--regime", regime,
                        "low_power | low_power_large_n | low_power_discrete | wideband_case_i | wideband_case_ii");
    metrics->add_option("--method", method, "closed_form | monte_carlo");

    auto* sweep = app.add_subcommand("sweep", "figure data as CSV");
    add_common(sweep, common);
    SweepOptions sw;
    sweep->add_option("--figure", sw.figure, "1 tradeoff, 2 IRS vs direct link, 3 slope vs N, 4 bit energy vs N, "
                                             "5 wideband")
        ->required()
        ->check(CLI::Range(1, 5));
    sweep->add_option("--case", sw.wideband_case, "wideband case for figure 5")->check(CLI::IsMember({"i", "ii"}));
    sweep->add_option("--mu-list", sw.mu_list, "QoS exponents");
    sweep->add_option("--n-list", sw.n_list, "IRS sizes");
    sweep->add_option("--per-decade", sw.per_decade, "SNR grid density")->check(CLI::PositiveNumber);
    sweep->add_option("--out", sw.out, "output prefix (<out>.csv, <out>_summary.csv, <out>.meta)");

    auto* validate = app.add_subcommand("validate", "run the oracle cross-checks");
    add_common(validate, common);
    std::optional<std::size_t> mc_samples;
    validate->add_option("--mc-samples", mc_samples, "realizations for the Monte Carlo checks (default 10^6)");

    auto* probe = app.add_subcommand("probe", "queue or delay violation probability for a QoS exponent");
    double probe_mu = 0.0;
    std::optional<double> q_max, delta, d_max;
    probe->add_option("--mu", probe_mu, "QoS exponent (1/bit)")->required();
    probe->add_option("--q-max", q_max, "queue threshold (bits)");
    probe->add_option("--delta", delta, "delay-form rate constant");
    probe->add_option("--d-max", d_max, "delay bound (s)");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try
    {
        if (metrics->parsed())
            return run_metrics(common, regime, method);
        if (sweep->parsed())
            return run_sweep(common, sw);
        if (validate->parsed())
            return run_validate(common, mc_samples);
        return run_probe(probe_mu, q_max, delta, d_max);
    }
    catch (const std::exception& e)
    {
        // bad scenarios and bad argument values are configuration errors
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
