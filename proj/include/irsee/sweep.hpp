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

#ifndef IRSEE_SWEEP_HPP
#define IRSEE_SWEEP_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "ee.hpp"
#include "effcap.hpp"
#include "sampler.hpp"
#include "scenario.hpp"
#include "stats.hpp"

#ifndef IRSEE_BUILD_ID
#define IRSEE_BUILD_ID "unknown"
#endif

namespace irsee
{

/// One point of a spectral-efficiency / bit-energy curve.
struct SweepRow
{
    double sweep_variable = 0.0; // SNR (linear) or B_c (Hz), depending on the sweep
    double eb_n0_db = 0.0;
    double c_e = 0.0; // bit/s/Hz
    double mu = 0.0;
    std::size_t n = 0;
    std::string mode;        // phase mode, or "baseline" for the direct link alone
    std::string flag = "ok"; // "saturated" when C_E underflows and Eb/N0 is unbounded
};

/// Per-curve energy-efficiency metrics that accompany a sweep.
struct SummaryRow
{
    std::size_t n = 0;
    double mu = 0.0;
    std::string mode;
    EeMetrics metrics;
};

struct SweepResult
{
    std::string name;
    std::string sweep_variable; // meaning of SweepRow::sweep_variable
    std::vector<SweepRow> rows;
    std::vector<SummaryRow> summary;
    std::map<std::string, std::string> metadata;
};

/// Log-spaced grid from lo to hi (inclusive) with `per_decade` points per decade.
inline std::vector<double> log_grid(double lo, double hi, int per_decade = 40)
{
    if (!(lo > 0.0) || !(hi > lo) || per_decade < 1)
        throw std::invalid_argument("log_grid: need 0 < lo < hi and per_decade >= 1");
    const double decades = std::log10(hi / lo);
    const int steps = std::max(1, int(std::ceil(decades * per_decade - 1e-9)));
    std::vector<double> g(steps + 1);
    for (int i = 0; i <= steps; ++i)
        g[i] = lo * std::pow(10.0, decades * i / steps);
    return g;
}

/// SNR grid spanning three decades either side of 1/E{xi}.
inline std::vector<double> default_snr_grid(double mean_gain, int per_decade = 40)
{
    return log_grid(1e-3 / mean_gain, 1e3 / mean_gain, per_decade);
}

/// E{xi} used to centre SNR grids: the large-N closed form, or the direct
/// link alone without an IRS.
inline double nominal_mean_gain(const ScenarioConfig& cfg)
{
    const LinkLosses losses = cfg.losses();
    if (cfg.n_elements == 0)
        return losses.direct * nakagami_kth_moment(cfg.fading.m_h, 2);
    return xi_moments_large_n(losses, cfg.fading, cfg.n_elements, cfg.phase_mode).m1;
}

/// Sublinear growth of the subchannel count with the coherence bandwidth:
/// log N_c is linear in log B_c through (b_c_lo, n_c_lo) and (b_c_hi, n_c_hi),
/// extrapolated as the same power law outside that range.
struct NcGrowth
{
    double b_c_lo = 1e4;
    double n_c_lo = 5.0;
    double b_c_hi = 1e7;
    double n_c_hi = 50.0;

    double operator()(double b_c) const
    {
        const double slope = std::log(n_c_hi / n_c_lo) / std::log(b_c_hi / b_c_lo);
        return std::max(1.0, n_c_lo * std::pow(b_c / b_c_lo, slope));
    }
};

enum class WidebandCase
{
    i,
    ii
};

namespace detail
{
inline void fill_metadata(SweepResult& r, const ScenarioConfig& cfg)
{
    r.metadata["sweep"] = r.name;
    r.metadata["sweep_variable"] = r.sweep_variable;
    r.metadata["seed"] = std::to_string(cfg.seed);
    r.metadata["samples"] = std::to_string(cfg.samples);
    r.metadata["build_id"] = IRSEE_BUILD_ID;
    r.metadata["n_elements"] = std::to_string(cfg.n_elements);
    r.metadata["phase_mode"] = to_string(cfg.phase_mode);
}

inline void check_grid(std::span<const double> grid, const char* who)
{
    if (grid.empty())
        throw std::invalid_argument(std::string(who) + ": empty grid");
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (!(grid[i] > 0.0) || (i > 0 && !(grid[i] > grid[i - 1])))
            throw std::invalid_argument(std::string(who) + ": grid must be positive and strictly increasing");
}

inline SweepRow make_row(double x, double snr, double c_e, double mu, std::size_t n, std::string mode)
{
    SweepRow row{x, 0.0, c_e, mu, n, std::move(mode), "ok"};
    if (c_e > 0.0 && std::isfinite(c_e))
        row.eb_n0_db = to_db(snr / c_e);
    else
    {
        row.eb_n0_db = std::numeric_limits<double>::infinity();
        row.flag = "saturated";
    }
    return row;
}

// Curves over one SNR grid for several gain sets; grid points are evaluated in
// parallel and gathered in a fixed order.
struct CurveSpec
{
    const std::vector<double>* gains;
    double mu;
    std::size_t n;
    std::string mode;
};

inline void append_curves(std::vector<SweepRow>& out, const std::vector<CurveSpec>& curves,
                          std::span<const double> snr_grid, const QosConfig& qos, unsigned workers)
{
    const std::size_t points = snr_grid.size();
    std::vector<SweepRow> rows(curves.size() * points);
    parallel_for(
        rows.size(),
        [&](std::size_t k) {
            const CurveSpec& c = curves[k / points];
            const double snr = snr_grid[k % points];
            const double mtb = c.mu * qos.block_duration_t * qos.bandwidth_b;
            rows[k] = make_row(snr, snr, effective_capacity_mc(*c.gains, snr, mtb), c.mu, c.n, c.mode);
        },
        workers);
    out.insert(out.end(), rows.begin(), rows.end());
}

inline void sort_rows(std::vector<SweepRow>& rows)
{
    std::stable_sort(rows.begin(), rows.end(),
                     [](const SweepRow& a, const SweepRow& b) { return a.sweep_variable < b.sweep_variable; });
}
} // namespace detail

/// C_E versus Eb/N0 in the low-power regime for several QoS exponents, all on
/// the same channel draws.
inline SweepResult tradeoff_sweep(const ScenarioConfig& cfg, std::span<const double> mu_list,
                                  std::span<const double> snr_grid, unsigned workers = default_workers())
{
    cfg.validate();
    detail::check_grid(snr_grid, "tradeoff_sweep");
    const LinkLosses losses = cfg.losses();
    const GainTable table = draw_gains(losses, cfg.fading, cfg.n_elements, cfg.phase_mode, cfg.samples, cfg.seed,
                                       workers);
    const std::string mode = to_string(cfg.phase_mode);

    SweepResult r;
    r.name = "tradeoff";
    r.sweep_variable = "snr";
    std::vector<detail::CurveSpec> curves;
    for (double mu : mu_list)
        curves.push_back({&table.gains(0), mu, cfg.n_elements, mode});
    detail::append_curves(r.rows, curves, snr_grid, cfg.qos, workers);
    detail::sort_rows(r.rows);

    const MomentPair sample = sample_moments(table.gains(0));
    for (double mu : mu_list)
    {
        const double mtb = mu * cfg.qos.block_duration_t * cfg.qos.bandwidth_b;
        r.summary.push_back({cfg.n_elements, mu, mode, low_power_metrics(sample, mtb, Regime::low_power,
                                                                         Method::monte_carlo)});
        if (cfg.n_elements > 0)
            r.summary.push_back({cfg.n_elements, mu, mode,
                                 low_power_metrics_closed(losses, cfg.fading, cfg.n_elements, cfg.phase_mode, mtb)});
    }
    detail::fill_metadata(r, cfg);
    return r;
}

/// IRS-aided curves next to the direct-link-only baseline on common draws.
inline SweepResult irs_vs_baseline_sweep(const ScenarioConfig& cfg, std::span<const double> mu_list,
                                         std::span<const double> snr_grid, unsigned workers = default_workers())
{
    cfg.validate();
    detail::check_grid(snr_grid, "irs_vs_baseline_sweep");
    const LinkLosses losses = cfg.losses();
    const GainTable table = draw_gains(losses, cfg.fading, cfg.n_elements, cfg.phase_mode, cfg.samples, cfg.seed,
                                       workers);
    const std::string mode = to_string(cfg.phase_mode);

    SweepResult r;
    r.name = "irs_vs_baseline";
    r.sweep_variable = "snr";
    std::vector<detail::CurveSpec> curves;
    for (double mu : mu_list)
    {
        curves.push_back({&table.gains(0), mu, cfg.n_elements, mode});
        curves.push_back({&table.baseline, mu, 0, "baseline"});
    }
    detail::append_curves(r.rows, curves, snr_grid, cfg.qos, workers);
    detail::sort_rows(r.rows);

    const MomentPair irs = sample_moments(table.gains(0));
    const MomentPair base = sample_moments(table.baseline);
    for (double mu : mu_list)
    {
        const double mtb = mu * cfg.qos.block_duration_t * cfg.qos.bandwidth_b;
        r.summary.push_back({cfg.n_elements, mu, mode,
                             low_power_metrics(irs, mtb, Regime::low_power, Method::monte_carlo)});
        r.summary.push_back({0, mu, "baseline", low_power_metrics(base, mtb, Regime::low_power, Method::monte_carlo)});
    }
    detail::fill_metadata(r, cfg);
    return r;
}

/// Curves and minimum-bit-energy summaries for a list of IRS sizes and phase
/// modes at the configured QoS exponent. With a wideband block configured the
/// summary also carries the case-I (bounded N_c) metrics.
inline SweepResult element_count_sweep(const ScenarioConfig& cfg, std::span<const std::size_t> n_list,
                                       std::span<const PhaseMode> modes, std::span<const double> snr_grid,
                                       unsigned workers = default_workers())
{
    cfg.validate();
    detail::check_grid(snr_grid, "element_count_sweep");
    if (modes.empty())
        throw std::invalid_argument("element_count_sweep: no phase modes");
    const LinkLosses losses = cfg.losses();
    const double mu = cfg.qos.mu;
    const double mtb = cfg.qos.mu_t_b();

    SweepResult r;
    r.name = "element_count";
    r.sweep_variable = "snr";
    for (std::size_t n : n_list)
    {
        const GainTable table = draw_gains(losses, cfg.fading, n, modes, cfg.samples, cfg.seed, workers);
        std::vector<detail::CurveSpec> curves;
        for (std::size_t k = 0; k < modes.size(); ++k)
            curves.push_back({&table.gains(k), mu, n, to_string(modes[k])});
        detail::append_curves(r.rows, curves, snr_grid, cfg.qos, workers);

        for (std::size_t k = 0; k < modes.size(); ++k)
        {
            const std::string tag = to_string(modes[k]);
            r.summary.push_back(
                {n, mu, tag, low_power_metrics(sample_moments(table.gains(k)), mtb, Regime::low_power,
                                               Method::monte_carlo)});
            if (n > 0)
                r.summary.push_back({n, mu, tag, low_power_metrics_closed(losses, cfg.fading, n, modes[k], mtb)});
            if (cfg.wideband)
            {
                const auto& wb = *cfg.wideband;
                const double mu_t = mu * cfg.qos.block_duration_t;
                r.summary.push_back(
                    {n, mu, tag, wideband_case_i_metrics(table.gains(k), wb.p_over_n0, wb.n_c, mu_t)});
                if (n > 0)
                    r.summary.push_back({n, mu, tag,
                                         wideband_case_i_metrics_closed(losses, cfg.fading, n, modes[k],
                                                                        wb.p_over_n0, wb.n_c, mu_t)});
            }
        }
    }
    detail::sort_rows(r.rows);
    detail::fill_metadata(r, cfg);
    return r;
}

/// Wideband curves as the coherence bandwidth grows: case I keeps N_c fixed,
/// case II lets N_c follow `growth`. Eb/N0 = (P/(N0 N_c B_c)) / C_E.
inline SweepResult wideband_sweep(const ScenarioConfig& cfg, WidebandCase which, std::span<const double> mu_list,
                                  std::span<const double> b_c_grid, const NcGrowth& growth = {},
                                  unsigned workers = default_workers())
{
    cfg.validate();
    if (!cfg.wideband)
        throw ConfigError("wideband_sweep: scenario has no wideband block (p_over_n0, n_c, b_c)");
    detail::check_grid(b_c_grid, "wideband_sweep");
    const LinkLosses losses = cfg.losses();
    const WidebandConfig base = *cfg.wideband;
    const GainTable table = draw_gains(losses, cfg.fading, cfg.n_elements, cfg.phase_mode, cfg.samples, cfg.seed,
                                       workers);
    const std::vector<double>& gains = table.gains(0);
    const std::string mode = to_string(cfg.phase_mode);

    SweepResult r;
    r.name = which == WidebandCase::i ? "wideband_case_i" : "wideband_case_ii";
    r.sweep_variable = "b_c";
    const std::size_t points = b_c_grid.size();
    std::vector<SweepRow> rows(mu_list.size() * points);
    parallel_for(
        rows.size(),
        [&](std::size_t k) {
            const double mu = mu_list[k / points];
            WidebandConfig wb = base;
            wb.b_c = b_c_grid[k % points];
            wb.n_c = which == WidebandCase::i ? base.n_c : growth(wb.b_c);
            const double c_e = effective_capacity_wideband(gains, wb, mu * cfg.qos.block_duration_t);
            rows[k] = detail::make_row(wb.b_c, wb.subchannel_snr(), c_e, mu, cfg.n_elements, mode);
        },
        workers);
    r.rows = std::move(rows);
    detail::sort_rows(r.rows);

    const MomentPair sample = sample_moments(gains);
    for (double mu : mu_list)
    {
        const double mu_t = mu * cfg.qos.block_duration_t;
        if (which == WidebandCase::i)
        {
            r.summary.push_back({cfg.n_elements, mu, mode,
                                 wideband_case_i_metrics(gains, base.p_over_n0, base.n_c, mu_t)});
            if (cfg.n_elements > 0)
                r.summary.push_back({cfg.n_elements, mu, mode,
                                     wideband_case_i_metrics_closed(losses, cfg.fading, cfg.n_elements,
                                                                    cfg.phase_mode, base.p_over_n0, base.n_c,
                                                                    mu_t)});
        }
        else
        {
            r.summary.push_back({cfg.n_elements, mu, mode, wideband_case_ii_metrics(sample, Method::monte_carlo)});
        }
    }
    detail::fill_metadata(r, cfg);
    r.metadata["p_over_n0"] = detail::fmt(base.p_over_n0);
    r.metadata["n_c"] = which == WidebandCase::i ? detail::fmt(base.n_c) : "growth";
    return r;
}

// ---- curve queries ---------------------------------------------------------

/// Rows of one curve, in sweep order.
inline std::vector<SweepRow> select_curve(const SweepResult& r, double mu, const std::string& mode)
{
    std::vector<SweepRow> out;
    for (const auto& row : r.rows)
        if (row.mu == mu && row.mode == mode)
            out.push_back(row);
    return out;
}

/// Smallest finite Eb/N0 (dB) along a curve.
inline double leftmost_eb_n0_db(std::span<const SweepRow> curve)
{
    double best = std::numeric_limits<double>::infinity();
    for (const auto& row : curve)
        if (row.flag == "ok")
            best = std::min(best, row.eb_n0_db);
    return best;
}

/// Eb/N0 (dB) at which the curve first reaches `target` bit/s/Hz, linearly
/// interpolated; +inf when never reached.
inline double eb_n0_at_capacity(std::span<const SweepRow> curve, double target)
{
    for (std::size_t i = 1; i < curve.size(); ++i)
    {
        const SweepRow& a = curve[i - 1];
        const SweepRow& b = curve[i];
        if (a.flag != "ok" || b.flag != "ok")
            continue;
        if (a.c_e <= target && b.c_e >= target && b.c_e > a.c_e)
            return a.eb_n0_db + (target - a.c_e) * (b.eb_n0_db - a.eb_n0_db) / (b.c_e - a.c_e);
    }
    return std::numeric_limits<double>::infinity();
}

/// C_E at a given Eb/N0 (dB) on the rising branch of the curve, linearly
/// interpolated; 0 when the bit energy is below the curve's minimum.
inline double capacity_at_eb_n0(std::span<const SweepRow> curve, double eb_n0_db)
{
    for (std::size_t i = 1; i < curve.size(); ++i)
    {
        const SweepRow& a = curve[i - 1];
        const SweepRow& b = curve[i];
        if (a.flag != "ok" || b.flag != "ok")
            continue;
        if (a.eb_n0_db <= eb_n0_db && b.eb_n0_db >= eb_n0_db && b.eb_n0_db > a.eb_n0_db)
            return a.c_e + (eb_n0_db - a.eb_n0_db) * (b.c_e - a.c_e) / (b.eb_n0_db - a.eb_n0_db);
    }
    return 0.0;
}

// ---- output ----------------------------------------------------------------

inline void write_rows_csv(const SweepResult& r, std::ostream& out)
{
    using detail::fmt;
    out << "sweep_variable,eb_n0_db,c_e,mu,n,mode,flag\n";
    for (const auto& row : r.rows)
        out << fmt(row.sweep_variable) << ',' << fmt(row.eb_n0_db) << ',' << fmt(row.c_e) << ',' << fmt(row.mu)
            << ',' << row.n << ',' << row.mode << ',' << row.flag << '\n';
}

inline void write_summary_csv(const SweepResult& r, std::ostream& out)
{
    using detail::fmt;
    out << "n,mu,mode,regime,method,eb_n0_min_linear,eb_n0_min_db,s0,eb_n0_min_saturated,s0_saturated\n";
    for (const auto& s : r.summary)
        out << s.n << ',' << fmt(s.mu) << ',' << s.mode << ',' << to_string(s.metrics.regime) << ','
            << to_string(s.metrics.method) << ',' << fmt(s.metrics.eb_n0_min_linear) << ','
            << fmt(s.metrics.eb_n0_min_db) << ',' << fmt(s.metrics.s0) << ',' << int(s.metrics.eb_n0_min_saturated)
            << ',' << int(s.metrics.s0_saturated) << '\n';
}

inline void write_metadata(const SweepResult& r, std::ostream& out)
{
    for (const auto& [k, v] : r.metadata)
        out << k << " = " << v << '\n';
}

} // namespace irsee

#endif
