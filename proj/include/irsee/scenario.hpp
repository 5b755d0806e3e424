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

#ifndef IRSEE_SCENARIO_HPP
#define IRSEE_SCENARIO_HPP

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "channel.hpp"
#include "effcap.hpp"
#include "irs.hpp"

namespace irsee
{

/// Bad or inconsistent scenario description (CLI exit code 2).
class ConfigError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Complete description of one experiment.
struct ScenarioConfig
{
    Geometry geometry;
    PathLossModel path_loss;
    FadingConfig fading;
    std::size_t n_elements = 100;
    PhaseMode phase_mode = ContinuousPhases{};
    QosConfig qos;
    std::optional<WidebandConfig> wideband;
    std::size_t samples = 100000;
    std::uint64_t seed = 1;

    LinkLosses losses() const { return link_losses(geometry, path_loss); }

    void validate() const
    {
        try
        {
            geometry.validate();
            path_loss.validate();
            fading.validate();
            irsee::validate(phase_mode);
            qos.validate();
            if (wideband)
                wideband->validate();
        }
        catch (const std::exception& e)
        {
            throw ConfigError(e.what());
        }
        if (samples < 1)
            throw ConfigError("ScenarioConfig: samples must be >= 1");
    }
};

/// Fixed simulation setup of the reference scenario with the realization count
/// used for figure parity (10^3).
inline ScenarioConfig paper_preset()
{
    ScenarioConfig cfg;
    cfg.geometry = {{0.0, 0.0}, {10.0, 0.0}, {5.0, 10.0}};
    cfg.path_loss = {-30.0, 3.6, 2.2, 2.2};
    cfg.fading = {1.0, 1.0, 2.0};
    cfg.n_elements = 100;
    cfg.qos = {0.1, 2e-3, 1e5};
    cfg.wideband = WidebandConfig{1e6, 5.0, 1e4, MultipathGrowth::sparse_case_i};
    cfg.samples = 1000;
    cfg.seed = 1;
    return cfg;
}

/// Same scenario with enough realizations for tolerance-gated comparisons.
inline ScenarioConfig precise_preset()
{
    ScenarioConfig cfg = paper_preset();
    cfg.samples = 100000;
    return cfg;
}

inline ScenarioConfig preset(const std::string& name)
{
    if (name == "paper")
        return paper_preset();
    if (name == "precise")
        return precise_preset();
    throw ConfigError("unknown preset '" + name + "' (expected 'paper' or 'precise')");
}

namespace detail
{
inline std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline double parse_double(const std::string& key, const std::string& v)
{
    std::size_t used = 0;
    double out = 0.0;
    try
    {
        out = std::stod(v, &used);
    }
    catch (const std::exception&)
    {
        used = 0;
    }
    if (used == 0 || used != v.size())
        throw ConfigError("config: '" + key + "' expects a number, got '" + v + "'");
    return out;
}

inline std::uint64_t parse_uint(const std::string& key, const std::string& v)
{
    // accept integral floating notation such as 1e5
    const double d = parse_double(key, v);
    if (d < 0.0 || d != std::floor(d) || d > 1.8e19)
        throw ConfigError("config: '" + key + "' expects a non-negative integer, got '" + v + "'");
    return static_cast<std::uint64_t>(d);
}

inline Point2 parse_point(const std::string& key, const std::string& v)
{
    const auto comma = v.find(',');
    if (comma == std::string::npos)
        throw ConfigError("config: '" + key + "' expects 'x,y', got '" + v + "'");
    return {parse_double(key, trim(v.substr(0, comma))), parse_double(key, trim(v.substr(comma + 1)))};
}

inline std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}
} // namespace detail

/// Parses `key = value` lines ('#' starts a comment). Keys mirror the
/// ScenarioConfig fields; any wideband key enables the wideband block.
inline ScenarioConfig parse_config(std::istream& in, ScenarioConfig cfg = precise_preset())
{
    std::string line;
    int lineno = 0;
    bool wideband_seen = false;
    WidebandConfig wb = cfg.wideband.value_or(WidebandConfig{});
    while (std::getline(in, line))
    {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = detail::trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string val = detail::trim(line.substr(eq + 1));
        using detail::parse_double;
        if (key == "tx_pos")
            cfg.geometry.tx_pos = detail::parse_point(key, val);
        else if (key == "rx_pos")
            cfg.geometry.rx_pos = detail::parse_point(key, val);
        else if (key == "irs_pos")
            cfg.geometry.irs_pos = detail::parse_point(key, val);
        else if (key == "l0_db")
            cfg.path_loss.l0_db = parse_double(key, val);
        else if (key == "exp_direct")
            cfg.path_loss.exp_direct = parse_double(key, val);
        else if (key == "exp_tx_irs")
            cfg.path_loss.exp_tx_irs = parse_double(key, val);
        else if (key == "exp_irs_rx")
            cfg.path_loss.exp_irs_rx = parse_double(key, val);
        else if (key == "m_g")
            cfg.fading.m_g = parse_double(key, val);
        else if (key == "m_f")
            cfg.fading.m_f = parse_double(key, val);
        else if (key == "m_h")
            cfg.fading.m_h = parse_double(key, val);
        else if (key == "n_elements")
            cfg.n_elements = detail::parse_uint(key, val);
        else if (key == "phase_mode")
        {
            try
            {
                cfg.phase_mode = parse_phase_mode(val);
            }
            catch (const std::exception& e)
            {
                throw ConfigError(std::string("config: ") + e.what());
            }
        }
        else if (key == "mu")
            cfg.qos.mu = parse_double(key, val);
        else if (key == "block_duration_t")
            cfg.qos.block_duration_t = parse_double(key, val);
        else if (key == "bandwidth_b")
            cfg.qos.bandwidth_b = parse_double(key, val);
        else if (key == "p_over_n0")
            wb.p_over_n0 = parse_double(key, val), wideband_seen = true;
        else if (key == "n_c")
            wb.n_c = parse_double(key, val), wideband_seen = true;
        else if (key == "b_c")
            wb.b_c = parse_double(key, val), wideband_seen = true;
        else if (key == "growth")
        {
            try
            {
                wb.growth = parse_growth(val);
            }
            catch (const std::exception& e)
            {
                throw ConfigError(std::string("config: ") + e.what());
            }
            wideband_seen = true;
        }
        else if (key == "samples")
            cfg.samples = detail::parse_uint(key, val);
        else if (key == "seed")
            cfg.seed = detail::parse_uint(key, val);
        else
            throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    if (wideband_seen || cfg.wideband)
        cfg.wideband = wb;
    cfg.validate();
    return cfg;
}

inline ScenarioConfig parse_config_text(const std::string& text, ScenarioConfig base = precise_preset())
{
    std::istringstream in(text);
    return parse_config(in, std::move(base));
}

inline ScenarioConfig load_config(const std::string& path, ScenarioConfig base = precise_preset())
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    return parse_config(in, std::move(base));
}

/// Writes the configuration in the same key/value format parse_config reads.
inline std::string write_config(const ScenarioConfig& cfg)
{
    using detail::fmt;
    std::ostringstream out;
    auto pt = [](Point2 p) { return fmt(p.x) + "," + fmt(p.y); };
    out << "tx_pos = " << pt(cfg.geometry.tx_pos) << "\n";
    out << "rx_pos = " << pt(cfg.geometry.rx_pos) << "\n";
    out << "irs_pos = " << pt(cfg.geometry.irs_pos) << "\n";
    out << "l0_db = " << fmt(cfg.path_loss.l0_db) << "\n";
    out << "exp_direct = " << fmt(cfg.path_loss.exp_direct) << "\n";
    out << "exp_tx_irs = " << fmt(cfg.path_loss.exp_tx_irs) << "\n";
    out << "exp_irs_rx = " << fmt(cfg.path_loss.exp_irs_rx) << "\n";
    out << "m_g = " << fmt(cfg.fading.m_g) << "\n";
    out << "m_f = " << fmt(cfg.fading.m_f) << "\n";
    out << "m_h = " << fmt(cfg.fading.m_h) << "\n";
    out << "n_elements = " << cfg.n_elements << "\n";
    out << "phase_mode = " << to_string(cfg.phase_mode) << "\n";
    out << "mu = " << fmt(cfg.qos.mu) << "\n";
    out << "block_duration_t = " << fmt(cfg.qos.block_duration_t) << "\n";
    out << "bandwidth_b = " << fmt(cfg.qos.bandwidth_b) << "\n";
    if (cfg.wideband)
    {
        out << "p_over_n0 = " << fmt(cfg.wideband->p_over_n0) << "\n";
        out << "n_c = " << fmt(cfg.wideband->n_c) << "\n";
        out << "b_c = " << fmt(cfg.wideband->b_c) << "\n";
        out << "growth = " << to_string(cfg.wideband->growth) << "\n";
    }
    out << "samples = " << cfg.samples << "\n";
    out << "seed = " << cfg.seed << "\n";
    return out.str();
}

} // namespace irsee

#endif
