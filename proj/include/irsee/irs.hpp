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

#ifndef IRSEE_IRS_HPP
#define IRSEE_IRS_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "channel.hpp"

namespace irsee
{

struct ContinuousPhases
{
    bool operator==(const ContinuousPhases&) const = default;
};

struct DiscretePhases
{
    int bits = 1;
    bool operator==(const DiscretePhases&) const = default;
};

/// Continuous phase shifters or b-bit uniformly quantized ones.
using PhaseMode = std::variant<ContinuousPhases, DiscretePhases>;

inline bool is_discrete(const PhaseMode& mode) { return std::holds_alternative<DiscretePhases>(mode); }

inline void validate(const PhaseMode& mode)
{
    if (const auto* d = std::get_if<DiscretePhases>(&mode); d && d->bits < 1)
        throw std::domain_error("PhaseMode: discrete bit resolution must be >= 1");
}

// "continuous" or "discrete:<bits>"
inline std::string to_string(const PhaseMode& mode)
{
    if (const auto* d = std::get_if<DiscretePhases>(&mode))
        return "discrete:" + std::to_string(d->bits);
    return "continuous";
}

inline PhaseMode parse_phase_mode(const std::string& text)
{
    if (text == "continuous")
        return ContinuousPhases{};
    const std::string prefix = "discrete:";
    if (text.rfind(prefix, 0) == 0)
    {
        std::size_t used = 0;
        const std::string digits = text.substr(prefix.size());
        int bits = 0;
        try
        {
            bits = std::stoi(digits, &used);
        }
        catch (const std::exception&)
        {
            used = 0;
        }
        if (used == 0 || used != digits.size())
            throw std::invalid_argument("phase mode: bad bit count in '" + text + "'");
        PhaseMode mode = DiscretePhases{bits};
        validate(mode);
        return mode;
    }
    throw std::invalid_argument("phase mode: expected 'continuous' or 'discrete:<bits>', got '" + text + "'");
}

/// Composite power gain xi = |h_bar|^2 and its parts.
struct GainSample
{
    double xi = 0.0;             // |sqrt(l_f l_g) f^T Theta g + sqrt(l_h) h|^2
    double xi_d = 0.0;           // |h|
    double xi_r_effective = 0.0; // |sum_n f_n g_n e^{j theta_n}|
};

/// Wraps an angle to [0, 2pi).
inline double wrap_two_pi(double angle)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::fmod(angle, two_pi);
    if (r < 0.0)
        r += two_pi;
    if (r >= two_pi)
        r = 0.0;
    return r;
}

/// Wraps an angle to [-pi, pi).
inline double wrap_pi(double angle)
{
    constexpr double pi = std::numbers::pi;
    double r = wrap_two_pi(angle + pi) - pi;
    return r;
}

// Argument of a complex number with arg(0) := 0.
inline double safe_arg(std::complex<double> z) { return (z == std::complex<double>{}) ? 0.0 : std::arg(z); }

/// Per-element phases aligning every reflected path with the direct path:
/// theta_n = arg(h) - arg(f_n) - arg(g_n), wrapped to [0, 2pi).
inline std::vector<double> optimal_phases(const ChannelRealization& real)
{
    const double ref = safe_arg(real.h);
    std::vector<double> theta(real.size());
    for (std::size_t n = 0; n < theta.size(); ++n)
        theta[n] = wrap_two_pi(ref - safe_arg(real.f[n]) - safe_arg(real.g[n]));
    return theta;
}

/// Maps each phase to the nearest of the 2^b points {0, d, ..., (2^b-1) d},
/// d = 2pi/2^b, in circular distance. Exact midpoints go to the lower index.
inline std::vector<double> quantize_phases(std::span<const double> theta, int bits)
{
    if (bits < 1)
        throw std::domain_error("quantize_phases: bits must be >= 1");
    const double levels = std::ldexp(1.0, bits);
    const double step = 2.0 * std::numbers::pi / levels;
    std::vector<double> out(theta.size());
    for (std::size_t n = 0; n < theta.size(); ++n)
    {
        double k = std::ceil(wrap_two_pi(theta[n]) / step - 0.5);
        if (k >= levels)
            k -= levels;
        out[n] = k * step;
    }
    return out;
}

/// E{exp(j e)} for e uniform on [-pi/2^b, pi/2^b): (2^b/pi) sin(pi/2^b).
inline double quantization_loss_factor(int bits)
{
    if (bits < 1)
        throw std::domain_error("quantization_loss_factor: bits must be >= 1");
    const double levels = std::ldexp(1.0, bits);
    const double x = std::numbers::pi / levels;
    return std::sin(x) / x;
}

/// Exact complex accumulation of the received channel for a given phase vector.
inline GainSample composite_gain(const ChannelRealization& real, std::span<const double> phases,
                                 const LinkLosses& losses)
{
    if (phases.size() != real.size() || real.g.size() != real.f.size())
        throw std::invalid_argument("composite_gain: phase vector length must equal the number of elements");
    std::complex<double> reflected{0.0, 0.0};
    for (std::size_t n = 0; n < phases.size(); ++n)
        reflected += real.f[n] * std::polar(1.0, phases[n]) * real.g[n];
    const std::complex<double> total = std::sqrt(losses.cascade()) * reflected + std::sqrt(losses.direct) * real.h;
    return {std::norm(total), std::abs(real.h), std::abs(reflected)};
}

/// Gain under the given phase mode: optimal phases, quantized if discrete.
inline GainSample gain_for_mode(const ChannelRealization& real, const PhaseMode& mode, const LinkLosses& losses)
{
    auto theta = optimal_phases(real);
    if (const auto* d = std::get_if<DiscretePhases>(&mode))
        theta = quantize_phases(theta, d->bits);
    return composite_gain(real, theta, losses);
}

} // namespace irsee

#endif
