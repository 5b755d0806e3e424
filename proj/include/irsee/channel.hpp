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

#ifndef IRSEE_CHANNEL_HPP
#define IRSEE_CHANNEL_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "rng.hpp"

namespace irsee
{

struct Point2
{
    double x = 0.0;
    double y = 0.0;
};

inline double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

/// Positions of transmitter, receiver and IRS in metres.
struct Geometry
{
    Point2 tx_pos{0.0, 0.0};
    Point2 rx_pos{10.0, 0.0};
    Point2 irs_pos{5.0, 10.0};

    double d_direct() const { return distance(tx_pos, rx_pos); }
    double d_tx_irs() const { return distance(tx_pos, irs_pos); }
    double d_irs_rx() const { return distance(irs_pos, rx_pos); }

    void validate() const
    {
        if (!(d_direct() > 0.0) || !(d_tx_irs() > 0.0) || !(d_irs_rx() > 0.0))
            throw std::domain_error("Geometry: pairwise distances must be strictly positive");
    }
};

enum class Link
{
    direct,
    tx_irs,
    irs_rx
};

/// Distance-dependent path loss l = L0 * d^(-exponent), L0 given in dB at 1 m.
struct PathLossModel
{
    double l0_db = -30.0;
    double exp_direct = 3.6;
    double exp_tx_irs = 2.2;
    double exp_irs_rx = 2.2;

    double exponent(Link link) const
    {
        switch (link)
        {
        case Link::direct:
            return exp_direct;
        case Link::tx_irs:
            return exp_tx_irs;
        case Link::irs_rx:
            return exp_irs_rx;
        }
        return exp_direct;
    }

    void validate() const
    {
        if (!std::isfinite(l0_db))
            throw std::domain_error("PathLossModel: l0_db must be finite");
        if (!(exp_direct > 0.0) || !(exp_tx_irs > 0.0) || !(exp_irs_rx > 0.0))
            throw std::domain_error("PathLossModel: exponents must be positive");
    }
};

/// Linear power gain of one link at the given distance.
inline double path_loss(const PathLossModel& model, double distance_m, Link link)
{
    if (!(distance_m > 0.0))
        throw std::domain_error("path_loss: distance must be positive");
    return std::pow(10.0, model.l0_db / 10.0) * std::pow(distance_m, -model.exponent(link));
}

/// Large-scale gains (l_h, l_f, l_g) of the direct, IRS-receiver and
/// transmitter-IRS links.
struct LinkLosses
{
    double direct = 0.0; // l_h
    double irs_rx = 0.0; // l_f
    double tx_irs = 0.0; // l_g

    double cascade() const { return irs_rx * tx_irs; }
};

inline LinkLosses link_losses(const Geometry& geometry, const PathLossModel& model)
{
    geometry.validate();
    model.validate();
    return {path_loss(model, geometry.d_direct(), Link::direct),
            path_loss(model, geometry.d_irs_rx(), Link::irs_rx),
            path_loss(model, geometry.d_tx_irs(), Link::tx_irs)};
}

/// Nakagami shape parameters; the spread is fixed to 1 on every link.
struct FadingConfig
{
    double m_g = 1.0; // transmitter-IRS
    double m_f = 1.0; // IRS-receiver
    double m_h = 2.0; // direct

    void validate() const
    {
        if (!(m_g >= 0.5) || !(m_f >= 0.5) || !(m_h >= 0.5))
            throw std::domain_error("FadingConfig: Nakagami shapes must be >= 0.5");
    }
};

/// One draw of the small-scale coefficients h, f (IRS-receiver), g (transmitter-IRS).
struct ChannelRealization
{
    std::complex<double> h;
    std::vector<std::complex<double>> f;
    std::vector<std::complex<double>> g;

    std::size_t size() const { return f.size(); }
};

// |X|^2 ~ Gamma(shape m, scale 1/m), so E{X^2} = 1.
template <typename Urbg>
double sample_nakagami_magnitude(double m, Urbg& rng)
{
    if (!(m >= 0.5))
        throw std::domain_error("sample_nakagami_magnitude: shape must be >= 0.5, got " + std::to_string(m));
    std::gamma_distribution<double> power(m, 1.0 / m);
    return std::sqrt(power(rng));
}

namespace detail
{
template <typename Urbg>
std::complex<double> nakagami_coefficient(double m, Urbg& rng)
{
    const double magnitude = sample_nakagami_magnitude(m, rng);
    const double phase = 2.0 * std::numbers::pi * std::generate_canonical<double, 53>(rng);
    return std::polar(magnitude, phase);
}
} // namespace detail

/// Draws (h, f, g) with independent Nakagami magnitudes and independent phases
/// uniform on [0, 2pi). Draw order is h, then (f_n, g_n) for n = 0..N-1.
template <typename Urbg>
ChannelRealization sample_channel(const FadingConfig& fading, std::size_t n_elements, Urbg& rng)
{
    fading.validate();
    ChannelRealization real;
    real.h = detail::nakagami_coefficient(fading.m_h, rng);
    real.f.resize(n_elements);
    real.g.resize(n_elements);
    for (std::size_t n = 0; n < n_elements; ++n)
    {
        real.f[n] = detail::nakagami_coefficient(fading.m_f, rng);
        real.g[n] = detail::nakagami_coefficient(fading.m_g, rng);
    }
    return real;
}

/// Realization `index` of the stream family identified by `seed`.
inline ChannelRealization sample_channel(const FadingConfig& fading, std::size_t n_elements, std::uint64_t seed,
                                         std::uint64_t index)
{
    PhiloxStream rng(seed, index);
    return sample_channel(fading, n_elements, rng);
}

} // namespace irsee

#endif
