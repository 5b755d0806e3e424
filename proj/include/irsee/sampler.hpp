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

#ifndef IRSEE_SAMPLER_HPP
#define IRSEE_SAMPLER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "channel.hpp"
#include "irs.hpp"
#include "parallel.hpp"

namespace irsee
{

/// Monte-Carlo gain draws on common random numbers: realization i feeds every
/// phase mode and the direct-only baseline.
struct GainTable
{
    std::vector<PhaseMode> modes;
    std::vector<std::vector<double>> by_mode; // xi per mode, [mode][realization]
    std::vector<double> baseline;             // l_h |h|^2
    std::vector<double> xi_d;                 // |h|
    std::vector<double> xi_r;                 // sum_n |f_n||g_n|

    const std::vector<double>& gains(std::size_t mode_index = 0) const { return by_mode.at(mode_index); }
};

/// Draws `samples` realizations; realization i uses stream (seed, i).
inline GainTable draw_gains(const LinkLosses& losses, const FadingConfig& fading, std::size_t n_elements,
                            std::span<const PhaseMode> modes, std::size_t samples, std::uint64_t seed,
                            unsigned workers = default_workers())
{
    fading.validate();
    for (const auto& m : modes)
        validate(m);

    GainTable t;
    t.modes.assign(modes.begin(), modes.end());
    t.by_mode.assign(modes.size(), std::vector<double>(samples));
    t.baseline.resize(samples);
    t.xi_d.resize(samples);
    t.xi_r.resize(samples);

    const double sqrt_lh = std::sqrt(losses.direct);
    parallel_for(
        samples,
        [&](std::size_t i) {
            const ChannelRealization real = sample_channel(fading, n_elements, seed, i);
            const std::vector<double> theta = optimal_phases(real);
            for (std::size_t k = 0; k < t.modes.size(); ++k)
            {
                if (const auto* d = std::get_if<DiscretePhases>(&t.modes[k]))
                    t.by_mode[k][i] = composite_gain(real, quantize_phases(theta, d->bits), losses).xi;
                else
                    t.by_mode[k][i] = composite_gain(real, theta, losses).xi;
            }
            // same expression composite_gain uses for N = 0
            t.baseline[i] = std::norm(sqrt_lh * real.h);
            t.xi_d[i] = std::abs(real.h);
            double r = 0.0;
            for (std::size_t n = 0; n < real.size(); ++n)
                r += std::abs(real.f[n]) * std::abs(real.g[n]);
            t.xi_r[i] = r;
        },
        workers);
    return t;
}

inline GainTable draw_gains(const LinkLosses& losses, const FadingConfig& fading, std::size_t n_elements,
                            const PhaseMode& mode, std::size_t samples, std::uint64_t seed,
                            unsigned workers = default_workers())
{
    const PhaseMode modes[] = {mode};
    return draw_gains(losses, fading, n_elements, modes, samples, seed, workers);
}

} // namespace irsee

#endif
