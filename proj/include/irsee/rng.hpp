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

#ifndef IRSEE_RNG_HPP
#define IRSEE_RNG_HPP

#include <array>
#include <cstdint>
#include <limits>

namespace irsee
{

// Philox4x32-10 block function (Salmon et al., SC'11).
// Pure function of (counter, key); no state.
inline std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr, std::array<std::uint32_t, 2> key)
{
    constexpr std::uint32_t M0 = 0xD2511F53u;
    constexpr std::uint32_t M1 = 0xCD9E8D57u;
    constexpr std::uint32_t W0 = 0x9E3779B9u;
    constexpr std::uint32_t W1 = 0xBB67AE85u;

    for (int round = 0; round < 10; ++round)
    {
        if (round > 0)
        {
            key[0] += W0;
            key[1] += W1;
        }
        const std::uint64_t p0 = std::uint64_t(M0) * ctr[0];
        const std::uint64_t p1 = std::uint64_t(M1) * ctr[2];
        ctr = {std::uint32_t(p1 >> 32) ^ ctr[1] ^ key[0], std::uint32_t(p1),
               std::uint32_t(p0 >> 32) ^ ctr[3] ^ key[1], std::uint32_t(p0)};
    }
    return ctr;
}

// SplitMix64 finalizer, used to derive independent seeds for separate purposes
// (e.g. the validation suite vs. the sweep) from one user seed.
constexpr std::uint64_t mix_seed(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Counter-based random stream.
///
/// A stream is addressed by (seed, stream index). Draw j of stream s is a pure
/// function of (seed, s, j), so any partition of stream indices across worker
/// threads produces the same numbers. Satisfies UniformRandomBitGenerator and
/// can therefore drive the <random> distributions.
class PhiloxStream
{
  public:
    using result_type = std::uint64_t;

    PhiloxStream(std::uint64_t seed, std::uint64_t stream)
        : key_{std::uint32_t(seed), std::uint32_t(seed >> 32)}, stream_(stream)
    {
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()()
    {
        if (pos_ == 2)
            refill();
        return buffer_[pos_++];
    }

    /// Uniform double on [0, 1) built from the top 53 bits of one draw.
    double uniform() { return double((*this)() >> 11) * 0x1.0p-53; }

    std::uint64_t blocks_consumed() const { return block_; }

  private:
    void refill()
    {
        const std::array<std::uint32_t, 4> ctr{std::uint32_t(block_), std::uint32_t(block_ >> 32),
                                               std::uint32_t(stream_), std::uint32_t(stream_ >> 32)};
        const auto out = philox4x32(ctr, key_);
        buffer_[0] = (std::uint64_t(out[0]) << 32) | out[1];
        buffer_[1] = (std::uint64_t(out[2]) << 32) | out[3];
        ++block_;
        pos_ = 0;
    }

    std::array<std::uint32_t, 2> key_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    std::array<std::uint64_t, 2> buffer_{};
    int pos_ = 2;
};

} // namespace irsee

#endif
