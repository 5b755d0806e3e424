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

#ifndef IRSEE_PARALLEL_HPP
#define IRSEE_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <span>
#include <thread>
#include <vector>

namespace irsee
{

inline unsigned default_workers()
{
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1u : hw;
}

// Runs body(i) for i in [0, n) on up to `workers` threads using contiguous
// chunks. Bodies must only write to index-owned storage; the result is then
// independent of the worker count.
template <typename Body>
void parallel_for(std::size_t n, Body&& body, unsigned workers = default_workers())
{
    workers = std::max(1u, std::min<unsigned>(workers, unsigned(std::max<std::size_t>(n, 1))));
    if (workers == 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }

    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        const std::size_t chunk = (n + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w)
        {
            const std::size_t lo = w * chunk;
            const std::size_t hi = std::min(n, lo + chunk);
            if (lo >= hi)
                break;
            pool.emplace_back([&, lo, hi] {
                try
                {
                    for (std::size_t i = lo; i < hi; ++i)
                        body(i);
                }
                catch (...)
                {
                    std::scoped_lock lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                }
            });
        }
    }
    if (error)
        std::rethrow_exception(error);
}

// Pairwise (cascade) summation with a fixed split pattern: the result depends
// only on the values and their order, never on how they were produced.
inline double pairwise_sum(std::span<const double> x)
{
    constexpr std::size_t base = 64;
    if (x.size() <= base)
    {
        double s = 0.0;
        for (double v : x)
            s += v;
        return s;
    }
    const std::size_t half = x.size() / 2;
    return pairwise_sum(x.first(half)) + pairwise_sum(x.subspan(half));
}

// Pairwise sum of f(x[i]) without materializing the transformed array.
template <typename F>
double pairwise_sum(std::span<const double> x, F&& f)
{
    constexpr std::size_t base = 64;
    if (x.size() <= base)
    {
        double s = 0.0;
        for (double v : x)
            s += f(v);
        return s;
    }
    const std::size_t half = x.size() / 2;
    return pairwise_sum(x.first(half), f) + pairwise_sum(x.subspan(half), f);
}

} // namespace irsee

#endif
