// Copyright 2026 The aqml Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file rng.hpp
 * Portable seeded pseudorandom generation.
 *
 * Every random decision in the search and training code (sampling, batch
 * order, weight initialization) goes through Xorshift64Star so that a seed
 * reproduces the same stream on every platform and in every language that
 * implements the same constants. The standard library distributions are not
 * used because their algorithms are implementation-defined.
 *
 * Generator (Vigna, xorshift64*):
 *   x ^= x >> 12;  x ^= x << 25;  x ^= x >> 27;
 *   return x * 0x2545F4914F6CDD1D;
 * Seeding: state = splitmix64(seed), replaced by 0x9E3779B97F4A7C15 if zero.
 * uniform01: (next() >> 11) * 2^-53.
 * uniform_int(lo, hi): rejection sampling on next() % range, rejecting
 *   draws below (2^64 - range) % range.
 */
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>

namespace aqml {

/// One splitmix64 output step applied to `x`.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Derives an independent stream seed from a parent seed and a stream index.
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t stream) noexcept {
    return splitmix64(parent ^ splitmix64(stream));
}

class Xorshift64Star {
public:
    using result_type = std::uint64_t;

    explicit constexpr Xorshift64Star(std::uint64_t seed = 0) noexcept
        : state_(splitmix64(seed)) {
        if (state_ == 0) {
            state_ = 0x9E3779B97F4A7C15ULL;
        }
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    constexpr result_type next() noexcept {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }

    constexpr result_type operator()() noexcept { return next(); }

    /// Uniform in [0, 1).
    double uniform01() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in the closed range [lo, hi].
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        if (hi < lo) {
            throw std::invalid_argument("uniform_int: empty range");
        }
        const std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        if (range == 0) {  // full 64-bit span
            return static_cast<std::int64_t>(next());
        }
        const std::uint64_t threshold = (0 - range) % range;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) {
                return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + r % range);
            }
        }
    }

    /// Uniform index in [0, n).
    std::size_t index(std::size_t n) {
        if (n == 0) {
            throw std::invalid_argument("index: n must be positive");
        }
        return static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(n) - 1));
    }

    /// Standard normal via Box-Muller (one draw per call, the sine branch is discarded).
    double normal() noexcept {
        const double u1 = 1.0 - uniform01();  // (0, 1]
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Fisher-Yates shuffle from the back.
    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const std::size_t j = index(i);
            std::swap(items[i - 1], items[j]);
        }
    }

    constexpr std::uint64_t state() const noexcept { return state_; }

private:
    std::uint64_t state_;
};

using Rng = Xorshift64Star;

}  // namespace aqml
