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
#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "aqml/rng.hpp"

using aqml::Rng;

// Reference values produced by a standalone Python implementation of the
// same generator (splitmix64 seeding, xorshift64* output).
TEST(Rng, MatchesReferenceStream) {
    Rng a(0);
    EXPECT_EQ(a.next(), 0x7bbcb40d550682d0ULL);
    EXPECT_EQ(a.next(), 0xde7fe413d00cc9fdULL);
    EXPECT_EQ(a.next(), 0xb3c638353c668c91ULL);
    Rng b(7);
    EXPECT_EQ(b.next(), 0x14eaa7d1f828843aULL);
    EXPECT_EQ(b.next(), 0x421d9d8fff2d1844ULL);
    EXPECT_EQ(b.next(), 0x5aa548bbd8c601d5ULL);
}

TEST(Rng, DeriveSeedReference) {
    EXPECT_EQ(aqml::derive_seed(0, 1), 0x5e41ab087439611eULL);
    EXPECT_EQ(aqml::derive_seed(42, 3), 0x43aa8652ad94b3a2ULL);
}

TEST(Rng, UniformIntReference) {
    Rng r(123);
    std::vector<std::int64_t> got;
    for (int i = 0; i < 10; ++i) got.push_back(r.uniform_int(1, 6));
    EXPECT_EQ(got, (std::vector<std::int64_t>{6, 4, 5, 2, 2, 6, 5, 1, 5, 4}));
}

TEST(Rng, Uniform01InHalfOpenUnitInterval) {
    Rng r(99);
    for (int i = 0; i < 100000; ++i) {
        const double u = r.uniform01();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

TEST(Rng, UniformIntCoversClosedRange) {
    Rng r(3);
    std::vector<int> hits(5, 0);
    for (int i = 0; i < 5000; ++i) {
        const auto v = r.uniform_int(-2, 2);
        ASSERT_GE(v, -2);
        ASSERT_LE(v, 2);
        ++hits[static_cast<std::size_t>(v + 2)];
    }
    for (int h : hits) EXPECT_GT(h, 800);
    EXPECT_EQ(r.uniform_int(4, 4), 4);
    EXPECT_THROW(r.uniform_int(2, 1), std::invalid_argument);
    EXPECT_THROW(r.index(0), std::invalid_argument);
}

TEST(Rng, NormalMoments) {
    Rng r(11);
    double s = 0, s2 = 0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double x = r.normal();
        s += x;
        s2 += x * x;
    }
    EXPECT_NEAR(s / n, 0.0, 0.01);
    EXPECT_NEAR(s2 / n, 1.0, 0.02);
}

TEST(Rng, ShuffleIsPermutationAndSeeded) {
    std::vector<int> a(50), b(50);
    std::iota(a.begin(), a.end(), 0);
    b = a;
    Rng r1(5), r2(5);
    r1.shuffle(std::span<int>(a));
    r2.shuffle(std::span<int>(b));
    EXPECT_EQ(a, b);
    auto sorted = a;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 50; ++i) EXPECT_EQ(sorted[static_cast<std::size_t>(i)], i);
}

TEST(Rng, ZeroStateIsReplaced) {
    // splitmix64 never maps a seed to 0 in practice; the guard is still part
    // of the contract, so check the generator never sticks at zero.
    Rng r(0);
    for (int i = 0; i < 1000; ++i) ASSERT_NE(r.state(), 0u);
}
