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

#include <cmath>
#include <numbers>

#include "aqml/qsim.hpp"
#include "aqml/rng.hpp"
#include "oracle.hpp"

using namespace aqml;

namespace {

oracle::Mat dense(const Gate& g, int n) {
    switch (g.kind) {
        case GateKind::RX: return oracle::on_wire(oracle::RX(g.angles[0]), g.wires[0], n);
        case GateKind::RY: return oracle::on_wire(oracle::RY(g.angles[0]), g.wires[0], n);
        case GateKind::RZ: return oracle::on_wire(oracle::RZ(g.angles[0]), g.wires[0], n);
        case GateKind::ROT:
            return oracle::on_wire(oracle::RZ(g.angles[2]) * oracle::RY(g.angles[1]) * oracle::RZ(g.angles[0]),
                                   g.wires[0], n);
        case GateKind::H: return oracle::on_wire(oracle::H(), g.wires[0], n);
        case GateKind::PauliZ: {
            oracle::Mat z(2, 2);
            z << 1, 0, 0, -1;
            return oracle::on_wire(z, g.wires[0], n);
        }
        case GateKind::CNOT: return oracle::cnot(g.wires[0], g.wires[1], n);
    }
    return {};
}

Gate random_gate(Rng& r, int n) {
    const int kind = static_cast<int>(r.uniform_int(0, n > 1 ? 6 : 5));
    const int w = static_cast<int>(r.index(static_cast<std::size_t>(n)));
    const double a = r.uniform(-2 * std::numbers::pi, 2 * std::numbers::pi);
    switch (kind) {
        case 0: return rx(w, a);
        case 1: return ry(w, a);
        case 2: return rz(w, a);
        case 3: return rot(w, a, r.uniform(-3, 3), r.uniform(-3, 3));
        case 4: return hadamard(w);
        case 5: return pauli_z(w);
        default: {
            int t = static_cast<int>(r.index(static_cast<std::size_t>(n - 1)));
            if (t >= w) ++t;
            return cnot(w, t);
        }
    }
}

}  // namespace

TEST(Statevector, StartsInZeroState) {
    Statevector s(3);
    EXPECT_EQ(s.dim(), 8u);
    EXPECT_EQ(s[0], Complex(1, 0));
    for (std::size_t i = 1; i < 8; ++i) EXPECT_EQ(s[i], Complex(0, 0));
    EXPECT_THROW(Statevector(0), ShapeError);
    EXPECT_THROW(Statevector(17), ShapeError);
    EXPECT_THROW(Statevector::from_amplitudes(std::vector<Complex>(3)), ShapeError);
}

TEST(Statevector, BigEndianWireOrder) {
    // X on wire 0 of 2 wires via RX(pi) flips the most significant bit: |10>.
    auto s = apply_gate(Statevector(2), rx(0, std::numbers::pi));
    EXPECT_NEAR(std::abs(s[2]), 1.0, 1e-12);
    auto t = apply_gate(Statevector(2), rx(1, std::numbers::pi));
    EXPECT_NEAR(std::abs(t[1]), 1.0, 1e-12);
}

TEST(Statevector, RyExpectationIsCosine) {
    for (int i = 0; i < 100; ++i) {
        const double theta = -std::numbers::pi + 2 * std::numbers::pi * i / 99.0;
        EXPECT_NEAR(expectation_z(apply_gate(Statevector(1), ry(0, theta)), 0), std::cos(theta), 1e-10);
    }
}

TEST(Statevector, BellState) {
    auto s = apply_gate(apply_gate(Statevector(2), hadamard(0)), cnot(0, 1));
    const double r = 1 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(s[0] - Complex(r, 0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(s[1]), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(s[2]), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(s[3] - Complex(r, 0)), 0.0, 1e-12);
}

TEST(Statevector, MatchesDenseKroneckerOracle) {
    Rng r(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(r.index(4));
        Statevector s(n);
        oracle::Vec v = oracle::zero_state(n);
        for (int k = 0; k < 12; ++k) {
            const Gate g = random_gate(r, n);
            apply_gate_inplace(s, g);
            v = dense(g, n) * v;
        }
        for (std::size_t i = 0; i < s.dim(); ++i)
            ASSERT_NEAR(std::abs(s[i] - v(static_cast<Eigen::Index>(i))), 0.0, 1e-12) << "trial " << trial;
        for (int w = 0; w < n; ++w) ASSERT_NEAR(expectation_z(s, w), oracle::expect_z(v, w, n), 1e-12);
    }
}

TEST(Statevector, NormPreservedOnRandomCircuits) {
    Rng r(1);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(r.index(4));
        Statevector s(n);
        const int depth = 1 + static_cast<int>(r.index(30));
        for (int k = 0; k < depth; ++k) apply_gate_inplace(s, random_gate(r, n));
        ASSERT_NEAR(s.norm_squared(), 1.0, 1e-10);
    }
}

TEST(Statevector, RotIsZyzProduct) {
    auto a = apply_gate(Statevector(1), rot(0, 0.3, 1.1, -0.7));
    auto b = apply_gate(apply_gate(apply_gate(Statevector(1), rz(0, 0.3)), ry(0, 1.1)), rz(0, -0.7));
    EXPECT_NEAR(std::abs(a[0] - b[0]) + std::abs(a[1] - b[1]), 0.0, 1e-14);
}

TEST(Statevector, FidelityBounds) {
    Rng r(8);
    for (int t = 0; t < 100; ++t) {
        Statevector a(3), b(3);
        for (int k = 0; k < 10; ++k) {
            apply_gate_inplace(a, random_gate(r, 3));
            apply_gate_inplace(b, random_gate(r, 3));
        }
        const double f = fidelity(a, b);
        EXPECT_GE(f, -1e-12);
        EXPECT_LE(f, 1 + 1e-12);
        EXPECT_NEAR(fidelity(a, a), 1.0, 1e-12);
        EXPECT_NEAR(f, fidelity(b, a), 1e-12);
    }
    EXPECT_THROW(fidelity(Statevector(1), Statevector(2)), ShapeError);
}

TEST(Statevector, GateValidation) {
    Statevector s(2);
    EXPECT_THROW(apply_gate_inplace(s, rx(2, 0.1)), ShapeError);
    EXPECT_THROW(apply_gate_inplace(s, cnot(1, 1)), ShapeError);
    EXPECT_THROW(apply_gate_inplace(s, Gate{GateKind::RX, {0}, {}, {}}), ShapeError);
    EXPECT_THROW(expectation_z(s, -1), ShapeError);
}

TEST(CallCounter, CountsAdds) {
    CallCounter c;
    EXPECT_EQ(c.total(), 0u);
    c.add(3);
    c.add(1);
    EXPECT_EQ(c.total(), 4u);
}
