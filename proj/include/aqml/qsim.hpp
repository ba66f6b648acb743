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
 * @file qsim.hpp
 * Minimal statevector simulator.
 *
 * Basis ordering is big-endian in wire index: wire 0 is the most significant
 * bit of the amplitude index, so on 2 wires the amplitudes are ordered
 * |00>, |01>, |10>, |11> with the left digit being wire 0.
 *
 * Rotations use the half-angle convention, e.g.
 * RY(t)|0> = cos(t/2)|0> + sin(t/2)|1>, and
 * ROT(phi, theta, omega) = RZ(omega) RY(theta) RZ(phi).
 */
#pragma once

#include <array>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aqml/errors.hpp"

namespace aqml {

using Complex = std::complex<double>;

inline constexpr int kMaxWires = 16;

class Statevector {
public:
    /// |0...0> on `n_wires` wires.
    explicit Statevector(int n_wires) : n_wires_(checked_wires(n_wires)), amps_(std::size_t{1} << n_wires_) {
        amps_[0] = 1.0;
    }

    /// Takes ownership of `amplitudes`; the length must be a power of two. The
    /// caller is responsible for normalization.
    static Statevector from_amplitudes(std::vector<Complex> amplitudes) {
        const std::size_t dim = amplitudes.size();
        if (dim < 2 || (dim & (dim - 1)) != 0) {
            throw ShapeError("statevector length must be a power of two >= 2, got " + std::to_string(dim));
        }
        int n = 0;
        while ((std::size_t{1} << n) < dim) {
            ++n;
        }
        Statevector s(n);
        s.amps_ = std::move(amplitudes);
        return s;
    }

    int n_wires() const noexcept { return n_wires_; }
    std::size_t dim() const noexcept { return amps_.size(); }

    std::span<const Complex> amplitudes() const noexcept { return amps_; }
    std::span<Complex> amplitudes() noexcept { return amps_; }
    const Complex& operator[](std::size_t i) const { return amps_[i]; }

    double norm_squared() const noexcept {
        double s = 0.0;
        for (const auto& a : amps_) {
            s += std::norm(a);
        }
        return s;
    }

private:
    static int checked_wires(int n) {
        if (n < 1 || n > kMaxWires) {
            throw ShapeError("wire count must be in [1, " + std::to_string(kMaxWires) + "], got " +
                             std::to_string(n));
        }
        return n;
    }

    int n_wires_;
    std::vector<Complex> amps_;
};

enum class GateKind { RX, RY, RZ, ROT, H, CNOT, PauliZ };

inline std::string_view to_string(GateKind k) noexcept {
    switch (k) {
        case GateKind::RX: return "RX";
        case GateKind::RY: return "RY";
        case GateKind::RZ: return "RZ";
        case GateKind::ROT: return "ROT";
        case GateKind::H: return "H";
        case GateKind::CNOT: return "CNOT";
        case GateKind::PauliZ: return "PauliZ";
    }
    return "?";
}

inline constexpr std::size_t angle_count(GateKind k) noexcept {
    switch (k) {
        case GateKind::RX:
        case GateKind::RY:
        case GateKind::RZ: return 1;
        case GateKind::ROT: return 3;
        default: return 0;
    }
}

inline constexpr std::size_t wire_count(GateKind k) noexcept { return k == GateKind::CNOT ? 2 : 1; }

/// A gate instance. `params[k]`, when present, names the trainable weight that
/// produced `angles[k]` (-1 for a fixed angle); layer templates fill it so that
/// gradient code can check the shift rule applies.
struct Gate {
    GateKind kind;
    std::vector<int> wires;
    std::vector<double> angles;
    std::vector<int> params;
};

inline Gate rx(int w, double t) { return {GateKind::RX, {w}, {t}, {}}; }
inline Gate ry(int w, double t) { return {GateKind::RY, {w}, {t}, {}}; }
inline Gate rz(int w, double t) { return {GateKind::RZ, {w}, {t}, {}}; }
inline Gate rot(int w, double phi, double theta, double omega) {
    return {GateKind::ROT, {w}, {phi, theta, omega}, {}};
}
inline Gate hadamard(int w) { return {GateKind::H, {w}, {}, {}}; }
inline Gate cnot(int control, int target) { return {GateKind::CNOT, {control, target}, {}, {}}; }
inline Gate pauli_z(int w) { return {GateKind::PauliZ, {w}, {}, {}}; }

using Matrix2 = std::array<Complex, 4>;  // row-major

namespace detail {

inline Matrix2 matmul(const Matrix2& a, const Matrix2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline std::size_t bit_of(int wire, int n_wires) { return std::size_t{1} << (n_wires - 1 - wire); }

inline void apply_single(std::span<Complex> amps, int n_wires, int wire, const Matrix2& m) {
    const std::size_t mask = bit_of(wire, n_wires);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & mask) {
            continue;
        }
        const Complex a0 = amps[i];
        const Complex a1 = amps[i | mask];
        amps[i] = m[0] * a0 + m[1] * a1;
        amps[i | mask] = m[2] * a0 + m[3] * a1;
    }
}

}  // namespace detail

inline Matrix2 rx_matrix(double t) {
    const double c = std::cos(t / 2), s = std::sin(t / 2);
    return {Complex{c, 0}, Complex{0, -s}, Complex{0, -s}, Complex{c, 0}};
}
inline Matrix2 ry_matrix(double t) {
    const double c = std::cos(t / 2), s = std::sin(t / 2);
    return {Complex{c, 0}, Complex{-s, 0}, Complex{s, 0}, Complex{c, 0}};
}
inline Matrix2 rz_matrix(double t) {
    return {std::polar(1.0, -t / 2), Complex{0, 0}, Complex{0, 0}, std::polar(1.0, t / 2)};
}
inline Matrix2 rot_matrix(double phi, double theta, double omega) {
    return detail::matmul(rz_matrix(omega), detail::matmul(ry_matrix(theta), rz_matrix(phi)));
}

/// Throws ShapeError unless `g` is well formed for a register of `n_wires`.
inline void validate_gate(const Gate& g, int n_wires) {
    if (g.wires.size() != wire_count(g.kind)) {
        throw ShapeError(std::string(to_string(g.kind)) + " expects " + std::to_string(wire_count(g.kind)) +
                         " wire(s), got " + std::to_string(g.wires.size()));
    }
    if (g.angles.size() != angle_count(g.kind)) {
        throw ShapeError(std::string(to_string(g.kind)) + " expects " + std::to_string(angle_count(g.kind)) +
                         " angle(s), got " + std::to_string(g.angles.size()));
    }
    if (!g.params.empty() && g.params.size() != g.angles.size()) {
        throw ShapeError("gate parameter map length differs from its angle count");
    }
    for (int w : g.wires) {
        if (w < 0 || w >= n_wires) {
            throw ShapeError("wire index " + std::to_string(w) + " out of range for " + std::to_string(n_wires) +
                             " wire(s)");
        }
    }
    if (g.wires.size() == 2 && g.wires[0] == g.wires[1]) {
        throw ShapeError("gate wires must be distinct");
    }
}

/// Applies `g` in place. Does not count as a device call.
inline void apply_gate_inplace(Statevector& state, const Gate& g) {
    validate_gate(g, state.n_wires());
    const int n = state.n_wires();
    auto amps = state.amplitudes();
    switch (g.kind) {
        case GateKind::RX: detail::apply_single(amps, n, g.wires[0], rx_matrix(g.angles[0])); break;
        case GateKind::RY: detail::apply_single(amps, n, g.wires[0], ry_matrix(g.angles[0])); break;
        case GateKind::RZ: detail::apply_single(amps, n, g.wires[0], rz_matrix(g.angles[0])); break;
        case GateKind::ROT:
            detail::apply_single(amps, n, g.wires[0], rot_matrix(g.angles[0], g.angles[1], g.angles[2]));
            break;
        case GateKind::H: {
            const double r = 1.0 / std::sqrt(2.0);
            detail::apply_single(amps, n, g.wires[0], {Complex{r, 0}, Complex{r, 0}, Complex{r, 0}, Complex{-r, 0}});
            break;
        }
        case GateKind::PauliZ: {
            const std::size_t mask = detail::bit_of(g.wires[0], n);
            for (std::size_t i = 0; i < amps.size(); ++i) {
                if (i & mask) {
                    amps[i] = -amps[i];
                }
            }
            break;
        }
        case GateKind::CNOT: {
            const std::size_t c = detail::bit_of(g.wires[0], n);
            const std::size_t t = detail::bit_of(g.wires[1], n);
            for (std::size_t i = 0; i < amps.size(); ++i) {
                if ((i & c) && !(i & t)) {
                    std::swap(amps[i], amps[i | t]);
                }
            }
            break;
        }
    }
}

inline Statevector apply_gate(Statevector state, const Gate& g) {
    apply_gate_inplace(state, g);
    return state;
}

/// <Z_wire> = sum over basis states of (+1 if bit clear, -1 if set) |amp|^2.
inline double expectation_z(const Statevector& state, int wire) {
    if (wire < 0 || wire >= state.n_wires()) {
        throw ShapeError("wire index " + std::to_string(wire) + " out of range");
    }
    const std::size_t mask = detail::bit_of(wire, state.n_wires());
    double e = 0.0;
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        e += (i & mask) ? -std::norm(amps[i]) : std::norm(amps[i]);
    }
    return e;
}

/// |<a|b>|^2
inline double fidelity(const Statevector& a, const Statevector& b) {
    if (a.n_wires() != b.n_wires()) {
        throw ShapeError("fidelity of states with " + std::to_string(a.n_wires()) + " and " +
                         std::to_string(b.n_wires()) + " wires");
    }
    Complex overlap{0, 0};
    const auto x = a.amplitudes();
    const auto y = b.amplitudes();
    for (std::size_t i = 0; i < x.size(); ++i) {
        overlap += std::conj(x[i]) * y[i];
    }
    return std::norm(overlap);
}

/// Monotone count of simulated device calls (one circuit execution each).
/// Safe for concurrent increments.
class CallCounter {
public:
    CallCounter() = default;
    CallCounter(const CallCounter&) = delete;
    CallCounter& operator=(const CallCounter&) = delete;

    void add(std::uint64_t n = 1) noexcept { total_.fetch_add(n, std::memory_order_relaxed); }
    std::uint64_t total() const noexcept { return total_.load(std::memory_order_relaxed); }

private:
    std::atomic<std::uint64_t> total_{0};
};

}  // namespace aqml
