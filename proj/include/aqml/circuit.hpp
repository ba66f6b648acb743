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
 * @file circuit.hpp
 * Declarative variational circuits: an embedding followed by an ordered
 * list of layer templates, executed on the statevector simulator.
 */
#pragma once

#include <numbers>
#include <numeric>
#include <span>
#include <vector>

#include "aqml/embedding.hpp"
#include "aqml/layers.hpp"
#include "aqml/qsim.hpp"

namespace aqml {

struct CircuitSpec {
    int n_wires = 1;
    EmbeddingKind embedding;
    std::vector<LayerKind> layers;

    std::size_t param_count() const {
        std::size_t p = 0;
        for (const auto& l : layers) {
            p += l.params_per_layer(n_wires);
        }
        return p;
    }
};

/// Trainable gates of `spec` with Gate::params rebased to indices into the
/// flat weight vector. No device call.
inline std::vector<Gate> build_layer_gates(const CircuitSpec& spec, std::span<const double> weights) {
    if (weights.size() != spec.param_count()) {
        throw ShapeError("circuit takes " + std::to_string(spec.param_count()) + " weights, got " +
                         std::to_string(weights.size()));
    }
    std::vector<Gate> gates;
    std::size_t offset = 0;
    for (const auto& layer : spec.layers) {
        const std::size_t p = layer.params_per_layer(spec.n_wires);
        for (auto& g : build_layer(layer, spec.n_wires, weights.subspan(offset, p))) {
            for (auto& idx : g.params) {
                if (idx >= 0) idx += static_cast<int>(offset);
            }
            gates.push_back(std::move(g));
        }
        offset += p;
    }
    return gates;
}

/// Embeds `input`, applies every layer in order; one device call.
inline Statevector run_circuit(const CircuitSpec& spec, std::span<const double> weights, std::span<const double> input,
                               CallCounter& counter) {
    const auto gates = build_layer_gates(spec, weights);
    Statevector state = embed(spec.embedding, input, spec.n_wires);
    for (const auto& g : gates) {
        apply_gate_inplace(state, g);
    }
    counter.add(1);
    return state;
}

/// Throws ShapeError unless every weight feeds exactly one angle of a
/// single-qubit rotation, which is what makes the two-term shift rule exact.
inline void check_shiftable(const CircuitSpec& spec, std::span<const double> weights) {
    std::vector<int> uses(weights.size(), 0);
    for (const auto& g : build_layer_gates(spec, weights)) {
        for (int idx : g.params) {
            if (idx < 0) continue;
            if (static_cast<std::size_t>(idx) >= uses.size()) {
                throw ShapeError("layer references weight " + std::to_string(idx) + " beyond the weight vector");
            }
            switch (g.kind) {
                case GateKind::RX:
                case GateKind::RY:
                case GateKind::RZ:
                case GateKind::ROT: break;
                default:
                    throw ShapeError("weight " + std::to_string(idx) + " feeds non-shiftable gate " +
                                     std::string(to_string(g.kind)));
            }
            ++uses[static_cast<std::size_t>(idx)];
        }
    }
    for (std::size_t j = 0; j < uses.size(); ++j) {
        if (uses[j] != 1) {
            throw ShapeError("weight " + std::to_string(j) + " feeds " + std::to_string(uses[j]) +
                             " rotation angles; the shift rule needs exactly one");
        }
    }
}

/// d<Z_wire>/dw_j = [f(w_j + pi/2) - f(w_j - pi/2)] / 2 for every weight.
/// Costs exactly 2 * param_count device calls.
inline std::vector<double> parameter_shift_gradient(const CircuitSpec& spec, std::span<const double> weights,
                                                    std::span<const double> input, int wire, CallCounter& counter) {
    check_shiftable(spec, weights);
    if (wire < 0 || wire >= spec.n_wires) {
        throw ShapeError("measured wire out of range");
    }
    constexpr double shift = std::numbers::pi / 2;
    std::vector<double> w(weights.begin(), weights.end());
    std::vector<double> grad(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) {
        const double orig = w[j];
        w[j] = orig + shift;
        const double plus = expectation_z(run_circuit(spec, w, input, counter), wire);
        w[j] = orig - shift;
        const double minus = expectation_z(run_circuit(spec, w, input, counter), wire);
        w[j] = orig;
        grad[j] = 0.5 * (plus - minus);
    }
    return grad;
}

}  // namespace aqml
