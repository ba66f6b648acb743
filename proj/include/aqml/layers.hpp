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
 * @file layers.hpp
 * Trainable layer templates.
 *
 * BasicEntangler: RX(w_i) on every wire, then a CNOT ring i -> (i+1) mod n.
 * StronglyEntangling: ROT(w_3i, w_3i+1, w_3i+2) on every wire, then the same ring.
 * The ring is empty on a single wire.
 */
#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "aqml/errors.hpp"
#include "aqml/qsim.hpp"

namespace aqml {

struct LayerKind {
    std::string name;
    std::function<std::size_t(int n_wires)> params_per_layer;
    /// Gates for one layer; trainable angles carry their index into `w` in Gate::params.
    std::function<std::vector<Gate>(int n_wires, std::span<const double> w)> build;
};

inline void append_cnot_ring(std::vector<Gate>& gates, int n_wires) {
    if (n_wires < 2) {
        return;
    }
    for (int i = 0; i < n_wires; ++i) {
        gates.push_back(cnot(i, (i + 1) % n_wires));
    }
}

inline LayerKind basic_entangler_layer() {
    return {"BasicEntangler", [](int n) { return static_cast<std::size_t>(n); },
            [](int n, std::span<const double> w) {
                std::vector<Gate> gates;
                for (int i = 0; i < n; ++i) {
                    Gate g = rx(i, w[static_cast<std::size_t>(i)]);
                    g.params = {i};
                    gates.push_back(std::move(g));
                }
                append_cnot_ring(gates, n);
                return gates;
            }};
}

inline LayerKind strongly_entangling_layer() {
    return {"StronglyEntangling", [](int n) { return 3 * static_cast<std::size_t>(n); },
            [](int n, std::span<const double> w) {
                std::vector<Gate> gates;
                for (int i = 0; i < n; ++i) {
                    const auto b = static_cast<std::size_t>(3 * i);
                    Gate g = rot(i, w[b], w[b + 1], w[b + 2]);
                    g.params = {3 * i, 3 * i + 1, 3 * i + 2};
                    gates.push_back(std::move(g));
                }
                append_cnot_ring(gates, n);
                return gates;
            }};
}

inline std::vector<Gate> build_layer(const LayerKind& kind, int n_wires, std::span<const double> layer_weights) {
    const std::size_t expected = kind.params_per_layer(n_wires);
    if (layer_weights.size() != expected) {
        throw ShapeError(kind.name + " on " + std::to_string(n_wires) + " wire(s) takes " + std::to_string(expected) +
                         " weights, got " + std::to_string(layer_weights.size()));
    }
    return kind.build(n_wires, layer_weights);
}

}  // namespace aqml
