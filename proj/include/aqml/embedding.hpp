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
 * @file embedding.hpp
 * Data embeddings: maps from a classical feature vector to an initial state.
 *
 * Two embeddings ship by default:
 *  - ANGLE: RX(x_i) on wire i; wires beyond the feature count get RX(0).
 *  - AMPLITUDE: amplitudes proportional to x padded with `pad_with`, then
 *    normalized when `normalize` is set. Prepared by direct amplitude
 *    initialization rather than a gate decomposition.
 */
#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "aqml/errors.hpp"
#include "aqml/qsim.hpp"

namespace aqml {

using Options = nlohmann::ordered_json;

struct EmbeddingKind {
    std::string name;
    Options fixed_options = Options::object();
    /// Wire count the search uses for a given feature count.
    std::function<int(std::size_t n_features)> wires_for;
    /// Whether `n_features` can be embedded on `n_wires`.
    std::function<bool(std::size_t n_features, int n_wires)> accepts;
    std::function<Statevector(std::span<const double> x, int n_wires, const Options& options)> prepare;
};

/// Smallest n >= 1 with 2^n >= max(n_features, 2).
inline int amplitude_wires(std::size_t n_features) {
    int n = 1;
    while ((std::size_t{1} << n) < std::max<std::size_t>(n_features, 2)) {
        ++n;
    }
    return n;
}

/// One RX per wire; angles past the end of `x` are zero.
inline std::vector<Gate> angle_embedding_gates(std::span<const double> x, int n_wires) {
    if (x.size() > static_cast<std::size_t>(n_wires)) {
        throw ShapeError("ANGLE embedding of " + std::to_string(x.size()) + " features needs at least as many wires, got " +
                         std::to_string(n_wires));
    }
    std::vector<Gate> gates;
    gates.reserve(static_cast<std::size_t>(n_wires));
    for (int i = 0; i < n_wires; ++i) {
        gates.push_back(rx(i, static_cast<std::size_t>(i) < x.size() ? x[static_cast<std::size_t>(i)] : 0.0));
    }
    return gates;
}

inline EmbeddingKind angle_embedding() {
    EmbeddingKind k;
    k.name = "ANGLE";
    k.wires_for = [](std::size_t f) { return static_cast<int>(std::max<std::size_t>(f, 1)); };
    k.accepts = [](std::size_t f, int n) { return f <= static_cast<std::size_t>(n); };
    k.prepare = [](std::span<const double> x, int n, const Options&) {
        Statevector s(n);
        for (const auto& g : angle_embedding_gates(x, n)) {
            apply_gate_inplace(s, g);
        }
        return s;
    };
    return k;
}

inline EmbeddingKind amplitude_embedding() {
    EmbeddingKind k;
    k.name = "AMPLITUDE";
    k.fixed_options = {{"pad_with", 0}, {"normalize", true}};
    k.wires_for = [](std::size_t f) { return amplitude_wires(f); };
    k.accepts = [](std::size_t f, int n) { return n <= kMaxWires && f <= (std::size_t{1} << n); };
    k.prepare = [](std::span<const double> x, int n, const Options& opts) {
        const std::size_t dim = std::size_t{1} << n;
        if (x.size() > dim) {
            throw ShapeError("AMPLITUDE embedding of " + std::to_string(x.size()) + " features needs at least " +
                             std::to_string(amplitude_wires(x.size())) + " wires, got " + std::to_string(n));
        }
        const double pad = opts.value("pad_with", 0.0);
        const bool normalize = opts.value("normalize", true);
        std::vector<Complex> amps(dim, Complex{pad, 0.0});
        for (std::size_t i = 0; i < x.size(); ++i) {
            amps[i] = x[i];
        }
        double sq = 0.0;
        for (const auto& a : amps) {
            sq += std::norm(a);
        }
        if (!(sq > 0.0) || !std::isfinite(sq)) {
            throw DataError("AMPLITUDE embedding of a zero or non-finite vector is undefined");
        }
        if (normalize) {
            const double inv = 1.0 / std::sqrt(sq);
            for (auto& a : amps) {
                a *= inv;
            }
        } else if (std::abs(sq - 1.0) > 1e-10) {
            throw DataError("AMPLITUDE embedding without normalization requires a unit vector");
        }
        return Statevector::from_amplitudes(std::move(amps));
    };
    return k;
}

/// Prepares the embedded state of `x` on `n_wires` wires.
inline Statevector embed(const EmbeddingKind& kind, std::span<const double> x, int n_wires) {
    if (!kind.accepts(x.size(), n_wires)) {
        throw ShapeError(kind.name + " embedding cannot place " + std::to_string(x.size()) + " features on " +
                         std::to_string(n_wires) + " wire(s)");
    }
    return kind.prepare(x, n_wires, kind.fixed_options);
}

}  // namespace aqml
