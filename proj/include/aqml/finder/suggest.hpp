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
 * @file suggest.hpp
 * Turning a trial into construction options: model family, layer count,
 * embedding, ordered layer kinds and family-specific extras.
 */
#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "aqml/data.hpp"
#include "aqml/finder/trial.hpp"
#include "aqml/models/model.hpp"
#include "aqml/registry.hpp"

namespace aqml {

/// Draws `n_layers` layer kinds named layer_0 ... layer_{n-1}, in order.
inline std::vector<std::string> suggest_layers(Trial& trial, int n_layers, const Registry& registry) {
    if (n_layers < 1) {
        throw std::invalid_argument("n_layers must be at least 1");
    }
    if (registry.layers().empty()) {
        throw RegistryError("no layer kinds are registered");
    }
    std::vector<std::string> names;
    for (const auto& l : registry.layers()) names.push_back(l.name);
    std::vector<std::string> out;
    for (int i = 0; i < n_layers; ++i) {
        out.push_back(trial.suggest_categorical("layer_" + std::to_string(i), names));
    }
    return out;
}

/// Embeddings able to place `n_features` on `n_wires` wires, within the wire cap
/// once their own wire rule is applied.
inline std::vector<std::string> compatible_embeddings(const Registry& registry, std::size_t n_features, int n_wires) {
    std::vector<std::string> out;
    for (const auto& e : registry.embeddings()) {
        const int own = e.wires_for(n_features);
        if (e.accepts(n_features, n_wires) && own >= 1 && own <= kMaxWires && e.accepts(n_features, own)) {
            out.push_back(e.name);
        }
    }
    return out;
}

inline const EmbeddingKind& suggest_embedding(Trial& trial, const Registry& registry, std::size_t n_features,
                                              int n_wires) {
    if (registry.embeddings().empty()) {
        throw RegistryError("no embeddings are registered");
    }
    const auto names = compatible_embeddings(registry, n_features, n_wires);
    if (names.empty()) {
        throw DataError("no registered embedding fits " + std::to_string(n_features) + " features on " +
                        std::to_string(n_wires) + " wire(s)");
    }
    return registry.embedding(trial.suggest_categorical("embedding", names));
}

inline void suggest_extras(Trial& trial, const ModelFamilyConfig& family, Options& extras) {
    for (const auto& r : family.int_ranges) {
        extras[r.name] = trial.suggest_int(r.name, r.low, r.high);
    }
    for (const auto& r : family.float_ranges) {
        extras[r.name] = trial.suggest_float(r.name, r.low, r.high, r.log);
    }
    for (const auto& [k, v] : family.fixed_options.items()) {
        extras[k] = v;
    }
}

struct SearchSettings {
    std::size_t n_epochs = 10;
    double threshold = 0.8;
};

/// Samples n_layers, then the embedding, then each layer; wires start at the
/// feature count and are then set by the chosen embedding's wire rule.
inline ConstructionOptions suggest_supervised_kwargs(Trial& trial, const ModelFamilyConfig& family,
                                                     const Registry& registry, std::size_t n_features,
                                                     const SearchSettings& settings) {
    if (n_features == 0) {
        throw DataError("dataset has no feature columns");
    }
    ConstructionOptions o;
    o.family = family.name;
    o.kind = family.constructor;
    o.task = family.task;
    o.n_epochs = settings.n_epochs;
    o.threshold = settings.threshold;

    const int n_layers =
        static_cast<int>(trial.suggest_int("n_layers", family.n_layers.first, family.n_layers.second));
    const int wires = static_cast<int>(n_features);
    const EmbeddingKind& embedding = suggest_embedding(trial, registry, n_features, wires);
    o.embedding = embedding.name;
    o.n_wires = embedding.wires_for(n_features);
    o.layers = suggest_layers(trial, n_layers, registry);
    suggest_extras(trial, family, o.extras);
    return o;
}

/// Integer bounds [floor(sqrt(s)), ceil(0.75 s)] used for both the latent
/// width (s = input size) and the hidden width (s = latent width).
inline std::pair<std::int64_t, std::int64_t> shrink_bounds(std::int64_t size) {
    const auto low = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(size))));
    const auto high = static_cast<std::int64_t>(std::ceil(0.75 * static_cast<double>(size)));
    return {low, high};
}

inline ConstructionOptions suggest_unsupervised_kwargs(Trial& trial, const ModelFamilyConfig& family,
                                                       std::size_t input_size, const SearchSettings& settings) {
    if (input_size < 2) {
        throw DataError("clustering needs at least two input features");
    }
    ConstructionOptions o;
    o.family = family.name;
    o.kind = family.constructor;
    o.task = family.task;
    o.n_epochs = settings.n_epochs;
    o.threshold = settings.threshold;

    const auto s = static_cast<std::int64_t>(input_size);
    const auto [c_lo, c_hi] = shrink_bounds(s);
    const auto channels = trial.suggest_int("lbae_out_channels", c_lo, c_hi);
    const auto [h_lo, h_hi] = shrink_bounds(channels);
    const auto hidden = trial.suggest_int("rbm_n_hidden_neurons", h_lo, h_hi);

    o.extras["lbae_input_size"] = s;
    o.extras["lbae_out_channels"] = channels;
    o.extras["rbm_n_visible_neurons"] = channels;
    o.extras["rbm_n_hidden_neurons"] = hidden;
    suggest_extras(trial, family, o.extras);
    if (!o.extras.contains("lbae_n_layers")) {
        o.extras["lbae_n_layers"] = trial.suggest_int("lbae_n_layers", family.n_layers.first, family.n_layers.second);
    }
    if (!o.extras.contains("firing_threshold")) {
        o.extras["firing_threshold"] = trial.suggest_float("firing_threshold", 0.3, 0.7);
    }
    return o;
}

}  // namespace aqml
