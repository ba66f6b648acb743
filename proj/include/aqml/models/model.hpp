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
 * @file model.hpp
 * Uniform construction / fit / predict over the four model families.
 */
#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "aqml/budget.hpp"
#include "aqml/data.hpp"
#include "aqml/models/qek.hpp"
#include "aqml/models/qnn.hpp"
#include "aqml/models/rbm.hpp"
#include "aqml/registry.hpp"

namespace aqml {

using TrainedModel = std::variant<QNNClassifier, QEKClassifier, QNNRegressor, RBMClusterer>;

/// Everything needed to build an untrained model: the sampled architecture
/// and hyperparameters of one trial.
struct ConstructionOptions {
    std::string family;
    ModelKind kind = ModelKind::QNNClassifier;
    TaskType task = TaskType::Classification;
    int n_wires = 0;
    std::string embedding;
    std::vector<std::string> layers;
    Options extras = Options::object();
    std::size_t n_epochs = 10;
    double threshold = 0.8;
    OptimizerConfig optimizer{};
};

inline CircuitSpec make_circuit(const ConstructionOptions& o, const Registry& registry) {
    CircuitSpec c;
    c.n_wires = o.n_wires;
    c.embedding = registry.embedding(o.embedding);
    if (o.layers.empty()) {
        throw RegistryError("a variational model needs at least one layer");
    }
    for (const auto& name : o.layers) {
        c.layers.push_back(registry.layer(name));
    }
    return c;
}

/// Builds an untrained model; all random initial weights come from `seed`.
inline TrainedModel construct_model(const ConstructionOptions& o, const Registry& registry, std::size_t n_features,
                                    std::uint64_t seed) {
    switch (o.kind) {
        case ModelKind::QNNClassifier: {
            QNNClassifier m;
            m.circuit = make_circuit(o, registry);
            m.weights = initial_weights(m.circuit.param_count(), seed);
            m.batch_size = o.extras.value("batch_size", std::size_t{20});
            m.accuracy_threshold = o.threshold;
            m.n_epochs = o.n_epochs;
            m.optimizer = o.optimizer;
            return m;
        }
        case ModelKind::QNNRegressor: {
            QNNRegressor m;
            m.circuit = make_circuit(o, registry);
            m.weights = initial_weights(m.circuit.param_count(), seed);
            m.batch_size = o.extras.value("batch_size", std::size_t{20});
            m.r2_threshold = o.threshold;
            m.n_epochs = o.n_epochs;
            m.optimizer = o.optimizer;
            return m;
        }
        case ModelKind::QEKClassifier: {
            QEKClassifier m;
            m.circuit = make_circuit(o, registry);
            m.weights = initial_weights(m.circuit.param_count(), seed);
            m.ridge_lambda = o.extras.value("ridge_lambda", kDefaultRidgeLambda);
            return m;
        }
        case ModelKind::RBMClusterer: {
            RBMClusterer m;
            m.encoder_layers = o.extras.at("lbae_n_layers").get<int>();
            m.latent_size = o.extras.at("lbae_out_channels").get<int>();
            m.n_hidden = o.extras.at("rbm_n_hidden_neurons").get<int>();
            m.firing_threshold = o.extras.at("firing_threshold").get<double>();
            m.n_epochs = o.n_epochs;
            m.initialize(static_cast<int>(n_features), seed);
            return m;
        }
    }
    throw std::logic_error("unhandled model kind");
}

/// Trains `model` on `data` and returns its training score; device calls are
/// charged to `ledger`. Throws ScoreError when the score is undefined.
inline double fit_model(TrainedModel& model, const Dataset& data, std::uint64_t seed, BudgetLedger& ledger) {
    return std::visit(
        [&](auto& m) -> double {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, QEKClassifier>) {
                return m.fit(data.features, data.targets, ledger);
            } else if constexpr (std::is_same_v<M, RBMClusterer>) {
                m.fit(data.features, seed);
                return m.score(data.features).value;
            } else {
                return m.fit(data.features, data.targets, seed, ledger).final_score;
            }
        },
        model);
}

/// One output per row: class label, regression value, or cluster id.
inline std::vector<double> predict_model(const TrainedModel& model, const FeatureMatrix& x, CallCounter& counter) {
    return std::visit(
        [&](const auto& m) {
            using M = std::decay_t<decltype(m)>;
            std::vector<double> out;
            out.reserve(x.rows());
            if constexpr (std::is_same_v<M, QNNRegressor>) {
                out = m.predict_values(x, counter);
            } else if constexpr (std::is_same_v<M, RBMClusterer>) {
                for (auto id : m.assign_all(x)) out.push_back(static_cast<double>(id));
            } else {
                for (int l : m.predict_labels(x, counter)) out.push_back(l);
            }
            return out;
        },
        model);
}

struct ModelMetadata {
    int trial_id = -1;
    double mean_score = 0.0;
    std::uint64_t total_calls = 0;
    std::uint64_t base_seed = 0;
    bool feasible = false;
};

/// A trained model plus what is needed to rebuild, retrain and audit it.
struct ModelSpec {
    ConstructionOptions options;
    TrainedModel model;
    std::vector<std::string> feature_names;
    ModelMetadata metadata;
};

inline ModelKind kind_of(const TrainedModel& model) noexcept {
    switch (model.index()) {
        case 0: return ModelKind::QNNClassifier;
        case 1: return ModelKind::QEKClassifier;
        case 2: return ModelKind::QNNRegressor;
        default: return ModelKind::RBMClusterer;
    }
}

}  // namespace aqml
