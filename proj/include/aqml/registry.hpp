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
 * @file registry.hpp
 * Name-keyed tables of embeddings, layer templates and model families.
 *
 * The search samples categorically over these tables in insertion order, so
 * registering an entry widens the search space without touching search code.
 * A registry is built before a study and only read afterwards.
 */
#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aqml/embedding.hpp"
#include "aqml/errors.hpp"
#include "aqml/layers.hpp"

namespace aqml {

enum class TaskType { Classification, Regression, Clustering };

inline std::string_view to_string(TaskType t) noexcept {
    switch (t) {
        case TaskType::Classification: return "classification";
        case TaskType::Regression: return "regression";
        case TaskType::Clustering: return "clustering";
    }
    return "?";
}

inline TaskType parse_task(std::string_view s) {
    if (s == "classification") return TaskType::Classification;
    if (s == "regression") return TaskType::Regression;
    if (s == "clustering") return TaskType::Clustering;
    throw std::invalid_argument("unknown task '" + std::string(s) + "'");
}

/// Which model implementation a family constructs.
enum class ModelKind { QNNClassifier, QEKClassifier, QNNRegressor, RBMClusterer };

inline std::string_view to_string(ModelKind k) noexcept {
    switch (k) {
        case ModelKind::QNNClassifier: return "QNNBinaryClassifier";
        case ModelKind::QEKClassifier: return "QuantumKernelBinaryClassifier";
        case ModelKind::QNNRegressor: return "QNNLinearRegression";
        case ModelKind::RBMClusterer: return "RBMClustering";
    }
    return "?";
}

inline ModelKind parse_model_kind(std::string_view s) {
    for (auto k : {ModelKind::QNNClassifier, ModelKind::QEKClassifier, ModelKind::QNNRegressor,
                   ModelKind::RBMClusterer}) {
        if (to_string(k) == s) {
            return k;
        }
    }
    throw std::invalid_argument("unknown model constructor '" + std::string(s) + "'");
}

inline bool is_gradient_trained(ModelKind k) noexcept {
    return k == ModelKind::QNNClassifier || k == ModelKind::QNNRegressor;
}

struct IntRange {
    std::string name;
    std::int64_t low;
    std::int64_t high;
};

struct FloatRange {
    std::string name;
    double low;
    double high;
    bool log = false;
};

struct ModelFamilyConfig {
    std::string name;
    TaskType task;
    ModelKind constructor;
    std::vector<IntRange> int_ranges;
    std::vector<FloatRange> float_ranges;
    Options fixed_options = Options::object();
    std::pair<int, int> n_layers{1, 1};
};

class Registry {
public:
    Registry& register_embedding(EmbeddingKind e) {
        require_unique(embeddings_, e.name, "embedding");
        if (!e.wires_for || !e.accepts || !e.prepare) {
            throw RegistryError("embedding '" + e.name + "' is missing a callable");
        }
        embeddings_.push_back(std::move(e));
        return *this;
    }

    Registry& register_layer(LayerKind l) {
        require_unique(layers_, l.name, "layer");
        if (!l.params_per_layer || !l.build) {
            throw RegistryError("layer '" + l.name + "' is missing a callable");
        }
        layers_.push_back(std::move(l));
        return *this;
    }

    Registry& register_model(ModelFamilyConfig m) {
        require_unique(models_, m.name, "model");
        if (m.fixed_options.is_null()) {
            m.fixed_options = Options::object();
        }
        if (m.n_layers.first < 1 || m.n_layers.second < m.n_layers.first) {
            throw RegistryError("model '" + m.name + "' has invalid n_layers bounds");
        }
        for (const auto& r : m.int_ranges) {
            if (r.high < r.low) throw RegistryError("model '" + m.name + "': empty range " + r.name);
        }
        for (const auto& r : m.float_ranges) {
            if (!(r.high >= r.low) || (r.log && r.low <= 0.0)) {
                throw RegistryError("model '" + m.name + "': invalid range " + r.name);
            }
        }
        models_.push_back(std::move(m));
        return *this;
    }

    const std::vector<EmbeddingKind>& embeddings() const noexcept { return embeddings_; }
    const std::vector<LayerKind>& layers() const noexcept { return layers_; }
    const std::vector<ModelFamilyConfig>& models() const noexcept { return models_; }

    const EmbeddingKind& embedding(std::string_view name) const { return find(embeddings_, name, "embedding"); }
    const LayerKind& layer(std::string_view name) const { return find(layers_, name, "layer"); }
    const ModelFamilyConfig& model(std::string_view name) const { return find(models_, name, "model"); }

    std::vector<const ModelFamilyConfig*> models_for(TaskType task) const {
        std::vector<const ModelFamilyConfig*> out;
        for (const auto& m : models_) {
            if (m.task == task) out.push_back(&m);
        }
        return out;
    }

private:
    template <typename T>
    static void require_unique(const std::vector<T>& table, const std::string& name, const char* what) {
        if (name.empty()) {
            throw RegistryError(std::string(what) + " name must not be empty");
        }
        if (std::any_of(table.begin(), table.end(), [&](const T& e) { return e.name == name; })) {
            throw RegistryError("duplicate " + std::string(what) + " name '" + name + "'");
        }
    }

    template <typename T>
    static const T& find(const std::vector<T>& table, std::string_view name, const char* what) {
        for (const auto& e : table) {
            if (e.name == name) return e;
        }
        throw RegistryError("unregistered " + std::string(what) + " '" + std::string(name) + "'");
    }

    std::vector<EmbeddingKind> embeddings_;
    std::vector<LayerKind> layers_;
    std::vector<ModelFamilyConfig> models_;
};

inline constexpr double kDefaultRidgeLambda = 1e-3;

/// The out-of-the-box search space.
inline Registry default_registry() {
    Registry r;
    r.register_embedding(angle_embedding()).register_embedding(amplitude_embedding());
    r.register_layer(basic_entangler_layer()).register_layer(strongly_entangling_layer());

    r.register_model({"QNN", TaskType::Classification, ModelKind::QNNClassifier, {{"batch_size", 15, 25}}, {}, {}, {1, 3}});
    r.register_model({"QEK", TaskType::Classification, ModelKind::QEKClassifier, {}, {},
                      {{"ridge_lambda", kDefaultRidgeLambda}}, {3, 5}});
    r.register_model({"QNNRegressor", TaskType::Regression, ModelKind::QNNRegressor, {{"batch_size", 15, 25}}, {}, {},
                      {1, 3}});
    r.register_model({"RBM", TaskType::Clustering, ModelKind::RBMClusterer, {{"lbae_n_layers", 1, 3}},
                      {{"firing_threshold", 0.3, 0.7}}, {}, {1, 3}});
    return r;
}

}  // namespace aqml
