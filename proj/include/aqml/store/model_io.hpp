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
 * @file model_io.hpp
 * Model file format (format_version 1): a JSON document, two-space indent,
 * trailing newline, keys in a fixed order.
 *
 *   format_version, task, model_family, constructor, feature_names,
 *   n_wires, embedding {name, options}, layers [names], weights [reals],
 *   extras {...}, metadata {trial_id, mean_score, total_calls, base_seed,
 *   feasible}
 *
 * Reals are written in shortest round-trip form, so parse -> serialize
 * reproduces the file byte for byte. For the RBM clusterer n_wires is 0,
 * embedding is null, layers is empty and `weights` concatenates, row-major:
 * each encoder layer (weights, bias), the decoder (weights, bias), then the
 * RBM weights (visible x hidden), visible bias and hidden bias. Shapes live
 * in `extras`.
 */
#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "aqml/errors.hpp"
#include "aqml/models/model.hpp"
#include "aqml/registry.hpp"

namespace aqml {

inline constexpr int kModelFormatVersion = 1;

namespace detail {

inline Options optimizer_to_json(const OptimizerConfig& c) {
    return {{"kind", std::string(to_string(c.kind))}, {"learning_rate", c.learning_rate}, {"momentum", c.momentum},
            {"beta1", c.beta1}, {"beta2", c.beta2}, {"epsilon", c.epsilon}};
}

inline OptimizerConfig optimizer_from_json(const Options& j) {
    OptimizerConfig c;
    c.kind = parse_optimizer_kind(j.at("kind").get<std::string>());
    c.learning_rate = j.at("learning_rate").get<double>();
    c.momentum = j.at("momentum").get<double>();
    c.beta1 = j.at("beta1").get<double>();
    c.beta2 = j.at("beta2").get<double>();
    c.epsilon = j.at("epsilon").get<double>();
    return c;
}

inline void push_matrix(std::vector<double>& out, const Eigen::MatrixXd& m) {
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
}

inline void push_vector(std::vector<double>& out, const Eigen::VectorXd& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
}

class WeightReader {
public:
    explicit WeightReader(const std::vector<double>& w) : w_(w) {}

    Eigen::MatrixXd matrix(Eigen::Index rows, Eigen::Index cols) {
        Eigen::MatrixXd m(rows, cols);
        for (Eigen::Index r = 0; r < rows; ++r)
            for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = next();
        return m;
    }

    Eigen::VectorXd vector(Eigen::Index n) {
        Eigen::VectorXd v(n);
        for (Eigen::Index i = 0; i < n; ++i) v(i) = next();
        return v;
    }

    bool done() const noexcept { return pos_ == w_.size(); }

private:
    double next() {
        if (pos_ >= w_.size()) throw ShapeError("model weights shorter than the declared architecture");
        return w_[pos_++];
    }

    const std::vector<double>& w_;
    std::size_t pos_ = 0;
};

inline Options circuit_header(Options& j, const CircuitSpec& c) {
    j["n_wires"] = c.n_wires;
    j["embedding"] = {{"name", c.embedding.name}, {"options", c.embedding.fixed_options}};
    Options layers = Options::array();
    for (const auto& l : c.layers) layers.push_back(l.name);
    j["layers"] = layers;
    return j;
}

}  // namespace detail

inline Options model_to_json(const ModelSpec& spec) {
    Options j = Options::object();
    j["format_version"] = kModelFormatVersion;
    j["task"] = std::string(to_string(spec.options.task));
    j["model_family"] = spec.options.family;
    j["constructor"] = std::string(to_string(kind_of(spec.model)));
    j["feature_names"] = spec.feature_names;

    Options extras = Options::object();
    std::vector<double> weights;
    std::visit(
        [&](const auto& m) {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, RBMClusterer>) {
                j["n_wires"] = 0;
                j["embedding"] = nullptr;
                j["layers"] = Options::array();
                std::vector<int> widths{m.input_size};
                for (const auto& l : m.encoder.layers) widths.push_back(static_cast<int>(l.weights.rows()));
                for (const auto& l : m.encoder.layers) {
                    detail::push_matrix(weights, l.weights);
                    detail::push_vector(weights, l.bias);
                }
                detail::push_matrix(weights, m.decoder.weights);
                detail::push_vector(weights, m.decoder.bias);
                detail::push_matrix(weights, m.rbm.weights);
                detail::push_vector(weights, m.rbm.visible_bias);
                detail::push_vector(weights, m.rbm.hidden_bias);
                extras["input_size"] = m.input_size;
                extras["encoder_widths"] = widths;
                extras["lbae_n_layers"] = m.encoder_layers;
                extras["lbae_out_channels"] = m.latent_size;
                extras["rbm_n_hidden_neurons"] = m.n_hidden;
                extras["firing_threshold"] = m.firing_threshold;
                extras["n_epochs"] = m.n_epochs;
                extras["scaler_low"] = m.scaler.low;
                extras["scaler_high"] = m.scaler.high;
            } else {
                detail::circuit_header(j, m.circuit);
                weights = m.weights;
                if constexpr (std::is_same_v<M, QEKClassifier>) {
                    extras["ridge_lambda"] = m.ridge_lambda;
                    extras["dual_coeffs"] = m.dual_coeffs;
                    Options support = Options::array();
                    for (std::size_t r = 0; r < m.support.rows(); ++r) {
                        const auto row = m.support.row(r);
                        support.push_back(std::vector<double>(row.begin(), row.end()));
                    }
                    extras["support"] = support;
                } else {
                    extras["batch_size"] = m.batch_size;
                    extras["n_epochs"] = m.n_epochs;
                    extras["optimizer"] = detail::optimizer_to_json(m.optimizer);
                    if constexpr (std::is_same_v<M, QNNClassifier>) {
                        extras["accuracy_threshold"] = m.accuracy_threshold;
                    } else {
                        extras["r2_threshold"] = m.r2_threshold;
                        extras["target_low"] = m.scaler.low;
                        extras["target_high"] = m.scaler.high;
                    }
                }
            }
        },
        spec.model);
    j["weights"] = weights;
    j["extras"] = extras;
    j["metadata"] = {{"trial_id", spec.metadata.trial_id},
                     {"mean_score", spec.metadata.mean_score},
                     {"total_calls", spec.metadata.total_calls},
                     {"base_seed", spec.metadata.base_seed},
                     {"feasible", spec.metadata.feasible}};
    return j;
}

inline std::string serialize_model(const ModelSpec& spec) { return model_to_json(spec).dump(2) + "\n"; }

/// Rebuilds a model; layer and embedding names resolve through `registry`.
inline ModelSpec model_from_json(const Options& j, const Registry& registry = default_registry()) {
    const int version = j.at("format_version").get<int>();
    if (version != kModelFormatVersion) {
        throw DataError("unsupported model format_version " + std::to_string(version));
    }
    ModelSpec spec;
    auto& o = spec.options;
    o.task = parse_task(j.at("task").get<std::string>());
    o.family = j.at("model_family").get<std::string>();
    o.kind = parse_model_kind(j.at("constructor").get<std::string>());
    spec.feature_names = j.at("feature_names").get<std::vector<std::string>>();
    const auto weights = j.at("weights").get<std::vector<double>>();
    const Options& extras = j.at("extras");
    o.extras = extras;

    const auto& md = j.at("metadata");
    spec.metadata = {md.at("trial_id").get<int>(), md.at("mean_score").get<double>(),
                     md.at("total_calls").get<std::uint64_t>(), md.at("base_seed").get<std::uint64_t>(),
                     md.at("feasible").get<bool>()};

    if (o.kind == ModelKind::RBMClusterer) {
        RBMClusterer m;
        m.input_size = extras.at("input_size").get<int>();
        m.encoder_layers = extras.at("lbae_n_layers").get<int>();
        m.latent_size = extras.at("lbae_out_channels").get<int>();
        m.n_hidden = extras.at("rbm_n_hidden_neurons").get<int>();
        m.firing_threshold = extras.at("firing_threshold").get<double>();
        m.n_epochs = extras.at("n_epochs").get<std::size_t>();
        m.scaler.low = extras.at("scaler_low").get<std::vector<double>>();
        m.scaler.high = extras.at("scaler_high").get<std::vector<double>>();
        const auto widths = extras.at("encoder_widths").get<std::vector<int>>();
        if (widths.size() != static_cast<std::size_t>(m.encoder_layers) + 1 || widths.front() != m.input_size ||
            widths.back() != m.latent_size || m.scaler.low.size() != static_cast<std::size_t>(m.input_size) ||
            m.scaler.high.size() != m.scaler.low.size()) {
            throw ShapeError("inconsistent clusterer shapes in model file");
        }
        detail::WeightReader reader(weights);
        for (std::size_t k = 0; k + 1 < widths.size(); ++k) {
            DenseLayer l;
            l.weights = reader.matrix(widths[k + 1], widths[k]);
            l.bias = reader.vector(widths[k + 1]);
            m.encoder.layers.push_back(std::move(l));
        }
        m.decoder.weights = reader.matrix(m.input_size, m.latent_size);
        m.decoder.bias = reader.vector(m.input_size);
        m.rbm.weights = reader.matrix(m.latent_size, m.n_hidden);
        m.rbm.visible_bias = reader.vector(m.latent_size);
        m.rbm.hidden_bias = reader.vector(m.n_hidden);
        if (!reader.done()) {
            throw ShapeError("model weights longer than the declared architecture");
        }
        o.n_epochs = m.n_epochs;
        spec.model = std::move(m);
        return spec;
    }

    o.n_wires = j.at("n_wires").get<int>();
    o.embedding = j.at("embedding").at("name").get<std::string>();
    o.layers = j.at("layers").get<std::vector<std::string>>();
    CircuitSpec circuit = make_circuit(o, registry);
    circuit.embedding.fixed_options = j.at("embedding").at("options");
    if (weights.size() != circuit.param_count()) {
        throw ShapeError("model declares " + std::to_string(circuit.param_count()) + " weights but stores " +
                         std::to_string(weights.size()));
    }

    switch (o.kind) {
        case ModelKind::QEKClassifier: {
            QEKClassifier m;
            m.circuit = std::move(circuit);
            m.weights = weights;
            m.ridge_lambda = extras.at("ridge_lambda").get<double>();
            m.dual_coeffs = extras.at("dual_coeffs").get<std::vector<double>>();
            m.support = FeatureMatrix::from_rows(extras.at("support").get<std::vector<std::vector<double>>>());
            if (m.support.rows() != m.dual_coeffs.size()) {
                throw ShapeError("kernel model support and dual coefficients differ in length");
            }
            spec.model = std::move(m);
            break;
        }
        case ModelKind::QNNClassifier: {
            QNNClassifier m;
            m.circuit = std::move(circuit);
            m.weights = weights;
            m.batch_size = extras.at("batch_size").get<std::size_t>();
            m.n_epochs = extras.at("n_epochs").get<std::size_t>();
            m.optimizer = detail::optimizer_from_json(extras.at("optimizer"));
            m.accuracy_threshold = extras.at("accuracy_threshold").get<double>();
            o.n_epochs = m.n_epochs;
            o.threshold = m.accuracy_threshold;
            o.optimizer = m.optimizer;
            spec.model = std::move(m);
            break;
        }
        case ModelKind::QNNRegressor: {
            QNNRegressor m;
            m.circuit = std::move(circuit);
            m.weights = weights;
            m.batch_size = extras.at("batch_size").get<std::size_t>();
            m.n_epochs = extras.at("n_epochs").get<std::size_t>();
            m.optimizer = detail::optimizer_from_json(extras.at("optimizer"));
            m.r2_threshold = extras.at("r2_threshold").get<double>();
            m.scaler = {extras.at("target_low").get<double>(), extras.at("target_high").get<double>()};
            o.n_epochs = m.n_epochs;
            o.threshold = m.r2_threshold;
            o.optimizer = m.optimizer;
            spec.model = std::move(m);
            break;
        }
        case ModelKind::RBMClusterer: break;
    }
    return spec;
}

inline ModelSpec parse_model(const std::string& text, const Registry& registry = default_registry()) {
    return model_from_json(Options::parse(text), registry);
}

inline void write_model_file(const std::filesystem::path& path, const ModelSpec& spec) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << serialize_model(spec);
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

inline ModelSpec read_model_file(const std::filesystem::path& path, const Registry& registry = default_registry()) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_model(buf.str(), registry);
}

}  // namespace aqml
