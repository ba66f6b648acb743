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
 * @file optim.hpp
 * First-order optimizers used by gradient-trained models.
 *
 *   vanilla_gd:  w <- w - lr * g
 *   momentum_gd: v <- mu * v + g;  w <- w - lr * v
 *   adam:        bias-corrected first/second moments (beta1, beta2, epsilon)
 */
#pragma once

#include <cmath>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aqml/errors.hpp"

namespace aqml {

enum class OptimizerKind { VanillaGD, MomentumGD, Adam };

inline std::string_view to_string(OptimizerKind k) noexcept {
    switch (k) {
        case OptimizerKind::VanillaGD: return "vanilla_gd";
        case OptimizerKind::MomentumGD: return "momentum_gd";
        case OptimizerKind::Adam: return "adam";
    }
    return "?";
}

inline OptimizerKind parse_optimizer_kind(std::string_view s) {
    if (s == "vanilla_gd") return OptimizerKind::VanillaGD;
    if (s == "momentum_gd") return OptimizerKind::MomentumGD;
    if (s == "adam") return OptimizerKind::Adam;
    throw std::invalid_argument("unknown optimizer '" + std::string(s) + "'");
}

struct OptimizerConfig {
    OptimizerKind kind = OptimizerKind::VanillaGD;
    double learning_rate = 0.1;
    double momentum = 0.9;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;

    void validate() const {
        if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
            throw std::invalid_argument("learning rate must be positive");
        }
        if (kind == OptimizerKind::MomentumGD && !(momentum >= 0.0 && momentum < 1.0)) {
            throw std::invalid_argument("momentum must lie in [0, 1)");
        }
        if (kind == OptimizerKind::Adam &&
            !(beta1 >= 0.0 && beta1 < 1.0 && beta2 >= 0.0 && beta2 < 1.0 && epsilon > 0.0)) {
            throw std::invalid_argument("invalid Adam coefficients");
        }
    }

    bool operator==(const OptimizerConfig&) const = default;
};

struct OptimizerState {
    std::vector<double> velocity;  // momentum buffer, or Adam first moment
    std::vector<double> second;    // Adam second moment
    std::uint64_t steps = 0;
};

/// Updates `weights` in place from `gradient`.
inline void step(OptimizerState& state, std::span<double> weights, std::span<const double> gradient,
                 const OptimizerConfig& config) {
    if (weights.size() != gradient.size()) {
        throw ShapeError("gradient length " + std::to_string(gradient.size()) + " differs from weight length " +
                         std::to_string(weights.size()));
    }
    for (double g : gradient) {
        if (!std::isfinite(g)) {
            throw std::domain_error("non-finite gradient component");
        }
    }
    const std::size_t n = weights.size();
    if (config.kind != OptimizerKind::VanillaGD && state.velocity.size() != n) {
        state.velocity.assign(n, 0.0);
        state.second.assign(config.kind == OptimizerKind::Adam ? n : 0, 0.0);
        state.steps = 0;
    }
    ++state.steps;
    switch (config.kind) {
        case OptimizerKind::VanillaGD:
            for (std::size_t i = 0; i < n; ++i) {
                weights[i] -= config.learning_rate * gradient[i];
            }
            break;
        case OptimizerKind::MomentumGD:
            for (std::size_t i = 0; i < n; ++i) {
                state.velocity[i] = config.momentum * state.velocity[i] + gradient[i];
                weights[i] -= config.learning_rate * state.velocity[i];
            }
            break;
        case OptimizerKind::Adam: {
            const double t = static_cast<double>(state.steps);
            const double c1 = 1.0 - std::pow(config.beta1, t);
            const double c2 = 1.0 - std::pow(config.beta2, t);
            for (std::size_t i = 0; i < n; ++i) {
                state.velocity[i] = config.beta1 * state.velocity[i] + (1.0 - config.beta1) * gradient[i];
                state.second[i] = config.beta2 * state.second[i] + (1.0 - config.beta2) * gradient[i] * gradient[i];
                const double m_hat = state.velocity[i] / c1;
                const double v_hat = state.second[i] / c2;
                weights[i] -= config.learning_rate * m_hat / (std::sqrt(v_hat) + config.epsilon);
            }
            break;
        }
    }
}

}  // namespace aqml
