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
 * @file training.hpp
 * The shared epoch / mini-batch loop for gradient-trained models.
 *
 * Contract:
 *  - A full-train scoring sweep runs before the first epoch and after every
 *    epoch; training stops as soon as a sweep scores >= threshold.
 *  - Epoch e (1-based) visits samples in the order produced by shuffling
 *    0..N-1 with Rng(derive_seed(seed, e)); batches keep the last partial one.
 *  - Each sweep also refreshes the model's cached outputs, which the loss
 *    gradients of the next epoch use as residuals. Gradients therefore cost
 *    only the shift-rule evaluations: per epoch 2*P*N calls, per sweep N.
 */
#pragma once

#include <concepts>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "aqml/budget.hpp"
#include "aqml/optim.hpp"
#include "aqml/rng.hpp"

namespace aqml {

struct TrainConfig {
    std::size_t n_epochs = 10;
    std::size_t batch_size = 20;
    double threshold = 0.8;
    std::uint64_t seed = 0;
    OptimizerConfig optimizer{};
};

struct TrainResult {
    std::size_t epochs_run = 0;
    double final_score = 0.0;
};

/// What train_epochs needs from a model. `score_sweep` evaluates every
/// training sample once (charging `counter`) and caches the outputs;
/// `accumulate_gradient` adds d(loss_i)/dw to `grad` using the cache.
template <typename P>
concept EpochTrainable = requires(P& p, std::span<const double> w, std::span<double> g, std::size_t i,
                                  CallCounter& counter) {
    { p.n_samples() } -> std::convertible_to<std::size_t>;
    { p.score_sweep(w, counter) } -> std::convertible_to<double>;
    p.accumulate_gradient(w, i, g, counter);
};

template <EpochTrainable P>
TrainResult train_epochs(P& problem, std::vector<double>& weights, const TrainConfig& config, BudgetLedger& ledger) {
    config.optimizer.validate();
    if (config.batch_size == 0) {
        throw std::invalid_argument("batch size must be positive");
    }
    const std::size_t n = problem.n_samples();
    TrainResult result;
    result.final_score = problem.score_sweep(weights, ledger.scoring);
    if (result.final_score >= config.threshold) {
        return result;
    }

    OptimizerState opt_state;
    std::vector<std::size_t> order(n);
    std::vector<double> grad(weights.size());
    for (std::size_t epoch = 1; epoch <= config.n_epochs; ++epoch) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        Rng rng(derive_seed(config.seed, epoch));
        rng.shuffle(std::span<std::size_t>(order));

        for (std::size_t start = 0; start < n; start += config.batch_size) {
            const std::size_t stop = std::min(n, start + config.batch_size);
            std::fill(grad.begin(), grad.end(), 0.0);
            for (std::size_t k = start; k < stop; ++k) {
                problem.accumulate_gradient(weights, order[k], grad, ledger.training_gradients);
            }
            const double inv = 1.0 / static_cast<double>(stop - start);
            for (auto& g : grad) {
                g *= inv;
            }
            step(opt_state, weights, grad, config.optimizer);
        }

        result.epochs_run = epoch;
        result.final_score = problem.score_sweep(weights, ledger.scoring);
        if (result.final_score >= config.threshold) {
            break;
        }
    }
    return result;
}

/// Closed-form call count of train_epochs for P weights, N samples and
/// `epochs_run` completed epochs. Independent of the batch size.
constexpr std::uint64_t expected_training_calls(std::uint64_t params, std::uint64_t samples,
                                                std::uint64_t epochs_run) noexcept {
    return 2 * params * samples * epochs_run + samples * (epochs_run + 1);
}

}  // namespace aqml
