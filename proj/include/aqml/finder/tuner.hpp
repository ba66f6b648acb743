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
 * @file tuner.hpp
 * Optimizer comparison for a fixed, gradient-trained architecture.
 *
 * Each trial samples "optimizer" from {vanilla_gd, momentum_gd, adam},
 * "learning_rate" log-uniformly in [1e-3, 0.5] and, for momentum_gd,
 * "momentum" uniformly in [0, 0.99]. The architecture is never resampled.
 * The winner has the highest mean final training score, then fewer calls.
 */
#pragma once

#include <array>
#include <string>
#include <vector>

#include "aqml/finder/finder.hpp"

namespace aqml {

inline constexpr double kTunerMinLearningRate = 1e-3;
inline constexpr double kTunerMaxLearningRate = 0.5;

struct TunerConfig {
    std::size_t n_trials = 20;
    std::size_t n_seeds = 3;
    std::size_t n_cores = 1;
    std::uint64_t base_seed = 0;
};

struct TunerResult {
    OptimizerConfig best;
    std::vector<TrialRecord> records;
    std::size_t best_index = 0;
};

inline OptimizerConfig suggest_optimizer(Trial& trial) {
    static const std::array<std::string, 3> kinds{"vanilla_gd", "momentum_gd", "adam"};
    OptimizerConfig c;
    c.kind = parse_optimizer_kind(trial.suggest_categorical("optimizer", kinds));
    c.learning_rate = trial.suggest_float("learning_rate", kTunerMinLearningRate, kTunerMaxLearningRate, true);
    if (c.kind == OptimizerKind::MomentumGD) {
        c.momentum = trial.suggest_float("momentum", 0.0, 0.99);
    }
    return c;
}

class HyperparameterTuner {
public:
    HyperparameterTuner(ConstructionOptions architecture, Registry registry, Dataset data, TunerConfig config)
        : arch_(std::move(architecture)), registry_(std::move(registry)), data_(std::move(data)), config_(config) {
        if (!is_gradient_trained(arch_.kind)) {
            throw UnsupportedModelError(std::string(to_string(arch_.kind)) +
                                        " is not trained by gradient descent; there is no optimizer to tune");
        }
        if (config_.n_trials < 1 || config_.n_seeds < 1 || config_.n_cores < 1) {
            throw std::invalid_argument("tuner needs at least one trial, seed and core");
        }
    }

    TrialRecord run_trial(int trial_id) const {
        TrialRecord rec;
        rec.trial_id = trial_id;
        rec.seed = trial_seed(config_.base_seed, trial_id);
        Trial trial(trial_id, rec.seed);
        BudgetLedger ledger;
        try {
            ConstructionOptions o = arch_;
            o.optimizer = suggest_optimizer(trial);
            for (std::size_t i = 0; i < config_.n_seeds; ++i) {
                const std::uint64_t seed = per_seed(config_.base_seed, i);
                TrainedModel model = construct_model(o, registry_, data_.features.cols(), seed);
                rec.per_seed_scores.push_back(fit_model(model, data_, seed, ledger));
            }
            double sum = 0.0;
            for (double s : rec.per_seed_scores) sum += s;
            rec.mean_score = sum / static_cast<double>(rec.per_seed_scores.size());
            rec.status = TrialStatus::Complete;
            rec.feasible = rec.mean_score >= arch_.threshold;
        } catch (const std::exception& e) {
            rec.status = TrialStatus::Failed;
            rec.error = e.what();
        }
        rec.sampled = trial.sampled();
        rec.ledger = ledger.snapshot();
        rec.total_calls = rec.ledger.total();
        return rec;
    }

    TunerResult find_hyperparameters(StudyStore& store) const {
        TunerResult result;
        result.records.resize(config_.n_trials);
        run_pool(config_.n_trials, config_.n_cores, [&](std::size_t i) {
            result.records[i] = run_trial(static_cast<int>(i));
            store.append(result.records[i]);
        });
        const auto best = select_best_score(result.records);
        if (!best) {
            throw StudyError("no tuning trial completed");
        }
        result.best_index = *best;
        Trial replay(result.records[*best].trial_id, result.records[*best].seed);
        result.best = suggest_optimizer(replay);
        return result;
    }

private:
    ConstructionOptions arch_;
    Registry registry_;
    Dataset data_;
    TunerConfig config_;
};

}  // namespace aqml
