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
 * @file finder.hpp
 * The model search: random-sampled trials over the registered families,
 * each trained over several seeds, and selection of the cheapest model that
 * meets the quality threshold.
 *
 * Seeds: trial t samples from Rng(derive_seed(base_seed, t)); training seed
 * i of every trial is base_seed * 10007 + i; the winner is retrained on
 * base_seed itself.
 */
#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "aqml/data.hpp"
#include "aqml/finder/record.hpp"
#include "aqml/finder/selection.hpp"
#include "aqml/finder/suggest.hpp"
#include "aqml/finder/trial.hpp"
#include "aqml/models/model.hpp"
#include "aqml/registry.hpp"
#include "aqml/store/study_store.hpp"

namespace aqml {

struct FinderConfig {
    TaskType task = TaskType::Classification;
    std::size_t n_trials = 20;
    std::size_t n_seeds = 3;
    std::size_t n_epochs = 10;
    std::size_t n_cores = 1;
    double threshold = 0.8;
    std::uint64_t base_seed = 0;

    void validate() const {
        if (n_trials < 1) throw std::invalid_argument("n_trials must be at least 1");
        if (n_seeds < 1) throw std::invalid_argument("n_seeds must be at least 1");
        if (n_cores < 1) throw std::invalid_argument("n_cores must be at least 1");
    }
};

constexpr std::uint64_t per_seed(std::uint64_t base_seed, std::size_t i) noexcept {
    return base_seed * 10007 + i;
}

constexpr std::uint64_t trial_seed(std::uint64_t base_seed, int trial_id) noexcept {
    return derive_seed(base_seed, static_cast<std::uint64_t>(trial_id));
}

/// Runs `n` jobs on up to `workers` threads. The first exception thrown by a
/// job stops further jobs from starting and is rethrown after all threads join.
inline void run_pool(std::size_t n, std::size_t workers, const std::function<void(std::size_t)>& job) {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            if (stop.load()) return;
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                job(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                stop = true;
            }
        }
    };
    const std::size_t count = std::min(workers, n);
    if (count <= 1) {
        worker();
    } else {
        std::vector<std::jthread> threads;
        for (std::size_t t = 0; t < count; ++t) threads.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);
}

struct TrialOutcome {
    TrialRecord record;
    std::optional<ConstructionOptions> options;
};

struct FindResult {
    ModelSpec model;
    std::vector<TrialRecord> records;  // indexed by trial id
    Selection selection;
};

class ModelFinder {
public:
    ModelFinder(FinderConfig config, Registry registry, Dataset data)
        : config_(config), registry_(std::move(registry)), data_(std::move(data)) {
        config_.validate();
    }

    /// Called inside each trial after sampling, before training; a throw
    /// fails that trial. Used for fault injection.
    std::function<void(int trial_id)> trial_hook;

    const FinderConfig& config() const noexcept { return config_; }
    const Registry& registry() const noexcept { return registry_; }
    const Dataset& data() const noexcept { return data_; }

    ConstructionOptions suggest(Trial& trial) const {
        const auto families = registry_.models_for(config_.task);
        if (families.empty()) {
            throw RegistryError("no model family registered for task " + std::string(to_string(config_.task)));
        }
        std::vector<std::string> names;
        for (const auto* f : families) names.push_back(f->name);
        const auto& family = registry_.model(trial.suggest_categorical("model_type", names));
        const SearchSettings settings{config_.n_epochs, config_.threshold};
        if (config_.task == TaskType::Clustering) {
            return suggest_unsupervised_kwargs(trial, family, data_.features.cols(), settings);
        }
        return suggest_supervised_kwargs(trial, family, registry_, data_.features.cols(), settings);
    }

    /// Samples, trains and scores one trial. Never throws for model or data
    /// problems; those produce a failed record.
    TrialOutcome run_trial(int trial_id) const {
        TrialOutcome out;
        auto& rec = out.record;
        rec.trial_id = trial_id;
        rec.seed = trial_seed(config_.base_seed, trial_id);
        Trial trial(trial_id, rec.seed);
        BudgetLedger ledger;
        try {
            out.options = suggest(trial);
            if (trial_hook) trial_hook(trial_id);
            for (std::size_t i = 0; i < config_.n_seeds; ++i) {
                const std::uint64_t seed = per_seed(config_.base_seed, i);
                TrainedModel model = construct_model(*out.options, registry_, data_.features.cols(), seed);
                rec.per_seed_scores.push_back(fit_model(model, data_, seed, ledger));
            }
            double sum = 0.0;
            for (double s : rec.per_seed_scores) sum += s;
            rec.mean_score = sum / static_cast<double>(rec.per_seed_scores.size());
            rec.status = TrialStatus::Complete;
            rec.feasible = rec.mean_score >= config_.threshold;
        } catch (const std::exception& e) {
            rec.status = TrialStatus::Failed;
            rec.feasible = false;
            rec.error = e.what();
        }
        rec.sampled = trial.sampled();
        rec.ledger = ledger.snapshot();
        rec.total_calls = rec.ledger.total();
        return out;
    }

    /// Runs every trial (up to n_cores at once), appending each record to
    /// `store` as it completes, then retrains the selected configuration.
    FindResult find_model(StudyStore& store) const {
        std::vector<TrialOutcome> outcomes(config_.n_trials);
        run_pool(config_.n_trials, config_.n_cores, [&](std::size_t i) {
            outcomes[i] = run_trial(static_cast<int>(i));
            store.append(outcomes[i].record);
        });

        FindResult result;
        for (auto& o : outcomes) result.records.push_back(o.record);
        const auto selection = select_best(result.records);
        if (!selection) {
            throw StudyError("no trial completed out of " + std::to_string(config_.n_trials));
        }
        result.selection = *selection;
        const auto& winner = result.records[selection->index];

        ModelSpec& spec = result.model;
        spec.options = *outcomes[selection->index].options;
        spec.feature_names = data_.feature_names;
        spec.metadata = {winner.trial_id, winner.mean_score, winner.total_calls, config_.base_seed,
                         selection->feasible};
        spec.model = construct_model(spec.options, registry_, data_.features.cols(), config_.base_seed);
        BudgetLedger retrain;
        try {
            fit_model(spec.model, data_, config_.base_seed, retrain);
        } catch (const std::exception& e) {
            throw StudyError("retraining trial " + std::to_string(winner.trial_id) + " failed: " + e.what());
        }
        return result;
    }

private:
    FinderConfig config_;
    Registry registry_;
    Dataset data_;
};

}  // namespace aqml
