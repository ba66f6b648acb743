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
 * @file qnn.hpp
 * Variational-circuit models read out through <Z> on wire 0.
 *
 * Classifier: class 0 <-> target +1, class 1 <-> target -1, so
 * p(class 1) = (1 - <Z_0>) / 2 and the label is 1 iff p >= 0.5.
 * Regressor: targets are mapped affinely onto [-1, 1]; predictions invert it.
 * Both minimize the squared error between <Z_0> and the target.
 */
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "aqml/budget.hpp"
#include "aqml/circuit.hpp"
#include "aqml/data.hpp"
#include "aqml/models/scoring.hpp"
#include "aqml/rng.hpp"
#include "aqml/training.hpp"

namespace aqml {

/// `count` weights uniform in [0, 2 pi) from Rng(seed).
inline std::vector<double> initial_weights(std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> w(count);
    for (auto& v : w) {
        v = rng.uniform(0.0, 2.0 * std::numbers::pi);
    }
    return w;
}

inline double qnn_expectation(const CircuitSpec& circuit, std::span<const double> weights, std::span<const double> x,
                              CallCounter& counter) {
    return expectation_z(run_circuit(circuit, weights, x, counter), 0);
}

namespace detail {

/// Squared-error problem over <Z_0>; the score is supplied by the model.
template <typename ScoreFn>
class ExpectationRegression {
public:
    ExpectationRegression(const CircuitSpec& circuit, const FeatureMatrix& x, std::vector<double> targets,
                          ScoreFn score)
        : circuit_(circuit), x_(x), targets_(std::move(targets)), outputs_(x.rows()), score_(std::move(score)) {}

    std::size_t n_samples() const noexcept { return x_.rows(); }

    double score_sweep(std::span<const double> w, CallCounter& counter) {
        for (std::size_t i = 0; i < x_.rows(); ++i) {
            outputs_[i] = qnn_expectation(circuit_, w, x_.row(i), counter);
        }
        return score_(outputs_, targets_);
    }

    void accumulate_gradient(std::span<const double> w, std::size_t i, std::span<double> grad, CallCounter& counter) {
        const auto df = parameter_shift_gradient(circuit_, w, x_.row(i), 0, counter);
        const double residual = 2.0 * (outputs_[i] - targets_[i]);
        for (std::size_t j = 0; j < df.size(); ++j) {
            grad[j] += residual * df[j];
        }
    }

    std::span<const double> outputs() const noexcept { return outputs_; }

private:
    const CircuitSpec& circuit_;
    const FeatureMatrix& x_;
    std::vector<double> targets_;
    std::vector<double> outputs_;
    ScoreFn score_;
};

inline int label_from_expectation(double z) noexcept { return (1.0 - z) / 2.0 >= 0.5 ? 1 : 0; }

inline void check_rows(const FeatureMatrix& x, std::size_t n_targets) {
    if (x.empty()) {
        throw DataError("cannot fit on an empty dataset");
    }
    if (x.rows() != n_targets) {
        throw ShapeError("feature rows and targets differ in length");
    }
}

}  // namespace detail

struct ClassPrediction {
    int label = 0;
    double probability = 0.0;  // p(class 1)
};

struct QNNClassifier {
    CircuitSpec circuit;
    std::vector<double> weights;
    std::size_t batch_size = 20;
    double accuracy_threshold = 0.8;
    std::size_t n_epochs = 10;
    OptimizerConfig optimizer{};

    ClassPrediction predict(std::span<const double> x, CallCounter& counter) const {
        const double z = qnn_expectation(circuit, weights, x, counter);
        return {detail::label_from_expectation(z), (1.0 - z) / 2.0};
    }

    std::vector<int> predict_labels(const FeatureMatrix& x, CallCounter& counter) const {
        std::vector<int> out(x.rows());
        for (std::size_t i = 0; i < x.rows(); ++i) {
            out[i] = predict(x.row(i), counter).label;
        }
        return out;
    }

    /// Mini-batch training with early stopping once the full-train accuracy
    /// reaches `accuracy_threshold`. Returns the last sweep's accuracy.
    TrainResult fit(const FeatureMatrix& x, std::span<const double> y, std::uint64_t seed, BudgetLedger& ledger) {
        detail::check_rows(x, y.size());
        bool has0 = false, has1 = false;
        std::vector<double> targets(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (y[i] == 0.0) {
                has0 = true;
                targets[i] = 1.0;
            } else if (y[i] == 1.0) {
                has1 = true;
                targets[i] = -1.0;
            } else {
                throw DataError("classification labels must be 0 or 1");
            }
        }
        if (!(has0 && has1)) {
            throw DataError("classification needs both classes present");
        }
        if (weights.size() != circuit.param_count()) {
            throw ShapeError("classifier weights do not match its circuit");
        }
        auto accuracy = [](std::span<const double> z, std::span<const double> t) {
            std::size_t hits = 0;
            for (std::size_t i = 0; i < z.size(); ++i) {
                hits += detail::label_from_expectation(z[i]) == (t[i] < 0 ? 1 : 0);
            }
            return static_cast<double>(hits) / static_cast<double>(z.size());
        };
        detail::ExpectationRegression problem(circuit, x, std::move(targets), accuracy);
        return train_epochs(problem, weights,
                            {n_epochs, batch_size, accuracy_threshold, seed, optimizer}, ledger);
    }

    Score score(const FeatureMatrix& x, std::span<const double> y, CallCounter& counter) const {
        return {mean_accuracy(predict_labels(x, counter), y), ScoreKind::MeanAccuracy};
    }
};

/// Affine map between the target range [low, high] and [-1, 1].
struct TargetScaler {
    double low = 0.0;
    double high = 1.0;

    static TargetScaler fit(std::span<const double> y) {
        if (y.empty()) {
            throw DataError("cannot fit a target scaler on no targets");
        }
        const auto [lo, hi] = std::minmax_element(y.begin(), y.end());
        if (!(*hi > *lo)) {
            throw DataError("regression targets are constant; the target rescaling is undefined");
        }
        return {*lo, *hi};
    }

    double to_unit(double v) const noexcept { return 2.0 * (v - low) / (high - low) - 1.0; }
    double from_unit(double z) const noexcept { return low + (z + 1.0) / 2.0 * (high - low); }
};

struct QNNRegressor {
    CircuitSpec circuit;
    std::vector<double> weights;
    TargetScaler scaler;
    std::size_t batch_size = 20;
    double r2_threshold = 0.8;
    std::size_t n_epochs = 10;
    OptimizerConfig optimizer{};

    double predict(std::span<const double> x, CallCounter& counter) const {
        return scaler.from_unit(qnn_expectation(circuit, weights, x, counter));
    }

    std::vector<double> predict_values(const FeatureMatrix& x, CallCounter& counter) const {
        std::vector<double> out(x.rows());
        for (std::size_t i = 0; i < x.rows(); ++i) {
            out[i] = predict(x.row(i), counter);
        }
        return out;
    }

    /// Fits the target scaler to `y`, then trains on the rescaled targets;
    /// early stops once the training R^2 reaches `r2_threshold`.
    TrainResult fit(const FeatureMatrix& x, std::span<const double> y, std::uint64_t seed, BudgetLedger& ledger) {
        detail::check_rows(x, y.size());
        scaler = TargetScaler::fit(y);
        return fit_scaled(x, y, seed, ledger);
    }

    /// Trains against the already-set `scaler`.
    TrainResult fit_scaled(const FeatureMatrix& x, std::span<const double> y, std::uint64_t seed,
                           BudgetLedger& ledger) {
        detail::check_rows(x, y.size());
        if (weights.size() != circuit.param_count()) {
            throw ShapeError("regressor weights do not match its circuit");
        }
        std::vector<double> targets(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) {
            targets[i] = scaler.to_unit(y[i]);
        }
        auto r2 = [](std::span<const double> z, std::span<const double> t) { return r2_score(z, t); };
        detail::ExpectationRegression problem(circuit, x, std::move(targets), r2);
        return train_epochs(problem, weights, {n_epochs, batch_size, r2_threshold, seed, optimizer}, ledger);
    }

    Score score(const FeatureMatrix& x, std::span<const double> y, CallCounter& counter) const {
        return {r2_score(predict_values(x, counter), y), ScoreKind::R2};
    }
};

}  // namespace aqml
