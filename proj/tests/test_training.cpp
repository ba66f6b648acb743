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
#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numeric>

#include "aqml/models/qnn.hpp"
#include "aqml/registry.hpp"
#include "aqml/training.hpp"
#include "fixtures.hpp"

using namespace aqml;

TEST(Optimizer, VanillaStep) {
    OptimizerState s;
    std::vector<double> w{1.0, 2.0}, g{0.5, -1.0};
    step(s, w, g, {OptimizerKind::VanillaGD, 0.1});
    EXPECT_DOUBLE_EQ(w[0], 0.95);
    EXPECT_DOUBLE_EQ(w[1], 2.1);
}

TEST(Optimizer, MomentumHandUnrolled) {
    OptimizerConfig c{OptimizerKind::MomentumGD, 0.1, 0.9};
    OptimizerState s;
    std::vector<double> w{0.0}, g{1.0};
    const double expect[] = {-0.1, -0.29, -0.561};
    for (double e : expect) {
        step(s, w, g, c);
        EXPECT_NEAR(w[0], e, 1e-15);
    }
}

TEST(Optimizer, AdamFirstStepIsSignTimesRate) {
    OptimizerConfig c{OptimizerKind::Adam, 0.1};
    OptimizerState s;
    std::vector<double> w{0.0, 0.0}, g{2.0, -0.5};
    step(s, w, g, c);
    EXPECT_NEAR(w[0], -0.1 * 2.0 / (2.0 + 1e-8), 1e-15);
    EXPECT_NEAR(w[1], 0.1 * 0.5 / (0.5 + 1e-8), 1e-15);
    // Second step with the same gradient: moments stay proportional.
    step(s, w, g, c);
    EXPECT_NEAR(w[0], -0.2, 1e-7);
}

TEST(Optimizer, QuadraticConverges) {
    for (auto kind : {OptimizerKind::VanillaGD, OptimizerKind::MomentumGD, OptimizerKind::Adam}) {
        OptimizerConfig c{kind, kind == OptimizerKind::Adam ? 0.05 : 0.1, 0.5};
        OptimizerState s;
        std::vector<double> w{3.0, -2.0, 0.5};
        for (int i = 0; i < 100; ++i) {
            std::vector<double> g = w;  // gradient of |w|^2 / 2
            step(s, w, g, c);
        }
        const double norm = std::sqrt(std::inner_product(w.begin(), w.end(), w.begin(), 0.0));
        EXPECT_LT(norm, 0.1) << to_string(kind);
        if (kind == OptimizerKind::VanillaGD) {
            EXPECT_NEAR(w[0], 3.0 * std::pow(0.9, 100), 1e-12);
        }
    }
}

TEST(Optimizer, RejectsBadInput) {
    OptimizerState s;
    std::vector<double> w{1.0}, g2{1.0, 2.0};
    EXPECT_THROW(step(s, w, g2, {}), ShapeError);
    std::vector<double> bad{std::numeric_limits<double>::quiet_NaN()};
    EXPECT_THROW(step(s, w, bad, {}), std::domain_error);
    EXPECT_THROW((OptimizerConfig{OptimizerKind::VanillaGD, 0.0}.validate()), std::invalid_argument);
    EXPECT_THROW((OptimizerConfig{OptimizerKind::MomentumGD, 0.1, 1.0}.validate()), std::invalid_argument);
    EXPECT_EQ(parse_optimizer_kind("momentum_gd"), OptimizerKind::MomentumGD);
    EXPECT_THROW(parse_optimizer_kind("sgd"), std::invalid_argument);
}

namespace {

// Each sample contributes gradient 1 to every weight and costs one call.
struct CountingProblem {
    std::size_t n;
    std::vector<std::size_t> visited;
    double score = 0.0;
    std::size_t n_samples() const { return n; }
    double score_sweep(std::span<const double>, CallCounter& c) {
        c.add(n);
        return score;
    }
    void accumulate_gradient(std::span<const double>, std::size_t i, std::span<double> g, CallCounter& c) {
        visited.push_back(i);
        for (auto& v : g) v += 1.0;
        c.add(1);
    }
};

}  // namespace

TEST(TrainEpochs, KeepsPartialBatchAndAveragesGradient) {
    for (std::size_t n : {7u, 20u}) {
        for (std::size_t b : {3u, 4u, 20u}) {
            CountingProblem p{n, {}};
            std::vector<double> w{0.0};
            BudgetLedger ledger;
            TrainConfig cfg{2, b, 2.0, 9, {OptimizerKind::VanillaGD, 1.0}};
            const auto r = train_epochs(p, w, cfg, ledger);
            EXPECT_EQ(r.epochs_run, 2u);
            const double steps = 2.0 * static_cast<double>((n + b - 1) / b);
            EXPECT_DOUBLE_EQ(w[0], -steps);
            EXPECT_EQ(ledger.scoring.total(), 3 * n);
            EXPECT_EQ(ledger.training_gradients.total(), 2 * n);
        }
    }
}

TEST(TrainEpochs, EpochOrderIsSeededPermutation) {
    CountingProblem p{10, {}};
    std::vector<double> w{0.0};
    BudgetLedger ledger;
    train_epochs(p, w, {3, 4, 2.0, 42, {}}, ledger);
    ASSERT_EQ(p.visited.size(), 30u);
    for (std::size_t e = 0; e < 3; ++e) {
        std::vector<std::size_t> expect(10);
        std::iota(expect.begin(), expect.end(), 0u);
        Rng rng(derive_seed(42, e + 1));
        rng.shuffle(std::span<std::size_t>(expect));
        EXPECT_EQ(std::vector<std::size_t>(p.visited.begin() + 10 * e, p.visited.begin() + 10 * (e + 1)), expect);
    }
    CountingProblem q{10, {}};
    std::vector<double> w2{0.0};
    BudgetLedger l2;
    train_epochs(q, w2, {3, 4, 2.0, 42, {}}, l2);
    EXPECT_EQ(p.visited, q.visited);
}

TEST(TrainEpochs, ThresholdStopsEarly) {
    CountingProblem p{5, {}, 0.5};
    std::vector<double> w{0.0};
    BudgetLedger ledger;
    const auto r = train_epochs(p, w, {10, 2, 0.5, 0, {}}, ledger);
    EXPECT_EQ(r.epochs_run, 0u);
    EXPECT_EQ(ledger.total(), 5u);
    EXPECT_EQ(w[0], 0.0);
}

namespace {

QNNClassifier angle_qnn(int wires, std::size_t epochs, std::size_t batch, double threshold) {
    const auto reg = default_registry();
    QNNClassifier m;
    m.circuit.n_wires = wires;
    m.circuit.embedding = reg.embedding("ANGLE");
    m.circuit.layers = {reg.layer("BasicEntangler")};
    m.weights = initial_weights(m.circuit.param_count(), 3);
    m.n_epochs = epochs;
    m.batch_size = batch;
    m.accuracy_threshold = threshold;
    return m;
}

Dataset random_labelled(std::size_t n, std::size_t f, std::uint64_t seed) {
    Rng r(seed);
    std::vector<std::vector<double>> rows(n, std::vector<double>(f));
    Dataset d;
    for (std::size_t i = 0; i < n; ++i) {
        for (auto& v : rows[i]) v = r.uniform(-1, 1);
        d.targets.push_back(static_cast<double>(i % 2));
    }
    d.features = FeatureMatrix::from_rows(rows);
    return d;
}

}  // namespace

// Ledger totals against the closed form 2PNE + N(E+1) for every (P, N, B, E).
TEST(TrainEpochs, LedgerMatchesCostModelSweep) {
    for (int p = 1; p <= 4; ++p)
        for (std::size_t n : {8u, 20u})
            for (std::size_t b : {4u, 20u})
                for (std::size_t e = 0; e <= 3; ++e) {
                    auto m = angle_qnn(p, e, b, 1.1);
                    const auto d = random_labelled(n, static_cast<std::size_t>(p), 17);
                    BudgetLedger ledger;
                    const auto r = m.fit(d.features, d.targets, 1, ledger);
                    ASSERT_EQ(r.epochs_run, e);
                    const std::uint64_t pp = static_cast<std::uint64_t>(p);
                    EXPECT_EQ(ledger.training_gradients.total(), 2 * pp * n * e);
                    EXPECT_EQ(ledger.scoring.total(), n * (e + 1));
                    EXPECT_EQ(ledger.training_forward.total(), 0u);
                    EXPECT_EQ(ledger.kernel.total(), 0u);
                    EXPECT_EQ(ledger.total(), expected_training_calls(pp, n, e));
                }
}

TEST(TrainEpochs, ZeroEpochsLeavesWeights) {
    auto m = angle_qnn(2, 0, 4, 1.1);
    const auto before = m.weights;
    const auto d = random_labelled(8, 2, 2);
    BudgetLedger ledger;
    m.fit(d.features, d.targets, 0, ledger);
    EXPECT_EQ(m.weights, before);
    EXPECT_EQ(ledger.total(), 8u);
}

TEST(TrainEpochs, ThresholdZeroCostsOneSweep) {
    auto m = angle_qnn(3, 5, 4, 0.0);
    const auto before = m.weights;
    const auto d = random_labelled(20, 3, 4);
    BudgetLedger ledger;
    const auto r = m.fit(d.features, d.targets, 0, ledger);
    EXPECT_EQ(r.epochs_run, 0u);
    EXPECT_EQ(ledger.total(), 20u);
    EXPECT_EQ(ledger.scoring.total(), 20u);
    EXPECT_EQ(m.weights, before);
}

TEST(TrainEpochs, RegressorLedgerMatchesCostModel) {
    const auto reg = default_registry();
    QNNRegressor m;
    m.circuit.n_wires = 1;
    m.circuit.embedding = reg.embedding("ANGLE");
    m.circuit.layers = {reg.layer("StronglyEntangling")};
    m.weights = initial_weights(3, 0);
    m.n_epochs = 2;
    m.batch_size = 7;
    m.r2_threshold = 1.1;
    const auto d = fixtures::cosine_curve();
    BudgetLedger ledger;
    m.fit(d.features, d.targets, 0, ledger);
    EXPECT_EQ(ledger.total(), expected_training_calls(3, 20, 2));
}
