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
 * @file qek.hpp
 * Fidelity-kernel binary classifier.
 *
 * The feature map is an embedding followed by layers whose weights are drawn
 * once from the construction seed and then frozen. Training solves the ridge
 * system (K + lambda I) alpha = t with t = 1 - 2y, and a point is labelled 1
 * iff sum_i alpha_i k(x_i, x) < 0.
 */
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "aqml/budget.hpp"
#include "aqml/circuit.hpp"
#include "aqml/data.hpp"
#include "aqml/models/scoring.hpp"

namespace aqml {

struct FeatureMap {
    const CircuitSpec& circuit;
    std::span<const double> weights;
};

/// k(a, b) = |<phi(a)|phi(b)>|^2. One pair evaluation, two device calls.
inline double kernel_value(const FeatureMap& fm, std::span<const double> a, std::span<const double> b,
                           CallCounter& counter) {
    const Statevector sa = run_circuit(fm.circuit, fm.weights, a, counter);
    const Statevector sb = run_circuit(fm.circuit, fm.weights, b, counter);
    return fidelity(sa, sb);
}

/// Training kernel. Only the strict upper triangle is evaluated
/// (N(N-1)/2 pairs); the diagonal is exactly 1 and the lower half mirrors
/// the upper, so the result is exactly symmetric.
inline Eigen::MatrixXd kernel_matrix(const FeatureMap& fm, const FeatureMatrix& x, CallCounter& counter) {
    const auto n = static_cast<Eigen::Index>(x.rows());
    Eigen::MatrixXd k(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        k(i, i) = 1.0;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            k(i, j) = kernel_value(fm, x.row(static_cast<std::size_t>(i)), x.row(static_cast<std::size_t>(j)), counter);
            k(j, i) = k(i, j);
        }
    }
    return k;
}

/// Cross kernel K[i][j] = k(a_i, b_j); every pair is evaluated.
inline Eigen::MatrixXd kernel_matrix(const FeatureMap& fm, const FeatureMatrix& a, const FeatureMatrix& b,
                                     CallCounter& counter) {
    Eigen::MatrixXd k(static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(b.rows()));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.rows(); ++j) {
            k(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = kernel_value(fm, a.row(i), b.row(j), counter);
        }
    }
    return k;
}

/// Solves (K + lambda I) alpha = t.
inline Eigen::VectorXd ridge_solve(const Eigen::MatrixXd& k, const Eigen::VectorXd& t, double lambda) {
    if (!(lambda > 0.0)) {
        throw std::invalid_argument("ridge lambda must be positive");
    }
    Eigen::MatrixXd a = k;
    a.diagonal().array() += lambda;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(a);
    if (ldlt.info() != Eigen::Success) {
        throw std::runtime_error("ridge system factorization failed");
    }
    return ldlt.solve(t);
}

inline int label_from_decision(double d) noexcept { return d < 0.0 ? 1 : 0; }

struct QEKClassifier {
    CircuitSpec circuit;
    std::vector<double> weights;
    double ridge_lambda = 1e-3;
    FeatureMatrix support;
    std::vector<double> dual_coeffs;

    FeatureMap feature_map() const { return {circuit, weights}; }

    /// Builds the training kernel (charged to `ledger.kernel`) and solves for
    /// the dual coefficients. Returns the training accuracy, read off the
    /// training kernel without further device calls.
    double fit(const FeatureMatrix& x, std::span<const double> y, BudgetLedger& ledger) {
        if (x.rows() < 2 || x.rows() != y.size()) {
            throw DataError("kernel classifier needs at least two labelled rows");
        }
        if (weights.size() != circuit.param_count()) {
            throw ShapeError("feature-map weights do not match its circuit");
        }
        Eigen::VectorXd t(static_cast<Eigen::Index>(y.size()));
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (y[i] != 0.0 && y[i] != 1.0) {
                throw DataError("classification labels must be 0 or 1");
            }
            t(static_cast<Eigen::Index>(i)) = 1.0 - 2.0 * y[i];
        }
        const Eigen::MatrixXd k = kernel_matrix(feature_map(), x, ledger.kernel);
        const Eigen::VectorXd alpha = ridge_solve(k, t, ridge_lambda);
        support = x;
        dual_coeffs.assign(alpha.data(), alpha.data() + alpha.size());

        const Eigen::VectorXd decision = k * alpha;
        std::vector<int> labels(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) {
            labels[i] = label_from_decision(decision(static_cast<Eigen::Index>(i)));
        }
        return mean_accuracy(labels, y);
    }

    double decision(std::span<const double> x, CallCounter& counter) const {
        if (support.empty() || dual_coeffs.size() != support.rows()) {
            throw std::logic_error("kernel classifier is not trained");
        }
        double d = 0.0;
        for (std::size_t i = 0; i < support.rows(); ++i) {
            d += dual_coeffs[i] * kernel_value(feature_map(), support.row(i), x, counter);
        }
        return d;
    }

    int predict(std::span<const double> x, CallCounter& counter) const {
        return label_from_decision(decision(x, counter));
    }

    std::vector<int> predict_labels(const FeatureMatrix& x, CallCounter& counter) const {
        std::vector<int> out(x.rows());
        for (std::size_t i = 0; i < x.rows(); ++i) {
            out[i] = predict(x.row(i), counter);
        }
        return out;
    }

    Score score(const FeatureMatrix& x, std::span<const double> y, CallCounter& counter) const {
        return {mean_accuracy(predict_labels(x, counter), y), ScoreKind::MeanAccuracy};
    }
};

}  // namespace aqml
