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
 * @file scoring.hpp
 * Model quality metrics: mean accuracy, R^2 and the silhouette coefficient.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "aqml/data.hpp"
#include "aqml/errors.hpp"

namespace aqml {

enum class ScoreKind { MeanAccuracy, Silhouette, R2 };

inline std::string_view to_string(ScoreKind k) noexcept {
    switch (k) {
        case ScoreKind::MeanAccuracy: return "mean_accuracy";
        case ScoreKind::Silhouette: return "silhouette";
        case ScoreKind::R2: return "r2";
    }
    return "?";
}

struct Score {
    double value = 0.0;
    ScoreKind kind = ScoreKind::MeanAccuracy;
};

inline double mean_accuracy(std::span<const int> predicted, std::span<const double> labels) {
    if (predicted.size() != labels.size() || predicted.empty()) {
        throw ShapeError("accuracy needs equal, non-empty prediction and label vectors");
    }
    std::size_t hits = 0;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        hits += static_cast<double>(predicted[i]) == labels[i];
    }
    return static_cast<double>(hits) / static_cast<double>(predicted.size());
}

/// Coefficient of determination. Constant targets make it undefined.
inline double r2_score(std::span<const double> predicted, std::span<const double> targets) {
    if (predicted.size() != targets.size() || targets.empty()) {
        throw ShapeError("r2 needs equal, non-empty prediction and target vectors");
    }
    double mean = 0.0;
    for (double t : targets) mean += t;
    mean /= static_cast<double>(targets.size());
    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        ss_res += (targets[i] - predicted[i]) * (targets[i] - predicted[i]);
        ss_tot += (targets[i] - mean) * (targets[i] - mean);
    }
    if (ss_tot == 0.0) {
        throw ScoreError("r2 is undefined for constant targets");
    }
    return 1.0 - ss_res / ss_tot;
}

/// Mean silhouette over Euclidean distances. Defined for 2 <= clusters <= N-1;
/// a point alone in its cluster contributes 0.
inline double silhouette_score(const FeatureMatrix& x, std::span<const std::uint64_t> labels) {
    const std::size_t n = x.rows();
    if (labels.size() != n) {
        throw ShapeError("silhouette needs one label per row");
    }
    std::map<std::uint64_t, std::size_t> cluster_index;
    for (auto l : labels) {
        cluster_index.emplace(l, cluster_index.size());
    }
    const std::size_t k = cluster_index.size();
    if (k < 2 || k > n - 1) {
        throw ScoreError("silhouette is undefined for " + std::to_string(k) + " cluster(s) over " + std::to_string(n) +
                         " points");
    }
    std::vector<std::size_t> cid(n), sizes(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
        cid[i] = cluster_index[labels[i]];
        ++sizes[cid[i]];
    }

    double total = 0.0;
    std::vector<double> sums(k);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(sums.begin(), sums.end(), 0.0);
        const auto xi = x.row(i);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const auto xj = x.row(j);
            double d2 = 0.0;
            for (std::size_t c = 0; c < xi.size(); ++c) {
                d2 += (xi[c] - xj[c]) * (xi[c] - xj[c]);
            }
            sums[cid[j]] += std::sqrt(d2);
        }
        if (sizes[cid[i]] == 1) {
            continue;
        }
        const double a = sums[cid[i]] / static_cast<double>(sizes[cid[i]] - 1);
        double b = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < k; ++c) {
            if (c != cid[i]) b = std::min(b, sums[c] / static_cast<double>(sizes[c]));
        }
        const double denom = std::max(a, b);
        total += denom > 0.0 ? (b - a) / denom : 0.0;
    }
    return total / static_cast<double>(n);
}

}  // namespace aqml
