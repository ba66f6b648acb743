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
// Fixed datasets shared by unit and acceptance tests.
#pragma once

#include <cmath>
#include <filesystem>
#include <string>
#include <numbers>
#include <vector>

#include <unistd.h>

#include "aqml/data.hpp"
#include "aqml/rng.hpp"

namespace fixtures {

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("aqml_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

/// 40 points, 2 features, alternating labels. Class 0 is uniform in
/// [-1.3, -0.3]^2 and class 1 in [0.3, 1.3]^2, so x0 + x1 = 0 separates them.
inline aqml::Dataset separable_blobs(std::uint64_t seed = 12345, std::size_t n = 40) {
    aqml::Rng rng(seed);
    std::vector<std::vector<double>> rows;
    aqml::Dataset d;
    for (std::size_t i = 0; i < n; ++i) {
        const int cls = static_cast<int>(i % 2);
        const double c = cls ? 0.8 : -0.8;
        rows.push_back({c + 0.5 * rng.uniform(-1, 1), c + 0.5 * rng.uniform(-1, 1)});
        d.targets.push_back(cls);
    }
    d.features = aqml::FeatureMatrix::from_rows(rows);
    d.feature_names = {"x0", "x1"};
    return d;
}

/// The 8-point toy set: two tight groups in opposite quadrants.
inline aqml::Dataset toy_eight() {
    aqml::Dataset d;
    d.features = aqml::FeatureMatrix::from_rows({{-1.0, -0.9},
                                                 {-0.8, -1.1},
                                                 {-1.2, -0.7},
                                                 {-0.9, -1.0},
                                                 {0.9, 1.0},
                                                 {1.1, 0.8},
                                                 {0.7, 1.2},
                                                 {1.0, 0.9}});
    d.targets = {0, 0, 0, 0, 1, 1, 1, 1};
    d.feature_names = {"x0", "x1"};
    return d;
}

/// All 4x4 bars-and-stripes images, flattened row-major (30 distinct patterns
/// after removing the duplicated all-zero and all-one images).
inline aqml::FeatureMatrix bars_and_stripes() {
    std::vector<std::vector<double>> rows;
    auto add = [&](const std::vector<double>& img) {
        for (const auto& r : rows)
            if (r == img) return;
        rows.push_back(img);
    };
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<double> bars(16), stripes(16);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                bars[r * 4 + c] = (mask >> c) & 1;
                stripes[r * 4 + c] = (mask >> r) & 1;
            }
        add(bars);
        add(stripes);
    }
    return aqml::FeatureMatrix::from_rows(rows);
}

/// Two well separated Gaussian-ish clusters in `dim` dimensions.
inline aqml::Dataset two_clusters(std::size_t dim, std::size_t n = 30, std::uint64_t seed = 5) {
    aqml::Rng rng(seed);
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> r(dim);
        for (auto& v : r) v = (i % 2 ? 4.0 : -4.0) + 0.3 * rng.normal();
        rows.push_back(r);
    }
    aqml::Dataset d;
    d.features = aqml::FeatureMatrix::from_rows(rows);
    for (std::size_t c = 0; c < dim; ++c) d.feature_names.push_back("f" + std::to_string(c));
    return d;
}

/// y = cos(x) on 20 evenly spaced points in [0.05, pi]; no all-zero row.
inline aqml::Dataset cosine_curve() {
    aqml::Dataset d;
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < 20; ++i) {
        const double x = 0.05 + (std::numbers::pi - 0.05) * i / 19.0;
        rows.push_back({x});
        d.targets.push_back(std::cos(x));
    }
    d.features = aqml::FeatureMatrix::from_rows(rows);
    d.feature_names = {"x"};
    return d;
}

}  // namespace fixtures
