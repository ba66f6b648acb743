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
#include <numbers>

#include "aqml/circuit.hpp"
#include "aqml/registry.hpp"
#include "aqml/rng.hpp"
#include "oracle.hpp"

using namespace aqml;

namespace {

CircuitSpec make_spec(const Registry& reg, const std::string& emb, int n, const std::vector<std::string>& layers) {
    CircuitSpec s;
    s.n_wires = n;
    s.embedding = reg.embedding(emb);
    for (const auto& l : layers) s.layers.push_back(reg.layer(l));
    return s;
}

std::vector<std::string> random_layers(Rng& r, std::size_t count) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(r.index(2) ? "StronglyEntangling" : "BasicEntangler");
    return out;
}

std::vector<double> random_vec(Rng& r, std::size_t n, double lo, double hi) {
    std::vector<double> v(n);
    for (auto& x : v) x = r.uniform(lo, hi);
    return v;
}

}  // namespace

TEST(Registry, DefaultTables) {
    const auto reg = default_registry();
    ASSERT_EQ(reg.embeddings().size(), 2u);
    EXPECT_EQ(reg.embeddings()[0].name, "ANGLE");
    EXPECT_EQ(reg.embeddings()[1].name, "AMPLITUDE");
    EXPECT_EQ(reg.embeddings()[1].fixed_options["pad_with"], 0);
    EXPECT_EQ(reg.embeddings()[1].fixed_options["normalize"], true);
    ASSERT_EQ(reg.layers().size(), 2u);
    EXPECT_EQ(reg.layers()[0].name, "BasicEntangler");
    EXPECT_EQ(reg.layers()[1].name, "StronglyEntangling");
    EXPECT_EQ(reg.model("QNN").n_layers, std::make_pair(1, 3));
    EXPECT_EQ(reg.model("QEK").n_layers, std::make_pair(3, 5));
    EXPECT_EQ(reg.model("QNN").int_ranges.at(0).low, 15);
    EXPECT_EQ(reg.model("QNN").int_ranges.at(0).high, 25);
    EXPECT_EQ(reg.models_for(TaskType::Classification).size(), 2u);
    EXPECT_EQ(reg.models_for(TaskType::Clustering).size(), 1u);
    EXPECT_THROW(reg.layer("Nope"), RegistryError);
}

TEST(Registry, RejectsDuplicatesAndBadRanges) {
    auto reg = default_registry();
    EXPECT_THROW(reg.register_layer(basic_entangler_layer()), RegistryError);
    EXPECT_THROW(reg.register_embedding(angle_embedding()), RegistryError);
    ModelFamilyConfig bad{"X", TaskType::Regression, ModelKind::QNNRegressor, {{"b", 5, 4}}, {}, {}, {1, 1}};
    EXPECT_THROW(reg.register_model(bad), RegistryError);
    ModelFamilyConfig ok{"Y", TaskType::Regression, ModelKind::QNNRegressor, {}, {}, nullptr, {1, 2}};
    reg.register_model(ok);
    EXPECT_TRUE(reg.model("Y").fixed_options.is_object());
}

TEST(Layers, ParamCountsExhaustive) {
    const auto reg = default_registry();
    for (int n = 1; n <= 6; ++n) {
        for (int depth = 1; depth <= 4; ++depth) {
            for (int mask = 0; mask < (1 << depth); ++mask) {
                std::vector<std::string> names;
                std::size_t expect = 0;
                for (int i = 0; i < depth; ++i) {
                    const bool strong = (mask >> i) & 1;
                    names.push_back(strong ? "StronglyEntangling" : "BasicEntangler");
                    expect += strong ? 3u * n : static_cast<std::size_t>(n);
                }
                const auto spec = make_spec(reg, "ANGLE", n, names);
                ASSERT_EQ(spec.param_count(), expect);
                std::vector<double> w(expect, 0.1);
                EXPECT_NO_THROW(check_shiftable(spec, w));
            }
        }
    }
}

TEST(Layers, CnotRingShape) {
    std::vector<Gate> g;
    append_cnot_ring(g, 1);
    EXPECT_TRUE(g.empty());
    append_cnot_ring(g, 2);
    ASSERT_EQ(g.size(), 2u);
    EXPECT_EQ(g[0].wires, (std::vector<int>{0, 1}));
    EXPECT_EQ(g[1].wires, (std::vector<int>{1, 0}));
    g.clear();
    append_cnot_ring(g, 4);
    ASSERT_EQ(g.size(), 4u);
    EXPECT_EQ(g[3].wires, (std::vector<int>{3, 0}));
}

TEST(Layers, WrongWeightCountRejected) {
    std::vector<double> w(5);
    EXPECT_THROW(build_layer(strongly_entangling_layer(), 2, w), ShapeError);
    const auto reg = default_registry();
    const auto spec = make_spec(reg, "ANGLE", 2, {"BasicEntangler"});
    CallCounter c;
    std::vector<double> x{0.1, 0.2};
    EXPECT_THROW(run_circuit(spec, w, x, c), ShapeError);
    EXPECT_EQ(c.total(), 0u);
}

TEST(Embedding, AngleMatchesOracleAndPadsWires) {
    Rng r(4);
    const auto emb = angle_embedding();
    for (int t = 0; t < 50; ++t) {
        const int n = 1 + static_cast<int>(r.index(4));
        const auto f = 1 + r.index(static_cast<std::size_t>(n));
        const auto x = random_vec(r, f, -3, 3);
        const auto s = embed(emb, x, n);
        const auto v = oracle::angle_circuit(n, x, {}, {});
        for (std::size_t i = 0; i < s.dim(); ++i)
            ASSERT_NEAR(std::abs(s[i] - v(static_cast<Eigen::Index>(i))), 0.0, 1e-12);
    }
    std::vector<double> x(3, 0.1);
    EXPECT_THROW(embed(emb, x, 2), ShapeError);
}

TEST(Embedding, AmplitudeIsNormalizedAndPadded) {
    Rng r(6);
    const auto emb = amplitude_embedding();
    for (int t = 0; t < 500; ++t) {
        const auto f = 1 + r.index(9);
        const double scale = t % 5 == 0 ? 1e-8 : 10.0;
        auto x = random_vec(r, f, -scale, scale);
        const int n = amplitude_wires(f);
        EXPECT_EQ(emb.wires_for(f), n);
        const auto s = embed(emb, x, n);
        ASSERT_NEAR(s.norm_squared(), 1.0, 1e-12);
        double sq = 0;
        for (double v : x) sq += v * v;
        for (std::size_t i = 0; i < s.dim(); ++i) {
            const double expect = i < f ? x[i] / std::sqrt(sq) : 0.0;
            ASSERT_NEAR(s[i].real(), expect, 1e-12);
            ASSERT_EQ(s[i].imag(), 0.0);
        }
    }
    EXPECT_EQ(amplitude_wires(1), 1);
    EXPECT_EQ(amplitude_wires(4), 2);
    EXPECT_EQ(amplitude_wires(5), 3);
    std::vector<double> zero(4, 0.0);
    EXPECT_THROW(embed(emb, zero, 2), DataError);
    std::vector<double> five(5, 1.0);
    EXPECT_THROW(embed(emb, five, 2), ShapeError);
}

TEST(Circuit, MatchesDenseOracle) {
    const auto reg = default_registry();
    Rng r(10);
    for (int t = 0; t < 60; ++t) {
        const int n = 1 + static_cast<int>(r.index(3));
        const auto names = random_layers(r, 1 + r.index(3));
        const auto spec = make_spec(reg, "ANGLE", n, names);
        const auto w = random_vec(r, spec.param_count(), 0, 2 * std::numbers::pi);
        const auto x = random_vec(r, static_cast<std::size_t>(n), -2, 2);
        CallCounter c;
        const auto s = run_circuit(spec, w, x, c);
        EXPECT_EQ(c.total(), 1u);
        const auto v = oracle::angle_circuit(n, x, names, w);
        for (std::size_t i = 0; i < s.dim(); ++i)
            ASSERT_NEAR(std::abs(s[i] - v(static_cast<Eigen::Index>(i))), 0.0, 1e-12) << "trial " << t;
    }
}

TEST(Circuit, ParameterShiftMatchesFiniteDifferences) {
    const auto reg = default_registry();
    Rng r(77);
    int checked = 0;
    while (checked < 50) {
        const int n = 1 + static_cast<int>(r.index(4));
        const auto names = random_layers(r, 1 + r.index(3));
        const bool amp = r.index(2) == 1;
        const auto spec = make_spec(reg, amp ? "AMPLITUDE" : "ANGLE", n, names);
        if (spec.param_count() > 12) continue;
        const auto w = random_vec(r, spec.param_count(), 0, 2 * std::numbers::pi);
        const auto x = random_vec(r, amp ? (std::size_t{1} << n) : static_cast<std::size_t>(n), -1, 1);
        const int wire = static_cast<int>(r.index(static_cast<std::size_t>(n)));
        CallCounter c;
        const auto g = parameter_shift_gradient(spec, w, x, wire, c);
        EXPECT_EQ(c.total(), 2 * spec.param_count());
        const double h = 1e-5;
        for (std::size_t j = 0; j < w.size(); ++j) {
            auto wp = w, wm = w;
            wp[j] += h;
            wm[j] -= h;
            CallCounter scratch;
            const double fp = expectation_z(run_circuit(spec, wp, x, scratch), wire);
            const double fm = expectation_z(run_circuit(spec, wm, x, scratch), wire);
            ASSERT_NEAR(g[j], (fp - fm) / (2 * h), 1e-6);
        }
        ++checked;
    }
}

TEST(Circuit, ShiftRuleRequiresSingleUse) {
    auto shared = basic_entangler_layer();
    shared.name = "Shared";
    shared.params_per_layer = [](int) { return std::size_t{1}; };
    shared.build = [](int n, std::span<const double> w) {
        std::vector<Gate> g;
        for (int i = 0; i < n; ++i) {
            Gate x = ry(i, w[0]);
            x.params = {0};
            g.push_back(x);
        }
        return g;
    };
    CircuitSpec spec;
    spec.n_wires = 2;
    spec.embedding = angle_embedding();
    spec.layers = {shared};
    std::vector<double> w{0.3};
    EXPECT_THROW(check_shiftable(spec, w), ShapeError);

    auto unused = shared;
    unused.params_per_layer = [](int) { return std::size_t{2}; };
    unused.build = [](int, std::span<const double> w2) {
        Gate x = ry(0, w2[0]);
        x.params = {0};
        return std::vector<Gate>{x};
    };
    spec.layers = {unused};
    std::vector<double> w2{0.3, 0.4};
    EXPECT_THROW(check_shiftable(spec, w2), ShapeError);
}
