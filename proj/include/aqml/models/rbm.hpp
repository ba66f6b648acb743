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
 * @file rbm.hpp
 * Classical clustering pipeline: a binary autoencoder feeding a restricted
 * Boltzmann machine whose thresholded hidden activations name the cluster.
 *
 * Phase 1 trains the encoder (a stack of affine+sigmoid maps ending at the
 * latent width) together with a single affine+sigmoid decoder on min-max
 * scaled inputs, by per-sample gradient descent on the squared
 * reconstruction error. Phase 2 binarizes latents at 0.5 and trains the RBM
 * with one-step contrastive divergence. The cluster id sets bit j when
 * hidden unit j fires, i.e. p(h_j = 1 | v) >= firing_threshold.
 *
 * No device calls are made anywhere in this file.
 */
#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "aqml/data.hpp"
#include "aqml/errors.hpp"
#include "aqml/models/scoring.hpp"
#include "aqml/rng.hpp"

namespace aqml {

inline double sigmoid(double z) noexcept { return 1.0 / (1.0 + std::exp(-z)); }

inline Eigen::VectorXd sigmoid(const Eigen::VectorXd& z) {
    return z.unaryExpr([](double v) { return sigmoid(v); });
}

struct DenseLayer {
    Eigen::MatrixXd weights;  // out x in
    Eigen::VectorXd bias;

    Eigen::VectorXd forward(const Eigen::VectorXd& x) const { return sigmoid(weights * x + bias); }

    static DenseLayer xavier(Eigen::Index in, Eigen::Index out, Rng& rng) {
        const double a = std::sqrt(6.0 / static_cast<double>(in + out));
        DenseLayer l{Eigen::MatrixXd(out, in), Eigen::VectorXd::Zero(out)};
        for (Eigen::Index r = 0; r < out; ++r) {
            for (Eigen::Index c = 0; c < in; ++c) {
                l.weights(r, c) = rng.uniform(-a, a);
            }
        }
        return l;
    }
};

struct BinaryEncoder {
    std::vector<DenseLayer> layers;

    Eigen::VectorXd encode(const Eigen::VectorXd& x) const {
        Eigen::VectorXd a = x;
        for (const auto& l : layers) {
            a = l.forward(a);
        }
        return a;
    }
};

/// Layer widths from `input` down to `latent` in `n_layers` maps, linearly interpolated.
inline std::vector<int> encoder_widths(int input, int latent, int n_layers) {
    std::vector<int> w(static_cast<std::size_t>(n_layers) + 1);
    for (int k = 0; k <= n_layers; ++k) {
        w[static_cast<std::size_t>(k)] =
            static_cast<int>(std::lround(input + static_cast<double>(latent - input) * k / n_layers));
    }
    w.back() = latent;
    return w;
}

struct RBM {
    Eigen::MatrixXd weights;  // visible x hidden
    Eigen::VectorXd visible_bias;
    Eigen::VectorXd hidden_bias;

    static RBM random(Eigen::Index n_visible, Eigen::Index n_hidden, Rng& rng) {
        RBM r{Eigen::MatrixXd(n_visible, n_hidden), Eigen::VectorXd::Zero(n_visible), Eigen::VectorXd::Zero(n_hidden)};
        for (Eigen::Index i = 0; i < n_visible; ++i) {
            for (Eigen::Index j = 0; j < n_hidden; ++j) {
                r.weights(i, j) = 0.01 * rng.normal();
            }
        }
        return r;
    }

    Eigen::VectorXd hidden_probabilities(const Eigen::VectorXd& v) const {
        return sigmoid(weights.transpose() * v + hidden_bias);
    }
    Eigen::VectorXd visible_probabilities(const Eigen::VectorXd& h) const { return sigmoid(weights * h + visible_bias); }

    /// Mean over rows of |v - p(v | p(h | v))|^2, using mean-field activations.
    double reconstruction_error(const Eigen::MatrixXd& data) const {
        double err = 0.0;
        for (Eigen::Index r = 0; r < data.rows(); ++r) {
            const Eigen::VectorXd v = data.row(r).transpose();
            err += (v - visible_probabilities(hidden_probabilities(v))).squaredNorm();
        }
        return data.rows() > 0 ? err / static_cast<double>(data.rows()) : 0.0;
    }

    /// One CD-1 pass over the rows of `data` in shuffled order, one update per row.
    void cd1_epoch(const Eigen::MatrixXd& data, double learning_rate, Rng& rng) {
        std::vector<std::size_t> order(static_cast<std::size_t>(data.rows()));
        std::iota(order.begin(), order.end(), std::size_t{0});
        rng.shuffle(std::span<std::size_t>(order));
        Eigen::VectorXd h0(hidden_bias.size());
        for (std::size_t r : order) {
            const Eigen::VectorXd v0 = data.row(static_cast<Eigen::Index>(r)).transpose();
            const Eigen::VectorXd ph0 = hidden_probabilities(v0);
            for (Eigen::Index j = 0; j < h0.size(); ++j) {
                h0(j) = rng.uniform01() < ph0(j) ? 1.0 : 0.0;
            }
            const Eigen::VectorXd v1 = visible_probabilities(h0);
            const Eigen::VectorXd ph1 = hidden_probabilities(v1);
            weights += learning_rate * (v0 * ph0.transpose() - v1 * ph1.transpose());
            visible_bias += learning_rate * (v0 - v1);
            hidden_bias += learning_rate * (ph0 - ph1);
        }
    }
};

/// Per-feature min-max scaling onto [0, 1]; constant features map to 0.
struct MinMaxScaler {
    std::vector<double> low;
    std::vector<double> high;

    static MinMaxScaler fit(const FeatureMatrix& x) {
        MinMaxScaler s{std::vector<double>(x.cols(), 0.0), std::vector<double>(x.cols(), 1.0)};
        for (std::size_t c = 0; c < x.cols(); ++c) {
            double lo = x.row(0)[c], hi = lo;
            for (std::size_t r = 1; r < x.rows(); ++r) {
                lo = std::min(lo, x.row(r)[c]);
                hi = std::max(hi, x.row(r)[c]);
            }
            s.low[c] = lo;
            s.high[c] = hi;
        }
        return s;
    }

    Eigen::VectorXd transform(std::span<const double> x) const {
        if (x.size() != low.size()) {
            throw ShapeError("expected " + std::to_string(low.size()) + " features, got " + std::to_string(x.size()));
        }
        Eigen::VectorXd out(static_cast<Eigen::Index>(x.size()));
        for (std::size_t c = 0; c < x.size(); ++c) {
            const double range = high[c] - low[c];
            out(static_cast<Eigen::Index>(c)) = range > 0.0 ? (x[c] - low[c]) / range : 0.0;
        }
        return out;
    }
};

/// Cluster id from hidden activation probabilities: bit j set iff p_j >= threshold.
inline std::uint64_t cluster_id_from_probabilities(std::span<const double> p, double threshold) {
    if (p.size() > 63) {
        throw ShapeError("at most 63 hidden units can be encoded in a cluster id");
    }
    std::uint64_t id = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j] >= threshold) id |= std::uint64_t{1} << j;
    }
    return id;
}

struct RBMClusterer {
    int input_size = 0;
    int encoder_layers = 1;
    int latent_size = 1;
    int n_hidden = 1;
    double firing_threshold = 0.5;
    std::size_t n_epochs = 10;
    double encoder_learning_rate = 0.5;
    double rbm_learning_rate = 0.1;

    MinMaxScaler scaler;
    BinaryEncoder encoder;
    DenseLayer decoder;
    RBM rbm;

    /// Random weights for an `input`-feature pipeline; scaler set to identity.
    void initialize(int input, std::uint64_t seed) {
        if (latent_size < 1) throw std::invalid_argument("latent size must be at least 1");
        if (n_hidden < 1) throw std::invalid_argument("hidden unit count must be at least 1");
        if (n_hidden > 63) throw std::invalid_argument("hidden unit count must be at most 63");
        if (encoder_layers < 1) throw std::invalid_argument("encoder needs at least one layer");
        if (input < 1) throw std::invalid_argument("input size must be at least 1");
        input_size = input;
        Rng rng(seed);
        const auto widths = encoder_widths(input, latent_size, encoder_layers);
        encoder.layers.clear();
        for (std::size_t k = 0; k + 1 < widths.size(); ++k) {
            encoder.layers.push_back(DenseLayer::xavier(widths[k], widths[k + 1], rng));
        }
        decoder = DenseLayer::xavier(latent_size, input, rng);
        rbm = RBM::random(latent_size, n_hidden, rng);
        scaler = {std::vector<double>(static_cast<std::size_t>(input), 0.0),
                  std::vector<double>(static_cast<std::size_t>(input), 1.0)};
    }

    /// Binary latent code of a raw feature row.
    Eigen::VectorXd binary_latent(std::span<const double> x) const {
        const Eigen::VectorXd z = encoder.encode(scaler.transform(x));
        return z.unaryExpr([](double v) { return v >= 0.5 ? 1.0 : 0.0; });
    }

    std::uint64_t cluster_assign(std::span<const double> x) const {
        const Eigen::VectorXd p = rbm.hidden_probabilities(binary_latent(x));
        return cluster_id_from_probabilities(std::span<const double>(p.data(), static_cast<std::size_t>(p.size())),
                                             firing_threshold);
    }

    std::vector<std::uint64_t> assign_all(const FeatureMatrix& x) const {
        std::vector<std::uint64_t> out(x.rows());
        for (std::size_t i = 0; i < x.rows(); ++i) {
            out[i] = cluster_assign(x.row(i));
        }
        return out;
    }

    /// Both training phases. Weights must already be initialized for x.cols() inputs.
    void fit(const FeatureMatrix& x, std::uint64_t seed) {
        if (x.empty()) {
            throw DataError("cannot cluster an empty dataset");
        }
        if (input_size != static_cast<int>(x.cols()) || encoder.layers.empty()) {
            throw ShapeError("clusterer was initialized for " + std::to_string(input_size) + " features, data has " +
                             std::to_string(x.cols()));
        }
        scaler = MinMaxScaler::fit(x);
        Rng rng(seed);
        std::vector<Eigen::VectorXd> scaled;
        scaled.reserve(x.rows());
        for (std::size_t r = 0; r < x.rows(); ++r) {
            scaled.push_back(scaler.transform(x.row(r)));
        }
        train_autoencoder(scaled, rng);

        Eigen::MatrixXd codes(static_cast<Eigen::Index>(x.rows()), latent_size);
        for (std::size_t r = 0; r < x.rows(); ++r) {
            codes.row(static_cast<Eigen::Index>(r)) = binary_latent(x.row(r)).transpose();
        }
        for (std::size_t e = 0; e < n_epochs; ++e) {
            rbm.cd1_epoch(codes, rbm_learning_rate, rng);
        }
    }

    /// Mean squared reconstruction error of the autoencoder on scaled rows.
    double autoencoder_error(const std::vector<Eigen::VectorXd>& scaled) const {
        double err = 0.0;
        for (const auto& v : scaled) {
            err += (decoder.forward(encoder.encode(v)) - v).squaredNorm();
        }
        return scaled.empty() ? 0.0 : err / static_cast<double>(scaled.size());
    }

    Score score(const FeatureMatrix& x) const {
        return {silhouette_score(x, assign_all(x)), ScoreKind::Silhouette};
    }

private:
    void train_autoencoder(const std::vector<Eigen::VectorXd>& scaled, Rng& rng) {
        std::vector<std::size_t> order(scaled.size());
        std::vector<Eigen::VectorXd> acts(encoder.layers.size() + 1);
        for (std::size_t e = 0; e < n_epochs; ++e) {
            std::iota(order.begin(), order.end(), std::size_t{0});
            rng.shuffle(std::span<std::size_t>(order));
            for (std::size_t r : order) {
                acts[0] = scaled[r];
                for (std::size_t k = 0; k < encoder.layers.size(); ++k) {
                    acts[k + 1] = encoder.layers[k].forward(acts[k]);
                }
                const Eigen::VectorXd out = decoder.forward(acts.back());
                Eigen::VectorXd delta = ((out - scaled[r]).array() * out.array() * (1.0 - out.array())).matrix();
                Eigen::VectorXd back = decoder.weights.transpose() * delta;
                decoder.weights -= encoder_learning_rate * delta * acts.back().transpose();
                decoder.bias -= encoder_learning_rate * delta;
                for (std::size_t k = encoder.layers.size(); k-- > 0;) {
                    const Eigen::VectorXd& a = acts[k + 1];
                    delta = (back.array() * a.array() * (1.0 - a.array())).matrix();
                    back = encoder.layers[k].weights.transpose() * delta;
                    encoder.layers[k].weights -= encoder_learning_rate * delta * acts[k].transpose();
                    encoder.layers[k].bias -= encoder_learning_rate * delta;
                }
            }
        }
    }
};

}  // namespace aqml
