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
 * @file trial.hpp
 * Trials and the sampler contract behind every suggestion.
 *
 * A trial owns its own Rng seeded from the trial seed, so the values it
 * samples depend only on (seed, call order) and never on which worker
 * thread runs it.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "aqml/embedding.hpp"  // Options
#include "aqml/rng.hpp"

namespace aqml {

/// Draws values for a trial. Implementations must stay within the bounds
/// they are given and be deterministic in the Rng stream.
class Sampler {
public:
    virtual ~Sampler() = default;
    virtual std::int64_t sample_int(Rng& rng, const std::string& name, std::int64_t low, std::int64_t high) const = 0;
    virtual double sample_float(Rng& rng, const std::string& name, double low, double high, bool log) const = 0;
    virtual std::size_t sample_categorical(Rng& rng, const std::string& name, std::size_t n_options) const = 0;
};

/// Uniform over each declared domain; log-uniform for log-scaled floats.
class RandomSampler final : public Sampler {
public:
    std::int64_t sample_int(Rng& rng, const std::string&, std::int64_t low, std::int64_t high) const override {
        return rng.uniform_int(low, high);
    }

    double sample_float(Rng& rng, const std::string&, double low, double high, bool log) const override {
        const double v = log ? std::exp(rng.uniform(std::log(low), std::log(high))) : rng.uniform(low, high);
        return std::clamp(v, low, high);
    }

    std::size_t sample_categorical(Rng& rng, const std::string&, std::size_t n_options) const override {
        return rng.index(n_options);
    }
};

inline const Sampler& default_sampler() {
    static const RandomSampler sampler;
    return sampler;
}

class Trial {
public:
    Trial(int trial_id, std::uint64_t seed, const Sampler& sampler = default_sampler())
        : id_(trial_id), seed_(seed), rng_(seed), sampler_(&sampler) {}

    int id() const noexcept { return id_; }
    std::uint64_t seed() const noexcept { return seed_; }

    /// Every value sampled so far, in sampling order.
    const Options& sampled() const noexcept { return sampled_; }

    std::int64_t suggest_int(const std::string& name, std::int64_t low, std::int64_t high) {
        if (const auto it = sampled_.find(name); it != sampled_.end()) {
            return it->get<std::int64_t>();
        }
        if (high < low) {
            throw std::invalid_argument("suggest_int('" + name + "'): empty range");
        }
        const auto v = sampler_->sample_int(rng_, name, low, high);
        sampled_[name] = v;
        return v;
    }

    double suggest_float(const std::string& name, double low, double high, bool log = false) {
        if (const auto it = sampled_.find(name); it != sampled_.end()) {
            return it->get<double>();
        }
        if (!(high >= low) || (log && !(low > 0.0))) {
            throw std::invalid_argument("suggest_float('" + name + "'): invalid range");
        }
        const double v = sampler_->sample_float(rng_, name, low, high, log);
        sampled_[name] = v;
        return v;
    }

    std::string suggest_categorical(const std::string& name, std::span<const std::string> options) {
        if (const auto it = sampled_.find(name); it != sampled_.end()) {
            return it->get<std::string>();
        }
        if (options.empty()) {
            throw std::invalid_argument("suggest_categorical('" + name + "'): no options");
        }
        const std::string v = options[sampler_->sample_categorical(rng_, name, options.size())];
        sampled_[name] = v;
        return v;
    }

private:
    int id_;
    std::uint64_t seed_;
    Rng rng_;
    const Sampler* sampler_;
    Options sampled_ = Options::object();
};

}  // namespace aqml
