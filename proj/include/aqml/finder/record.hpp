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
 * @file record.hpp
 * TrialRecord and its one-line JSON form (the study store line format).
 *
 * {"trial_id":0,"seed":...,"status":"complete","feasible":true,
 *  "mean_score":0.95,"per_seed_scores":[...],"total_calls":1234,
 *  "ledger":{"training_gradients":..,"training_forward":..,"scoring":..,"kernel":..},
 *  "sampled":{...},"error":""}
 *
 * mean_score is null for failed trials.
 */
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "aqml/budget.hpp"
#include "aqml/embedding.hpp"  // Options

namespace aqml {

enum class TrialStatus { Complete, Failed };

struct TrialRecord {
    int trial_id = 0;
    std::uint64_t seed = 0;
    Options sampled = Options::object();
    std::vector<double> per_seed_scores;
    double mean_score = std::numeric_limits<double>::quiet_NaN();
    std::uint64_t total_calls = 0;
    LedgerTotals ledger;
    bool feasible = false;
    TrialStatus status = TrialStatus::Failed;
    std::string error;

    bool complete() const noexcept { return status == TrialStatus::Complete; }
};

inline Options to_json(const TrialRecord& r) {
    Options j = Options::object();
    j["trial_id"] = r.trial_id;
    j["seed"] = r.seed;
    j["status"] = r.complete() ? "complete" : "failed";
    j["feasible"] = r.feasible;
    j["mean_score"] = std::isfinite(r.mean_score) ? Options(r.mean_score) : Options(nullptr);
    j["per_seed_scores"] = r.per_seed_scores;
    j["total_calls"] = r.total_calls;
    j["ledger"] = {{"training_gradients", r.ledger.training_gradients},
                   {"training_forward", r.ledger.training_forward},
                   {"scoring", r.ledger.scoring},
                   {"kernel", r.ledger.kernel}};
    j["sampled"] = r.sampled;
    j["error"] = r.error;
    return j;
}

inline TrialRecord record_from_json(const Options& j) {
    TrialRecord r;
    r.trial_id = j.at("trial_id").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    const auto status = j.at("status").get<std::string>();
    if (status != "complete" && status != "failed") {
        throw std::invalid_argument("unknown trial status '" + status + "'");
    }
    r.status = status == "complete" ? TrialStatus::Complete : TrialStatus::Failed;
    r.feasible = j.at("feasible").get<bool>();
    const auto& ms = j.at("mean_score");
    r.mean_score = ms.is_null() ? std::numeric_limits<double>::quiet_NaN() : ms.get<double>();
    r.per_seed_scores = j.at("per_seed_scores").get<std::vector<double>>();
    r.total_calls = j.at("total_calls").get<std::uint64_t>();
    const auto& l = j.at("ledger");
    r.ledger = {l.at("training_gradients").get<std::uint64_t>(), l.at("training_forward").get<std::uint64_t>(),
                l.at("scoring").get<std::uint64_t>(), l.at("kernel").get<std::uint64_t>()};
    r.sampled = j.at("sampled");
    r.error = j.value("error", std::string{});
    return r;
}

}  // namespace aqml
