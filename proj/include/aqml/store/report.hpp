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
 * @file report.hpp
 * CSV export of a study store, one row per trial:
 *   trial_id,status,feasible,mean_score,total_calls,<sampled names...>
 * Sampled columns are the union over all trials in first-seen order (trials
 * taken in trial_id order); absent values are blank, as is mean_score for
 * failed trials.
 */
#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "aqml/finder/selection.hpp"
#include "aqml/store/csv.hpp"
#include "aqml/store/study_store.hpp"

namespace aqml {

struct ReportSummary {
    std::size_t n_trials = 0;
    std::size_t n_complete = 0;
    std::size_t n_feasible = 0;
    std::optional<TrialRecord> best;
    bool best_feasible = false;
    std::string warning;
};

inline std::string format_cell(const Options& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_float()) return format_real(v.get<double>());
    return v.dump();
}

inline std::string report_csv(std::vector<TrialRecord> records) {
    std::stable_sort(records.begin(), records.end(),
                     [](const TrialRecord& a, const TrialRecord& b) { return a.trial_id < b.trial_id; });
    std::vector<std::string> names;
    for (const auto& r : records) {
        for (const auto& [k, v] : r.sampled.items()) {
            if (std::find(names.begin(), names.end(), k) == names.end()) names.push_back(k);
        }
    }
    std::string out = "trial_id,status,feasible,mean_score,total_calls";
    for (const auto& n : names) out += "," + n;
    out += "\n";
    for (const auto& r : records) {
        out += std::to_string(r.trial_id);
        out += r.complete() ? ",complete" : ",failed";
        out += r.feasible ? ",true," : ",false,";
        if (std::isfinite(r.mean_score)) out += format_real(r.mean_score);
        out += "," + std::to_string(r.total_calls);
        for (const auto& n : names) {
            out += ",";
            if (const auto it = r.sampled.find(n); it != r.sampled.end()) out += format_cell(*it);
        }
        out += "\n";
    }
    return out;
}

inline ReportSummary summarize(const std::vector<TrialRecord>& records) {
    ReportSummary s;
    s.n_trials = records.size();
    for (const auto& r : records) {
        s.n_complete += r.complete();
        s.n_feasible += r.complete() && r.feasible;
    }
    if (records.empty()) {
        s.warning = "study store is empty";
    } else if (const auto sel = select_best(records)) {
        s.best = records[sel->index];
        s.best_feasible = sel->feasible;
        if (!sel->feasible) s.warning = "no trial met the threshold; best is infeasible";
    } else {
        s.warning = "no trial completed";
    }
    return s;
}

inline ReportSummary export_report(const StudyStore& store, const std::filesystem::path& out_path) {
    const auto records = store.load();
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + out_path.string());
    out << report_csv(records);
    if (!out) throw std::runtime_error("write failed for " + out_path.string());
    return summarize(records);
}

}  // namespace aqml
