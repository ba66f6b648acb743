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
 * @file selection.hpp
 * The study objective.
 *
 * Among complete feasible trials the winner has the fewest device calls,
 * then the higher mean score, then the lower trial id. With no feasible
 * trial the best complete trial by mean score (then fewer calls, then lower
 * id) is returned and flagged infeasible. Failed trials never win.
 */
#pragma once

#include <optional>
#include <span>

#include "aqml/finder/record.hpp"

namespace aqml {

struct Selection {
    std::size_t index = 0;
    bool feasible = false;
};

/// True if `a` beats `b` as a feasible candidate.
inline bool better_feasible(const TrialRecord& a, const TrialRecord& b) noexcept {
    if (a.total_calls != b.total_calls) return a.total_calls < b.total_calls;
    if (a.mean_score != b.mean_score) return a.mean_score > b.mean_score;
    return a.trial_id < b.trial_id;
}

/// True if `a` beats `b` on score alone (infeasible fallback, tuner objective).
inline bool better_score(const TrialRecord& a, const TrialRecord& b) noexcept {
    if (a.mean_score != b.mean_score) return a.mean_score > b.mean_score;
    if (a.total_calls != b.total_calls) return a.total_calls < b.total_calls;
    return a.trial_id < b.trial_id;
}

inline std::optional<Selection> select_best(std::span<const TrialRecord> records) {
    std::optional<std::size_t> feasible, fallback;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        if (!r.complete()) continue;
        if (r.feasible && (!feasible || better_feasible(r, records[*feasible]))) feasible = i;
        if (!fallback || better_score(r, records[*fallback])) fallback = i;
    }
    if (feasible) return Selection{*feasible, true};
    if (fallback) return Selection{*fallback, false};
    return std::nullopt;
}

/// Best complete trial by score; used by the optimizer tuner.
inline std::optional<std::size_t> select_best_score(std::span<const TrialRecord> records) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (records[i].complete() && (!best || better_score(records[i], records[*best]))) best = i;
    }
    return best;
}

}  // namespace aqml
