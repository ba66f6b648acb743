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
 * @file budget.hpp
 * Per-phase accounting of simulated quantum device calls.
 */
#pragma once

#include <cstdint>

#include "aqml/qsim.hpp"

namespace aqml {

/// Plain snapshot of a ledger; what gets persisted with a trial.
struct LedgerTotals {
    std::uint64_t training_gradients = 0;
    std::uint64_t training_forward = 0;
    std::uint64_t scoring = 0;
    std::uint64_t kernel = 0;

    std::uint64_t total() const noexcept { return training_gradients + training_forward + scoring + kernel; }

    LedgerTotals& operator+=(const LedgerTotals& o) noexcept {
        training_gradients += o.training_gradients;
        training_forward += o.training_forward;
        scoring += o.scoring;
        kernel += o.kernel;
        return *this;
    }

    bool operator==(const LedgerTotals&) const = default;
};

/// Live ledger. Each phase is its own counter so code can charge a phase by
/// passing the matching counter down to the simulator.
struct BudgetLedger {
    CallCounter training_gradients;
    CallCounter training_forward;
    CallCounter scoring;
    CallCounter kernel;

    std::uint64_t total() const noexcept {
        return training_gradients.total() + training_forward.total() + scoring.total() + kernel.total();
    }

    LedgerTotals snapshot() const noexcept {
        return {training_gradients.total(), training_forward.total(), scoring.total(), kernel.total()};
    }
};

}  // namespace aqml
