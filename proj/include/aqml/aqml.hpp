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
#pragma once

#include "aqml/budget.hpp"
#include "aqml/circuit.hpp"
#include "aqml/data.hpp"
#include "aqml/embedding.hpp"
#include "aqml/errors.hpp"
#include "aqml/finder/finder.hpp"
#include "aqml/finder/record.hpp"
#include "aqml/finder/selection.hpp"
#include "aqml/finder/suggest.hpp"
#include "aqml/finder/trial.hpp"
#include "aqml/finder/tuner.hpp"
#include "aqml/layers.hpp"
#include "aqml/models/model.hpp"
#include "aqml/models/qek.hpp"
#include "aqml/models/qnn.hpp"
#include "aqml/models/rbm.hpp"
#include "aqml/models/scoring.hpp"
#include "aqml/optim.hpp"
#include "aqml/qsim.hpp"
#include "aqml/registry.hpp"
#include "aqml/rng.hpp"
#include "aqml/store/csv.hpp"
#include "aqml/store/model_io.hpp"
#include "aqml/store/report.hpp"
#include "aqml/store/study_store.hpp"
#include "aqml/training.hpp"
