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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aqml {

/// Shape, wire-index or length contract violated by the caller.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input data unusable for the requested task (single class, constant targets, ...).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A metric is undefined for the given input, e.g. silhouette with one cluster.
class ScoreError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RegistryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// No trial of a study completed.
class StudyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedModelError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed or truncated persisted data. `index()` is the zero-based record
/// (or line) at which reading stopped.
class CorruptDataError : public std::runtime_error {
public:
    CorruptDataError(std::size_t index, const std::string& what)
        : std::runtime_error("record " + std::to_string(index) + ": " + what), index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

}  // namespace aqml
