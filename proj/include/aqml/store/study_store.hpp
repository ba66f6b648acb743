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
 * @file study_store.hpp
 * Append-only, line-delimited JSON store of trial records.
 *
 * Each append is a single write(2) of one complete line on a descriptor
 * opened with O_APPEND, so concurrent appenders (threads sharing a store, or
 * separate StudyStore objects on the same file) never interleave inside a
 * line. A trailing line without its newline, or any unparsable line, is
 * reported as corruption at that record index.
 */
#pragma once

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <string>
#include <system_error>
#include <vector>

#include "aqml/errors.hpp"
#include "aqml/finder/record.hpp"

namespace aqml {

class StudyStore {
public:
    explicit StudyStore(std::filesystem::path path) : path_(std::move(path)) {}

    const std::filesystem::path& path() const noexcept { return path_; }

    void append(const TrialRecord& record) { append_line(to_json(record).dump()); }

    /// Appends one raw line; `line` must not contain a newline.
    void append_line(const std::string& line) {
        const std::string data = line + '\n';
        std::lock_guard lock(mutex_);
        const int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
        if (fd < 0) {
            throw std::system_error(errno, std::generic_category(), "open " + path_.string());
        }
        const ssize_t n = ::write(fd, data.data(), data.size());
        const int write_errno = errno;
        ::close(fd);
        if (n < 0) {
            throw std::system_error(write_errno, std::generic_category(), "write " + path_.string());
        }
        if (static_cast<std::size_t>(n) != data.size()) {
            throw std::system_error(EIO, std::generic_category(), "short write to " + path_.string());
        }
    }

    /// Every record in file order. A missing file is an empty store.
    std::vector<TrialRecord> load() const {
        std::vector<TrialRecord> out;
        std::ifstream in(path_, std::ios::binary);
        if (!in) {
            if (std::filesystem::exists(path_)) {
                throw std::system_error(errno, std::generic_category(), "read " + path_.string());
            }
            return out;
        }
        const std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        std::size_t pos = 0;
        while (pos < content.size()) {
            const std::size_t nl = content.find('\n', pos);
            if (nl == std::string::npos) {
                throw CorruptDataError(out.size(), "truncated final line in " + path_.string());
            }
            try {
                out.push_back(record_from_json(Options::parse(content.substr(pos, nl - pos))));
            } catch (const std::exception& e) {
                throw CorruptDataError(out.size(), std::string("unreadable line: ") + e.what());
            }
            pos = nl + 1;
        }
        return out;
    }

private:
    std::filesystem::path path_;
    std::mutex mutex_;
};

}  // namespace aqml
