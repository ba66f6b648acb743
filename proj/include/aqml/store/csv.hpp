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
 * @file csv.hpp
 * Numeric CSV ingestion and output.
 *
 * Dialect: comma separator, '.' decimal point, LF line endings, mandatory
 * header row, every data cell numeric. No quoting.
 */
#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "aqml/data.hpp"
#include "aqml/errors.hpp"
#include "aqml/registry.hpp"

namespace aqml {

struct CsvTable {
    std::vector<std::string> header;
    FeatureMatrix values;

    std::size_t column(std::string_view name) const {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (header[i] == name) return i;
        }
        throw DataError("missing column '" + std::string(name) + "'");
    }
};

inline std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        out.emplace_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

inline double parse_number(std::string_view cell, std::size_t line_no, std::string_view column) {
    double v = 0.0;
    const auto* end = cell.data() + cell.size();
    const auto [ptr, ec] = std::from_chars(cell.data(), end, v);
    if (cell.empty() || ec != std::errc() || ptr != end) {
        throw DataError("line " + std::to_string(line_no) + ", column '" + std::string(column) +
                        "': non-numeric value '" + std::string(cell) + "'");
    }
    return v;
}

inline CsvTable parse_csv(std::string_view text) {
    CsvTable t;
    std::vector<double> values;
    std::size_t rows = 0;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        auto cells = split_csv_line(line);
        if (t.header.empty()) {
            for (const auto& c : cells) {
                if (c.empty()) throw DataError("empty column name in header");
            }
            t.header = std::move(cells);
            continue;
        }
        if (cells.size() != t.header.size()) {
            throw DataError("line " + std::to_string(line_no) + " has " + std::to_string(cells.size()) +
                            " fields, header has " + std::to_string(t.header.size()));
        }
        for (std::size_t c = 0; c < cells.size(); ++c) {
            values.push_back(parse_number(cells[c], line_no, t.header[c]));
        }
        ++rows;
    }
    if (t.header.empty()) {
        throw DataError("CSV has no header row");
    }
    t.values = FeatureMatrix(rows, t.header.size(), std::move(values));
    return t;
}

inline CsvTable read_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str());
}

/// Splits a table into features and target. `target` empty means no target
/// column (clustering); otherwise it must exist. Classification targets must
/// be 0 or 1.
inline Dataset to_dataset(const CsvTable& t, TaskType task, const std::string& target) {
    Dataset d;
    std::size_t target_col = t.header.size();
    if (!target.empty()) target_col = t.column(target);
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < t.header.size(); ++c) {
        if (c != target_col) {
            cols.push_back(c);
            d.feature_names.push_back(t.header[c]);
        }
    }
    if (cols.empty()) throw DataError("no feature columns");
    if (t.values.rows() == 0) throw DataError("no data rows");
    d.features = FeatureMatrix(t.values.rows(), cols.size());
    for (std::size_t r = 0; r < t.values.rows(); ++r) {
        for (std::size_t k = 0; k < cols.size(); ++k) d.features.row(r)[k] = t.values.row(r)[cols[k]];
        if (target_col < t.header.size()) {
            const double y = t.values.row(r)[target_col];
            if (task == TaskType::Classification && y != 0.0 && y != 1.0) {
                throw DataError("classification target '" + target + "' must be 0 or 1; row " + std::to_string(r + 1) +
                                " has " + std::to_string(y));
            }
            d.targets.push_back(y);
        }
    }
    return d;
}

/// Selects `names` from the table, in that order.
inline FeatureMatrix select_columns(const CsvTable& t, const std::vector<std::string>& names) {
    std::vector<std::size_t> cols;
    for (const auto& n : names) cols.push_back(t.column(n));
    FeatureMatrix m(t.values.rows(), cols.size());
    for (std::size_t r = 0; r < t.values.rows(); ++r)
        for (std::size_t k = 0; k < cols.size(); ++k) m.row(r)[k] = t.values.row(r)[cols[k]];
    return m;
}

/// Shortest decimal that parses back to exactly `v`.
inline std::string format_real(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw std::runtime_error("number formatting failed");
    return std::string(buf, ptr);
}

}  // namespace aqml
