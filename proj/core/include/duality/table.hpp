// Copyright 2026 The duality-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace duality {

/// Empty, real, integer, text or flag.
using Cell = std::variant<std::monostate, double, std::int64_t, std::string, bool>;

/// Shortest "%.17g" rendering; round-trips every finite double.
std::string format_double(double v);

/// Column-ordered rows written as CSV or as a JSON mirror of the same data.
class Table {
public:
    explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    void add_row(std::vector<Cell> row);
    const std::vector<std::string>& columns() const { return columns_; }
    const std::vector<std::vector<Cell>>& rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }

    /// First line "# duality-lab v<version> schema=<n>", then header and rows.
    void write_csv(std::ostream& os) const;
    /// {"generator": ..., "schema": n, "columns": [...], "rows": [{...}, ...]}
    void write_json(std::ostream& os) const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
};

}  // namespace duality
