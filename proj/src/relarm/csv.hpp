//
// Copyright (C) 2026 The relarm authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace relarm::csv {

struct Record {
    std::size_t line = 0; // 1-based physical line where the record starts
    std::vector<std::string> fields;
};

/// Splits comma-separated text into records. Double-quoted fields may contain
/// commas, quotes ("") and newlines. Unquoted fields are trimmed of spaces and
/// tabs; blank lines are skipped. `source` only labels error messages.
std::vector<Record> parse(std::string_view text, const std::string& source = {});

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

/// Quotes a field only when it needs quoting.
std::string escape(std::string_view field);

std::string join(const std::vector<std::string>& fields);

} // namespace relarm::csv

#include "relarm/matrix.hpp"

namespace relarm::csv {

/// Renders a labelled numeric table: header `corner,columns...`, then one row
/// per label with 17-significant-digit values.
std::string table(const std::string& corner, const std::vector<std::string>& columns,
                  const std::vector<std::string>& rows, const Matrix& values);

} // namespace relarm::csv
