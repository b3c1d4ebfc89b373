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

#include "relarm/csv.hpp"

#include <fstream>
#include <sstream>

#include "relarm/error.hpp"

namespace relarm::csv {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

} // namespace

std::vector<Record> parse(std::string_view text, const std::string& source) {
    if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF")
        text.remove_prefix(3);

    std::vector<Record> records;
    Record current;
    std::string field;
    bool quoted = false;      // inside quotes
    bool was_quoted = false;  // current field started with a quote
    bool any = false;         // current record has content
    std::size_t line = 1;
    current.line = 1;

    auto end_field = [&] {
        current.fields.push_back(was_quoted ? field : std::string(trim(field)));
        field.clear();
        was_quoted = false;
    };
    auto end_record = [&] {
        end_field();
        const bool blank = current.fields.size() == 1 && current.fields[0].empty() && !any;
        if (!blank)
            records.push_back(std::move(current));
        current = Record{};
        any = false;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                if (c == '\n')
                    ++line;
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
        case '"':
            if (!trim(field).empty())
                throw DataError(source, line, current.fields.size() + 1, "unexpected quote inside unquoted field");
            field.clear();
            quoted = was_quoted = any = true;
            break;
        case ',':
            any = true;
            end_field();
            break;
        case '\n':
            end_record();
            ++line;
            current.line = line;
            break;
        default:
            if (was_quoted && c != ' ' && c != '\t' && c != '\r')
                throw DataError(source, line, current.fields.size() + 1, "text after closing quote");
            if (!was_quoted)
                field.push_back(c);
            if (c != ' ' && c != '\t' && c != '\r')
                any = true;
        }
    }
    if (quoted)
        throw DataError(source, line, current.fields.size() + 1, "unterminated quoted field");
    if (any || !field.empty() || !current.fields.empty())
        end_record();
    return records;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrorKind::Io, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        fail(ErrorKind::Io, "cannot write " + path.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out)
        fail(ErrorKind::Io, "write failed for " + path.string());
}

std::string escape(std::string_view field) {
    const bool needs = field.find_first_of(",\"\n\r") != std::string_view::npos ||
                       (!field.empty() && (field.front() == ' ' || field.back() == ' '));
    if (!needs)
        return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string join(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i)
            out.push_back(',');
        out += escape(fields[i]);
    }
    return out;
}

} // namespace relarm::csv

#include "relarm/format.hpp"

namespace relarm::csv {

std::string table(const std::string& corner, const std::vector<std::string>& columns,
                  const std::vector<std::string>& rows, const Matrix& values) {
    require(columns.size() == values.cols() && rows.size() == values.rows(), "csv::table: label count mismatch");
    std::vector<std::string> fields{corner};
    fields.insert(fields.end(), columns.begin(), columns.end());
    std::string out = join(fields) + "\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        fields.assign(1, rows[r]);
        for (double v : values.row(r))
            fields.push_back(format_double(v));
        out += join(fields) + "\n";
    }
    return out;
}

} // namespace relarm::csv
