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

#include "relarm/json_io.hpp"

#include <cmath>

#include "relarm/csv.hpp"
#include "relarm/error.hpp"

namespace relarm::json_io {

json read(const std::filesystem::path& path) {
    const auto text = csv::read_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::Parse, path.string() + ": invalid JSON: " + e.what());
    }
}

void write(const std::filesystem::path& path, const json& doc) {
    csv::write_file(path, doc.dump(2) + "\n");
}

std::vector<IndicatorSpec> indicators_from_json(const json& doc, const std::string& source) {
    if (!doc.is_object() || !doc.contains("indicators") || !doc["indicators"].is_array())
        fail(ErrorKind::Validation, source + ": missing \"indicators\" array");
    std::vector<IndicatorSpec> specs;
    std::size_t n = 0;
    for (const auto& item : doc["indicators"]) {
        ++n;
        const std::string where = source + ": indicators[" + std::to_string(n - 1) + "]";
        if (!item.is_object() || !item.contains("name") || !item["name"].is_string())
            fail(ErrorKind::Validation, where + ": needs a string \"name\"");
        IndicatorSpec spec;
        spec.name = item["name"].get<std::string>();
        if (item.contains("direction")) {
            if (!item["direction"].is_string())
                fail(ErrorKind::Validation, where + ": \"direction\" must be a string");
            spec.direction = parse_direction(item["direction"].get<std::string>());
        } else if (!item.value("pre_normalized", false)) {
            fail(ErrorKind::Validation, where + ": missing \"direction\"");
        }
        if (item.contains("pre_normalized")) {
            if (!item["pre_normalized"].is_boolean())
                fail(ErrorKind::Validation, where + ": \"pre_normalized\" must be a boolean");
            spec.pre_normalized = item["pre_normalized"].get<bool>();
        }
        specs.push_back(std::move(spec));
    }
    validate_indicator_specs(specs);
    return specs;
}

json indicators_to_json(const std::vector<IndicatorSpec>& specs) {
    json arr = json::array();
    for (const auto& s : specs) {
        json item = {{"name", s.name}, {"direction", std::string(to_string(s.direction))}};
        if (s.pre_normalized)
            item["pre_normalized"] = true;
        arr.push_back(std::move(item));
    }
    return arr;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        rows.push_back(std::vector<double>(m.row(r).begin(), m.row(r).end()));
    return rows;
}

std::vector<double> vector_from_json(const json& j, const std::string& what) {
    if (!j.is_array())
        fail(ErrorKind::Parse, what + ": expected an array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number())
            fail(ErrorKind::Parse, what + ": expected an array of numbers");
        out.push_back(v.get<double>());
        if (!std::isfinite(out.back()))
            fail(ErrorKind::Parse, what + ": non-finite number");
    }
    return out;
}

Matrix matrix_from_json(const json& j, const std::string& what) {
    if (!j.is_array())
        fail(ErrorKind::Parse, what + ": expected an array of rows");
    if (j.empty())
        return {};
    const auto first = vector_from_json(j[0], what);
    Matrix m(j.size(), first.size());
    for (std::size_t r = 0; r < j.size(); ++r) {
        const auto row = vector_from_json(j[r], what);
        if (row.size() != first.size())
            fail(ErrorKind::Parse, what + ": ragged matrix");
        for (std::size_t c = 0; c < row.size(); ++c)
            m(r, c) = row[c];
    }
    return m;
}

} // namespace relarm::json_io
