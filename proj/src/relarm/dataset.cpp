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

#include "relarm/dataset.hpp"

#include <cctype>
#include <cmath>
#include <unordered_map>

#include <json.hpp>

#include "relarm/csv.hpp"
#include "relarm/format.hpp"
#include "relarm/json_io.hpp"

namespace relarm {

Direction parse_direction(std::string_view text) {
    std::string lower;
    for (char c : text)
        lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lower == "positive" || lower == "+")
        return Direction::Positive;
    if (lower == "negative" || lower == "-")
        return Direction::Negative;
    fail(ErrorKind::Validation, "unknown indicator direction '" + std::string(text) + "' (expected positive or negative)");
}

std::string_view to_string(Direction d) noexcept {
    return d == Direction::Positive ? "positive" : "negative";
}

void validate_indicator_specs(const std::vector<IndicatorSpec>& specs) {
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t j = 0; j < specs.size(); ++j) {
        if (specs[j].name.empty())
            fail(ErrorKind::Validation, "indicator #" + std::to_string(j + 1) + " has an empty name");
        if (!seen.emplace(specs[j].name, j).second)
            fail(ErrorKind::Validation, "indicator '" + specs[j].name + "' declared twice");
    }
}

void RawDataset::validate(std::size_t min_objects) const {
    if (objects.size() < min_objects)
        fail(ErrorKind::Validation, "dataset needs at least " + std::to_string(min_objects) + " rating objects, got " +
                                        std::to_string(objects.size()));
    if (indicators.empty())
        fail(ErrorKind::Validation, "dataset needs at least 1 indicator");
    if (values.rows() != objects.size() || values.cols() != indicators.size())
        fail(ErrorKind::Validation, "dataset value matrix does not match object/indicator counts");
    validate_indicator_specs(indicators);
    std::unordered_map<std::string, std::size_t> ids;
    for (std::size_t i = 0; i < objects.size(); ++i) {
        if (objects[i].empty())
            fail(ErrorKind::Validation, "object #" + std::to_string(i + 1) + " has an empty id");
        if (!ids.emplace(objects[i], i).second)
            fail(ErrorKind::Validation, "duplicate object id '" + objects[i] + "'");
    }
    for (double v : values.data())
        if (!std::isfinite(v))
            fail(ErrorKind::Validation, "dataset contains a non-finite value");
}

RawDataset parse_dataset(std::string_view text, const std::vector<IndicatorSpec>& specs, const std::string& source,
                         std::size_t min_objects) {
    validate_indicator_specs(specs);
    const auto records = csv::parse(text, source);
    if (records.empty())
        throw DataError(source, 1, 0, "empty data file");

    const auto& header = records.front();
    if (header.fields.size() < 2)
        throw DataError(source, header.line, 0, "header needs an object id column and at least one indicator");

    std::unordered_map<std::string, std::size_t> spec_index;
    for (std::size_t j = 0; j < specs.size(); ++j)
        spec_index.emplace(specs[j].name, j);

    // file column (1..) -> spec position
    std::vector<std::size_t> target(header.fields.size(), 0);
    std::vector<bool> covered(specs.size(), false);
    for (std::size_t c = 1; c < header.fields.size(); ++c) {
        const auto& name = header.fields[c];
        if (name.empty())
            throw DataError(source, header.line, c + 1, "empty indicator name in header");
        auto it = spec_index.find(name);
        if (it == spec_index.end())
            throw DataError(source, header.line, c + 1, "indicator '" + name + "' is not declared in the indicator spec");
        if (covered[it->second])
            throw DataError(source, header.line, c + 1, "indicator '" + name + "' appears twice in header");
        covered[it->second] = true;
        target[c] = it->second;
    }
    for (std::size_t j = 0; j < specs.size(); ++j)
        if (!covered[j])
            throw DataError(source, header.line, 0, "indicator '" + specs[j].name + "' is declared in the spec but absent from the data");

    RawDataset out;
    out.indicators = specs;
    const std::size_t m = records.size() - 1;
    out.values = Matrix(m, specs.size());
    std::unordered_map<std::string, std::size_t> first_seen;
    for (std::size_t r = 0; r < m; ++r) {
        const auto& rec = records[r + 1];
        if (rec.fields.size() != header.fields.size())
            throw DataError(source, rec.line, 0,
                            "expected " + std::to_string(header.fields.size()) + " fields, found " +
                                std::to_string(rec.fields.size()));
        const auto& id = rec.fields[0];
        if (id.empty())
            throw DataError(source, rec.line, 1, "missing object id");
        if (auto [it, inserted] = first_seen.emplace(id, rec.line); !inserted)
            throw DataError(source, rec.line, 1,
                            "duplicate object id '" + id + "' (first on row " + std::to_string(it->second) + ")");
        out.objects.push_back(id);
        for (std::size_t c = 1; c < rec.fields.size(); ++c) {
            const auto& cell = rec.fields[c];
            if (cell.empty())
                throw DataError(source, rec.line, c + 1, "missing value for indicator '" + header.fields[c] + "'");
            auto value = parse_double(cell);
            if (!value)
                throw DataError(source, rec.line, c + 1, "non-numeric value '" + cell + "'");
            out.values(r, target[c]) = *value;
        }
    }
    try {
        out.validate(min_objects);
    } catch (const Error& e) {
        throw Error(ErrorKind::Validation, (source.empty() ? std::string("<input>") : source) + ": " + e.what());
    }
    return out;
}

std::vector<IndicatorSpec> load_indicator_specs(const std::filesystem::path& spec_path) {
    const auto doc = json_io::read(spec_path);
    return json_io::indicators_from_json(doc, spec_path.string());
}

RawDataset load_dataset(const std::filesystem::path& path, const std::filesystem::path& spec_path) {
    return load_dataset(path, load_indicator_specs(spec_path));
}

RawDataset load_dataset(const std::filesystem::path& path, const std::vector<IndicatorSpec>& specs,
                        std::size_t min_objects) {
    return parse_dataset(csv::read_file(path), specs, path.string(), min_objects);
}

std::string write_dataset_csv(const RawDataset& data) {
    std::vector<std::string> fields{"object"};
    for (const auto& ind : data.indicators)
        fields.push_back(ind.name);
    std::string out = csv::join(fields) + "\n";
    for (std::size_t i = 0; i < data.objects.size(); ++i) {
        fields.assign(1, data.objects[i]);
        for (double v : data.values.row(i))
            fields.push_back(format_double(v));
        out += csv::join(fields) + "\n";
    }
    return out;
}

} // namespace relarm
