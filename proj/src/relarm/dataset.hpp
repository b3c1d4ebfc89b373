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

#include "relarm/matrix.hpp"

namespace relarm {

/// Direction of an indicator's influence on the rated property.
enum class Direction { Positive, Negative };

Direction parse_direction(std::string_view text);
std::string_view to_string(Direction d) noexcept;

struct IndicatorSpec {
    std::string name;
    Direction direction = Direction::Positive;
    /// Column already lies in [0,1] (e.g. an expert score) and skips min-max scaling.
    bool pre_normalized = false;

    bool operator==(const IndicatorSpec&) const = default;
};

/// Checks names are non-empty and unique.
void validate_indicator_specs(const std::vector<IndicatorSpec>& specs);

/// M rating objects by N indicators in native units.
struct RawDataset {
    std::vector<std::string> objects;
    std::vector<IndicatorSpec> indicators;
    Matrix values;

    std::size_t object_count() const noexcept { return objects.size(); }
    std::size_t indicator_count() const noexcept { return indicators.size(); }

    /// Throws Validation unless M >= min_objects, N >= 1, ids unique, every value finite.
    /// Fitting needs two objects; scoring against a saved model accepts one.
    void validate(std::size_t min_objects = 2) const;

    bool operator==(const RawDataset&) const = default;
};

/// Parses a comma-separated table (header row of indicator names, first column
/// object ids). Columns are reordered to match `specs`. Errors carry the
/// 1-based row/column of the offending cell.
RawDataset parse_dataset(std::string_view text, const std::vector<IndicatorSpec>& specs,
                         const std::string& source = {}, std::size_t min_objects = 2);

/// Reads the "indicators" array of a JSON model-config file.
std::vector<IndicatorSpec> load_indicator_specs(const std::filesystem::path& spec_path);

RawDataset load_dataset(const std::filesystem::path& path, const std::filesystem::path& spec_path);
RawDataset load_dataset(const std::filesystem::path& path, const std::vector<IndicatorSpec>& specs,
                        std::size_t min_objects = 2);

/// CSV text that parse_dataset reads back to an equal value.
std::string write_dataset_csv(const RawDataset& data);

} // namespace relarm
