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

#include <span>
#include <string>
#include <vector>

#include "relarm/dataset.hpp"
#include "relarm/matrix.hpp"

namespace relarm {

/// Observed range of one indicator, kept so new objects can be scaled the same way.
struct ColumnScale {
    double min = 0.0;
    double max = 1.0;

    bool constant() const noexcept { return !(max > min); }
    bool operator==(const ColumnScale&) const = default;
};

/// Min-max scaling of one value: (p - min)/(max - min) for Positive indicators,
/// (max - p)/(max - min) for Negative ones. Requires max > min.
double normalize_value(double p, double min, double max, Direction direction);

struct NormalizedColumn {
    std::vector<double> values;
    ColumnScale scale;
    bool constant = false; // every entry set to 0.5
};

NormalizedColumn normalize_column(std::span<const double> raw, Direction direction);

/// The normalized parameter set: every entry in [0,1].
struct NormalizedMatrix {
    std::vector<std::string> objects;
    std::vector<IndicatorSpec> indicators;
    Matrix values;

    std::size_t object_count() const noexcept { return objects.size(); }
    std::size_t indicator_count() const noexcept { return indicators.size(); }

    void validate() const;
};

struct NormalizationResult {
    NormalizedMatrix matrix;
    std::vector<ColumnScale> scales;
    std::vector<std::string> warnings;
};

NormalizationResult normalize_dataset(const RawDataset& raw);

/// Scales `raw` with previously fitted ranges. Scaled values falling outside
/// [0,1] are clamped and reported in `warnings`.
NormalizationResult apply_normalization(const RawDataset& raw, std::span<const ColumnScale> scales);

std::string write_normalized_csv(const NormalizedMatrix& b);

} // namespace relarm
