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

#include "relarm/normalize.hpp"

#include <algorithm>
#include <cmath>

#include "relarm/csv.hpp"
#include "relarm/format.hpp"

namespace relarm {

double normalize_value(double p, double min, double max, Direction direction) {
    require(max > min, "normalize_value: max must exceed min");
    return direction == Direction::Positive ? (p - min) / (max - min) : (max - p) / (max - min);
}

NormalizedColumn normalize_column(std::span<const double> raw, Direction direction) {
    require(raw.size() >= 2, "normalize_column: need at least 2 values");
    for (double v : raw)
        require(std::isfinite(v), "normalize_column: non-finite value");

    NormalizedColumn out;
    const auto [lo, hi] = std::minmax_element(raw.begin(), raw.end());
    out.scale = {*lo, *hi};
    out.values.resize(raw.size());
    if (out.scale.constant()) {
        out.constant = true;
        std::fill(out.values.begin(), out.values.end(), 0.5);
        return out;
    }
    for (std::size_t i = 0; i < raw.size(); ++i)
        out.values[i] = normalize_value(raw[i], out.scale.min, out.scale.max, direction);
    return out;
}

void NormalizedMatrix::validate() const {
    require(values.rows() == objects.size() && values.cols() == indicators.size(),
            "normalized matrix shape does not match its labels");
    for (double v : values.data())
        if (!(v >= 0.0 && v <= 1.0))
            fail(ErrorKind::Validation, "normalized value " + format_double(v) + " outside [0,1]");
}

namespace {

void check_pre_normalized(const RawDataset& raw, std::size_t j) {
    for (std::size_t i = 0; i < raw.object_count(); ++i) {
        const double v = raw.values(i, j);
        if (!(v >= 0.0 && v <= 1.0))
            fail(ErrorKind::Validation, "pre-normalized indicator '" + raw.indicators[j].name + "' has value " +
                                            format_double(v) + " outside [0,1] for object '" + raw.objects[i] + "'");
    }
}

} // namespace

NormalizationResult normalize_dataset(const RawDataset& raw) {
    raw.validate();
    NormalizationResult out;
    out.matrix.objects = raw.objects;
    out.matrix.indicators = raw.indicators;
    out.matrix.values = Matrix(raw.object_count(), raw.indicator_count());
    for (std::size_t j = 0; j < raw.indicator_count(); ++j) {
        const auto& spec = raw.indicators[j];
        if (spec.pre_normalized) {
            check_pre_normalized(raw, j);
            out.matrix.values.set_column(j, raw.values.column(j));
            out.scales.push_back({0.0, 1.0});
            continue;
        }
        const auto column = raw.values.column(j);
        auto col = normalize_column(column, spec.direction);
        if (col.constant)
            out.warnings.push_back("indicator '" + spec.name + "' is constant; normalized to 0.5");
        out.matrix.values.set_column(j, col.values);
        out.scales.push_back(col.scale);
    }
    return out;
}

NormalizationResult apply_normalization(const RawDataset& raw, std::span<const ColumnScale> scales) {
    raw.validate(1);
    require(scales.size() == raw.indicator_count(), "apply_normalization: scale count does not match indicators");
    NormalizationResult out;
    out.matrix.objects = raw.objects;
    out.matrix.indicators = raw.indicators;
    out.matrix.values = Matrix(raw.object_count(), raw.indicator_count());
    out.scales.assign(scales.begin(), scales.end());
    for (std::size_t j = 0; j < raw.indicator_count(); ++j) {
        const auto& spec = raw.indicators[j];
        if (spec.pre_normalized)
            check_pre_normalized(raw, j);
        for (std::size_t i = 0; i < raw.object_count(); ++i) {
            const double p = raw.values(i, j);
            double b = 0.5;
            if (spec.pre_normalized)
                b = p;
            else if (!scales[j].constant())
                b = normalize_value(p, scales[j].min, scales[j].max, spec.direction);
            if (b < 0.0 || b > 1.0) {
                out.warnings.push_back("object '" + raw.objects[i] + "' indicator '" + spec.name +
                                       "' outside the fitted range; clamped");
                b = std::clamp(b, 0.0, 1.0);
            }
            out.matrix.values(i, j) = b;
        }
    }
    return out;
}

std::string write_normalized_csv(const NormalizedMatrix& b) {
    std::vector<std::string> names;
    for (const auto& ind : b.indicators)
        names.push_back(ind.name);
    return csv::table("object", names, b.objects, b.values);
}

} // namespace relarm
