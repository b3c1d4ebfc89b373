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

#include "relarm/attribute_map.hpp"

#include <cmath>

#include "relarm/csv.hpp"

namespace relarm {

namespace {

void check_args(std::span<const double> b, const PcaModel& model, std::size_t component) {
    require(component < model.d, "component index " + std::to_string(component) + " out of range (d = " +
                                     std::to_string(model.d) + ")");
    require(b.size() == model.indicator_count(), "object vector length does not match the model's indicator count");
}

} // namespace

double RelativeAttribute::l1_norm() const {
    double s = 0.0;
    for (double v : values)
        s += std::abs(v);
    return s;
}

RelativeAttribute attribute_vector(std::span<const double> b, const PcaModel& model, std::size_t component,
                                   std::size_t object_index) {
    check_args(b, model, component);
    RelativeAttribute a{object_index, component, std::vector<double>(b.size())};
    for (std::size_t k = 0; k < b.size(); ++k)
        a.values[k] = b[k] * model.components(k, component);
    return a;
}

double rank_value(std::span<const double> b, const PcaModel& model, std::size_t component) {
    check_args(b, model, component);
    double s = 0.0;
    for (std::size_t k = 0; k < b.size(); ++k)
        s += model.W(k, component) * b[k];
    return s;
}

Matrix map_to_feature_space(const Matrix& b, const PcaModel& model) {
    require(b.cols() == model.indicator_count(), "map_to_feature_space: indicator count " + std::to_string(b.cols()) +
                                                     " does not match model (" +
                                                     std::to_string(model.indicator_count()) + ")");
    Matrix a(b.rows(), model.d);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t p = 0; p < model.d; ++p) {
            double s = 0.0;
            for (std::size_t k = 0; k < b.cols(); ++k)
                s += model.W(k, p) * b(i, k);
            a(i, p) = s;
        }
    return a;
}

RankedFeatureMatrix map_to_feature_space(const NormalizedMatrix& b, const PcaModel& model) {
    return {b.objects, map_to_feature_space(b.values, model)};
}

std::string write_features_csv(const RankedFeatureMatrix& features) {
    std::vector<std::string> names;
    for (std::size_t p = 0; p < features.values.cols(); ++p)
        names.push_back("r" + std::to_string(p + 1));
    return csv::table("object", names, features.objects, features.values);
}

} // namespace relarm
