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

#include "relarm/matrix.hpp"
#include "relarm/normalize.hpp"
#include "relarm/pca.hpp"

namespace relarm {

/// Entrywise product of a normalized object vector with one signed principal
/// component: entry k is b_k * w_kp. Used for per-object contribution reports.
struct RelativeAttribute {
    std::size_t object_index = 0;
    std::size_t component_index = 0;
    std::vector<double> values;

    double l1_norm() const;
};

/// Objects mapped into ranking-function space: row i holds (r_1(b_i), ..., r_d(b_i)).
struct RankedFeatureMatrix {
    std::vector<std::string> objects;
    Matrix values;
};

/// `component` is 0-based and must be below model.d.
RelativeAttribute attribute_vector(std::span<const double> b, const PcaModel& model, std::size_t component,
                                   std::size_t object_index = 0);

/// Ranking function r_p(b) = sum_k |w_kp| b_k.
double rank_value(std::span<const double> b, const PcaModel& model, std::size_t component);

/// B x W.
Matrix map_to_feature_space(const Matrix& b, const PcaModel& model);
RankedFeatureMatrix map_to_feature_space(const NormalizedMatrix& b, const PcaModel& model);

std::string write_features_csv(const RankedFeatureMatrix& features);

} // namespace relarm
