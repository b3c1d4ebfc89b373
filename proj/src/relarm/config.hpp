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

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "relarm/clustering.hpp"
#include "relarm/dataset.hpp"
#include "relarm/rating.hpp"

namespace relarm {

/// Everything a pipeline run needs besides the data file.
struct PipelineConfig {
    std::vector<IndicatorSpec> indicators;
    double variance_threshold = 0.95;
    std::optional<std::size_t> k;
    std::vector<std::string> labels; // empty: standard seven-grade scale when k == 7
    std::uint64_t seed = 0;
    std::size_t restarts = 50;
    std::size_t max_iterations = 300;
    std::size_t threads = 1;
    Distance distance = Distance::Euclidean;
    bool center = true;
    bool dump_intermediates = false;
    std::string out_dir;
    std::map<std::string, std::string> collapse; // extra/overriding collapse entries

    /// Full check, including presence of k; call after applying overrides.
    void validate() const;

    RatingScale scale() const;
    CategoryCollapse collapse_table() const;
    KMeansOptions kmeans_options() const;

    nlohmann::json to_json() const;
    static PipelineConfig from_json(const nlohmann::json& doc, const std::string& source = {});
};

PipelineConfig load_config(const std::filesystem::path& path);

} // namespace relarm
