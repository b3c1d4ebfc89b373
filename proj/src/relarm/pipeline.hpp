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
#include <vector>

#include <json.hpp>

#include "relarm/attribute_map.hpp"
#include "relarm/clustering.hpp"
#include "relarm/config.hpp"
#include "relarm/dataset.hpp"
#include "relarm/normalize.hpp"
#include "relarm/pca.hpp"
#include "relarm/rating.hpp"

namespace relarm {

/// All intermediate products of one fit, in pipeline order.
struct PipelineRun {
    RawDataset raw;
    NormalizationResult normalized;
    PcaModel pca;
    RankedFeatureMatrix features;
    ClusteringResult clustering;
    RatingResult ratings;
    std::vector<std::string> warnings;
};

/// normalize -> PCA -> feature map -> k-means -> rating assignment.
PipelineRun run_pipeline(const RawDataset& raw, const PipelineConfig& config);

/// Rerun the stages after PCA with a (possibly modified) PCA model.
PipelineRun run_from_pca(PipelineRun base, PcaModel pca, const PipelineConfig& config);

/// What is needed to rate new objects without refitting.
struct ModelSnapshot {
    PipelineConfig config;
    std::vector<ColumnScale> scales;
    PcaModel pca;
    Matrix centers;
    std::vector<std::string> cluster_labels;
    std::vector<double> projections;
    double sse = 0.0;
    std::size_t winning_restart = 0;

    nlohmann::json to_json() const;
    static ModelSnapshot from_json(const nlohmann::json& doc, const std::string& source = {});
};

ModelSnapshot make_snapshot(const PipelineRun& run, const PipelineConfig& config);
void save_snapshot(const ModelSnapshot& snapshot, const std::filesystem::path& path);
ModelSnapshot load_snapshot(const std::filesystem::path& path);

struct ScoredObjects {
    NormalizationResult normalized;
    RankedFeatureMatrix features;
    std::vector<RatingListEntry> ratings;
};

/// Rates `raw` with a saved model: fitted scaling, W, nearest center.
ScoredObjects score_with_snapshot(const ModelSnapshot& snapshot, const RawDataset& raw);

/// Writes normalized.csv, components.csv, variance.csv, w.csv, lambda.csv,
/// features.csv, attributes.csv, centers.csv and assignments.csv into `dir`.
void write_intermediates(const PipelineRun& run, const std::filesystem::path& dir);

} // namespace relarm
