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

#include "relarm/pipeline.hpp"

#include "relarm/csv.hpp"
#include "relarm/format.hpp"
#include "relarm/json_io.hpp"

namespace relarm {

namespace {

constexpr const char* kSnapshotFormat = "relarm-model";
constexpr int kSnapshotVersion = 1;

} // namespace

PipelineRun run_pipeline(const RawDataset& raw, const PipelineConfig& config) {
    config.validate();
    PipelineRun run;
    run.raw = raw;
    run.normalized = normalize_dataset(raw);
    run.warnings = run.normalized.warnings;
    PcaOptions pca_options{config.variance_threshold, config.center};
    auto pca = fit_pca(run.normalized.matrix, pca_options);
    return run_from_pca(std::move(run), std::move(pca), config);
}

PipelineRun run_from_pca(PipelineRun base, PcaModel pca, const PipelineConfig& config) {
    base.pca = std::move(pca);
    base.features = map_to_feature_space(base.normalized.matrix, base.pca);
    base.clustering = kmeans(base.features.values, config.kmeans_options());
    if (!base.clustering.converged)
        base.warnings.push_back("k-means stopped at the iteration cap without reaching a fixed point");
    base.ratings = assign_ratings(base.clustering, base.pca.lambda, config.scale(), base.features.objects);
    for (auto [a, b] : base.ratings.ties)
        base.warnings.push_back("clusters " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                                " have equal projections; ordered by cluster index");
    return base;
}

nlohmann::json ModelSnapshot::to_json() const {
    using nlohmann::json;
    json scales_json = json::array();
    for (const auto& s : scales)
        scales_json.push_back({{"min", s.min}, {"max", s.max}});
    return {
        {"format", kSnapshotFormat},
        {"version", kSnapshotVersion},
        {"config", config.to_json()},
        {"normalization", scales_json},
        {"pca",
         {{"centered", pca.centered},
          {"variance_threshold", pca.variance_threshold},
          {"column_means", pca.column_means},
          {"components", json_io::matrix_to_json(pca.components)},
          {"eigenvalues", pca.eigenvalues},
          {"variance_fractions", pca.variance_fractions},
          {"solver_order", pca.solver_order},
          {"d", pca.d},
          {"W", json_io::matrix_to_json(pca.W)},
          {"lambda", pca.lambda}}},
        {"clustering",
         {{"centers", json_io::matrix_to_json(centers)},
          {"sse", sse},
          {"winning_restart", winning_restart},
          {"labels", cluster_labels},
          {"projections", projections}}},
    };
}

ModelSnapshot ModelSnapshot::from_json(const nlohmann::json& doc, const std::string& source) {
    const std::string where = source.empty() ? std::string("<model>") : source;
    auto need = [&](const nlohmann::json& obj, const char* key) -> const nlohmann::json& {
        if (!obj.is_object() || !obj.contains(key))
            fail(ErrorKind::Parse, where + ": model snapshot is missing \"" + key + "\"");
        return obj[key];
    };
    if (need(doc, "format") != kSnapshotFormat)
        fail(ErrorKind::Parse, where + ": not a relarm model snapshot");
    if (need(doc, "version") != kSnapshotVersion)
        fail(ErrorKind::Parse, where + ": unsupported snapshot version");

    ModelSnapshot s;
    s.config = PipelineConfig::from_json(need(doc, "config"), where);
    for (const auto& item : need(doc, "normalization")) {
        ColumnScale cs;
        cs.min = need(item, "min").get<double>();
        cs.max = need(item, "max").get<double>();
        s.scales.push_back(cs);
    }

    const auto& p = need(doc, "pca");
    s.pca.centered = need(p, "centered").get<bool>();
    s.pca.variance_threshold = need(p, "variance_threshold").get<double>();
    s.pca.column_means = json_io::vector_from_json(need(p, "column_means"), where + ": column_means");
    s.pca.components = json_io::matrix_from_json(need(p, "components"), where + ": components");
    s.pca.eigenvalues = json_io::vector_from_json(need(p, "eigenvalues"), where + ": eigenvalues");
    s.pca.variance_fractions = json_io::vector_from_json(need(p, "variance_fractions"), where + ": variance_fractions");
    s.pca.solver_order = need(p, "solver_order").get<std::vector<std::size_t>>();
    s.pca.d = need(p, "d").get<std::size_t>();
    s.pca.W = json_io::matrix_from_json(need(p, "W"), where + ": W");
    s.pca.lambda = json_io::vector_from_json(need(p, "lambda"), where + ": lambda");

    const auto& c = need(doc, "clustering");
    s.centers = json_io::matrix_from_json(need(c, "centers"), where + ": centers");
    s.sse = need(c, "sse").get<double>();
    s.winning_restart = need(c, "winning_restart").get<std::size_t>();
    s.cluster_labels = need(c, "labels").get<std::vector<std::string>>();
    s.projections = json_io::vector_from_json(need(c, "projections"), where + ": projections");

    const std::size_t n = s.config.indicators.size();
    const bool shapes_ok = s.scales.size() == n && s.pca.components.rows() == n && s.pca.components.cols() == n &&
                           s.pca.W.rows() == n && s.pca.W.cols() == s.pca.d && s.pca.lambda.size() == s.pca.d &&
                           s.centers.cols() == s.pca.d && s.cluster_labels.size() == s.centers.rows() &&
                           s.projections.size() == s.centers.rows() && s.pca.d >= 1;
    if (!shapes_ok)
        fail(ErrorKind::Parse, where + ": model snapshot has inconsistent dimensions");
    return s;
}

ModelSnapshot make_snapshot(const PipelineRun& run, const PipelineConfig& config) {
    ModelSnapshot s;
    s.config = config;
    s.config.indicators = run.raw.indicators;
    s.scales = run.normalized.scales;
    s.pca = run.pca;
    s.centers = run.clustering.centers;
    s.sse = run.clustering.sse;
    s.winning_restart = run.clustering.winning_restart;
    for (const auto& c : run.ratings.clusters) {
        s.cluster_labels.push_back(c.label);
        s.projections.push_back(c.projection);
    }
    return s;
}

void save_snapshot(const ModelSnapshot& snapshot, const std::filesystem::path& path) {
    json_io::write(path, snapshot.to_json());
}

ModelSnapshot load_snapshot(const std::filesystem::path& path) {
    return ModelSnapshot::from_json(json_io::read(path), path.string());
}

ScoredObjects score_with_snapshot(const ModelSnapshot& snapshot, const RawDataset& raw) {
    ScoredObjects out;
    out.normalized = apply_normalization(raw, snapshot.scales);
    out.features = map_to_feature_space(out.normalized.matrix, snapshot.pca);
    for (std::size_t i = 0; i < out.features.objects.size(); ++i) {
        const auto q = nearest_center(out.features.values.row(i), snapshot.centers);
        out.ratings.push_back({out.features.objects[i], q + 1, snapshot.projections[q], snapshot.cluster_labels[q]});
    }
    return out;
}

void write_intermediates(const PipelineRun& run, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    const auto& pca = run.pca;
    std::vector<std::string> names;
    for (const auto& ind : run.raw.indicators)
        names.push_back(ind.name);
    std::vector<std::string> pcs;
    for (std::size_t k = 0; k < pca.components.cols(); ++k)
        pcs.push_back("pc" + std::to_string(k + 1));
    std::vector<std::string> retained(pcs.begin(), pcs.begin() + static_cast<std::ptrdiff_t>(pca.d));

    csv::write_file(dir / "normalized.csv", write_normalized_csv(run.normalized.matrix));
    csv::write_file(dir / "components.csv", csv::table("indicator", pcs, names, pca.components));
    csv::write_file(dir / "w.csv", csv::table("indicator", retained, names, pca.W));

    std::string variance = "component,eigenvalue,fraction,cumulative\n";
    double cumulative = 0.0;
    for (std::size_t k = 0; k < pca.variance_fractions.size(); ++k) {
        cumulative += pca.variance_fractions[k];
        variance += pcs[k] + "," + format_double(pca.eigenvalues[k]) + "," + format_double(pca.variance_fractions[k]) +
                    "," + format_double(cumulative) + "\n";
    }
    csv::write_file(dir / "variance.csv", variance);

    std::string lambda = "component,lambda\n";
    for (std::size_t k = 0; k < pca.d; ++k)
        lambda += pcs[k] + "," + format_double(pca.lambda[k]) + "\n";
    csv::write_file(dir / "lambda.csv", lambda);

    csv::write_file(dir / "features.csv", write_features_csv(run.features));

    // Signed per-indicator contributions b_ik * w_kp behind each ranking value.
    std::vector<std::string> header{"object", "component"};
    header.insert(header.end(), names.begin(), names.end());
    header.push_back("l1_norm");
    std::string attributes = csv::join(header) + "\n";
    for (std::size_t i = 0; i < run.normalized.matrix.object_count(); ++i)
        for (std::size_t p = 0; p < pca.d; ++p) {
            const auto a = attribute_vector(run.normalized.matrix.values.row(i), pca, p, i);
            std::vector<std::string> row{run.normalized.matrix.objects[i], pcs[p]};
            for (double v : a.values)
                row.push_back(format_double(v));
            row.push_back(format_double(a.l1_norm()));
            attributes += csv::join(row) + "\n";
        }
    csv::write_file(dir / "attributes.csv", attributes);

    csv::write_file(dir / "centers.csv", write_centers_csv(run.clustering));
    csv::write_file(dir / "assignments.csv", write_assignments_csv(run.features.objects, run.clustering));
}

} // namespace relarm
