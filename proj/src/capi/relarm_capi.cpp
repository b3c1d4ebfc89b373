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

#include "relarm/relarm.h"

#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "relarm/csv.hpp"
#include "relarm/pipeline.hpp"

struct relarm_config {
    relarm::PipelineConfig config;
};

struct relarm_model {
    relarm::ModelSnapshot snapshot;
    std::optional<relarm::PipelineRun> run; // present after relarm_fit
    std::vector<std::string> warnings;
};

struct relarm_ratings {
    std::vector<relarm::RatingListEntry> entries;
    std::vector<std::string> warnings;
};

struct relarm_report {
    relarm::AgreementReport report;
};

namespace {

thread_local std::string g_last_error;

relarm_status to_status(relarm::ErrorKind kind) {
    switch (kind) {
    case relarm::ErrorKind::InvalidArgument:
        return RELARM_ERR_INVALID_ARGUMENT;
    case relarm::ErrorKind::Io:
        return RELARM_ERR_IO;
    case relarm::ErrorKind::Parse:
        return RELARM_ERR_PARSE;
    case relarm::ErrorKind::Validation:
        return RELARM_ERR_VALIDATION;
    case relarm::ErrorKind::Numerical:
        return RELARM_ERR_NUMERICAL;
    }
    return RELARM_ERR_INTERNAL;
}

template <class F>
relarm_status guarded(F&& body) {
    try {
        body();
        return RELARM_OK;
    } catch (const relarm::Error& e) {
        g_last_error = e.what();
        return to_status(e.kind());
    } catch (const std::filesystem::filesystem_error& e) {
        g_last_error = e.what();
        return RELARM_ERR_IO;
    } catch (const nlohmann::json::exception& e) {
        g_last_error = std::string("malformed JSON content: ") + e.what();
        return RELARM_ERR_PARSE;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return RELARM_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return RELARM_ERR_INTERNAL;
    }
}

relarm_status null_argument(const char* what) {
    g_last_error = std::string("null argument: ") + what;
    return RELARM_ERR_INVALID_ARGUMENT;
}

const char* warning_at(const std::vector<std::string>& w, std::size_t i) {
    return i < w.size() ? w[i].c_str() : nullptr;
}

} // namespace

extern "C" {

const char* relarm_version(void) { return RELARM_VERSION; }

const char* relarm_last_error(void) { return g_last_error.c_str(); }

const char* relarm_status_string(relarm_status status) {
    switch (status) {
    case RELARM_OK:
        return "ok";
    case RELARM_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case RELARM_ERR_IO:
        return "i/o error";
    case RELARM_ERR_PARSE:
        return "parse error";
    case RELARM_ERR_VALIDATION:
        return "validation error";
    case RELARM_ERR_NUMERICAL:
        return "numerical failure";
    case RELARM_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

relarm_status relarm_config_load(const char* path, relarm_config** out) {
    if (!path || !out)
        return null_argument("relarm_config_load");
    *out = nullptr;
    return guarded([&] { *out = new relarm_config{relarm::load_config(path)}; });
}

void relarm_config_free(relarm_config* config) { delete config; }

relarm_status relarm_config_set_k(relarm_config* config, size_t k) {
    if (!config)
        return null_argument("config");
    config->config.k = k;
    return RELARM_OK;
}

relarm_status relarm_config_set_seed(relarm_config* config, uint64_t seed) {
    if (!config)
        return null_argument("config");
    config->config.seed = seed;
    return RELARM_OK;
}

relarm_status relarm_config_set_threshold(relarm_config* config, double threshold) {
    if (!config)
        return null_argument("config");
    if (!(threshold > 0.0 && threshold <= 1.0)) {
        g_last_error = "variance threshold must lie in (0,1]";
        return RELARM_ERR_VALIDATION;
    }
    config->config.variance_threshold = threshold;
    return RELARM_OK;
}

relarm_status relarm_config_set_restarts(relarm_config* config, size_t restarts) {
    if (!config)
        return null_argument("config");
    config->config.restarts = restarts;
    return RELARM_OK;
}

relarm_status relarm_config_set_dump_intermediates(relarm_config* config, int enabled) {
    if (!config)
        return null_argument("config");
    config->config.dump_intermediates = enabled != 0;
    return RELARM_OK;
}

int relarm_config_dump_intermediates(const relarm_config* config) {
    return config && config->config.dump_intermediates ? 1 : 0;
}

const char* relarm_config_out_dir(const relarm_config* config) {
    return config ? config->config.out_dir.c_str() : "";
}

relarm_status relarm_normalize_file(const relarm_config* config, const char* data_path, const char* out_csv_path,
                                    size_t* warning_count) {
    if (!config || !data_path || !out_csv_path)
        return null_argument("relarm_normalize_file");
    return guarded([&] {
        const auto raw = relarm::load_dataset(data_path, config->config.indicators);
        const auto result = relarm::normalize_dataset(raw);
        relarm::csv::write_file(out_csv_path, relarm::write_normalized_csv(result.matrix));
        if (warning_count)
            *warning_count = result.warnings.size();
    });
}

relarm_status relarm_fit(const relarm_config* config, const char* data_path, relarm_model** out) {
    if (!config || !data_path || !out)
        return null_argument("relarm_fit");
    *out = nullptr;
    return guarded([&] {
        config->config.validate();
        const auto raw = relarm::load_dataset(data_path, config->config.indicators);
        auto model = std::make_unique<relarm_model>();
        model->run = relarm::run_pipeline(raw, config->config);
        model->snapshot = relarm::make_snapshot(*model->run, config->config);
        model->warnings = model->run->warnings;
        *out = model.release();
    });
}

relarm_status relarm_model_load(const char* path, relarm_model** out) {
    if (!path || !out)
        return null_argument("relarm_model_load");
    *out = nullptr;
    return guarded([&] {
        auto model = std::make_unique<relarm_model>();
        model->snapshot = relarm::load_snapshot(path);
        *out = model.release();
    });
}

relarm_status relarm_model_save(const relarm_model* model, const char* path) {
    if (!model || !path)
        return null_argument("relarm_model_save");
    return guarded([&] { relarm::save_snapshot(model->snapshot, path); });
}

void relarm_model_free(relarm_model* model) { delete model; }

relarm_status relarm_model_get_info(const relarm_model* model, relarm_model_info* out) {
    if (!model || !out)
        return null_argument("relarm_model_get_info");
    const auto& s = model->snapshot;
    out->objects = model->run ? model->run->raw.object_count() : 0;
    out->indicators = s.pca.indicator_count();
    out->components = s.pca.d;
    out->clusters = s.centers.rows();
    out->explained = 0.0;
    for (double l : s.pca.lambda)
        out->explained += l;
    out->sse = s.sse;
    return RELARM_OK;
}

size_t relarm_model_warning_count(const relarm_model* model) { return model ? model->warnings.size() : 0; }

const char* relarm_model_warning(const relarm_model* model, size_t index) {
    return model ? warning_at(model->warnings, index) : nullptr;
}

relarm_status relarm_model_write_intermediates(const relarm_model* model, const char* dir) {
    if (!model || !dir)
        return null_argument("relarm_model_write_intermediates");
    if (!model->run) {
        g_last_error = "intermediates are only available for a freshly fitted model";
        return RELARM_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] { relarm::write_intermediates(*model->run, dir); });
}

relarm_status relarm_model_ratings(const relarm_model* model, relarm_ratings** out) {
    if (!model || !out)
        return null_argument("relarm_model_ratings");
    *out = nullptr;
    if (!model->run) {
        g_last_error = "training ratings are only available for a freshly fitted model; use relarm_model_assign";
        return RELARM_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] { *out = new relarm_ratings{relarm::to_rating_list(model->run->ratings), model->warnings}; });
}

relarm_status relarm_model_assign(const relarm_model* model, const char* data_path, relarm_ratings** out) {
    if (!model || !data_path || !out)
        return null_argument("relarm_model_assign");
    *out = nullptr;
    return guarded([&] {
        const auto raw = relarm::load_dataset(data_path, model->snapshot.config.indicators, 1);
        auto scored = relarm::score_with_snapshot(model->snapshot, raw);
        *out = new relarm_ratings{std::move(scored.ratings), std::move(scored.normalized.warnings)};
    });
}

relarm_status relarm_ratings_load(const char* path, relarm_ratings** out) {
    if (!path || !out)
        return null_argument("relarm_ratings_load");
    *out = nullptr;
    return guarded([&] {
        *out = new relarm_ratings{relarm::parse_rating_csv(relarm::csv::read_file(path), path), {}};
    });
}

relarm_status relarm_ratings_save(const relarm_ratings* ratings, const char* path) {
    if (!ratings || !path)
        return null_argument("relarm_ratings_save");
    return guarded([&] { relarm::csv::write_file(path, relarm::write_rating_csv(ratings->entries)); });
}

void relarm_ratings_free(relarm_ratings* ratings) { delete ratings; }

size_t relarm_ratings_count(const relarm_ratings* ratings) { return ratings ? ratings->entries.size() : 0; }

relarm_status relarm_ratings_get(const relarm_ratings* ratings, size_t index, relarm_rating_entry* out) {
    if (!ratings || !out)
        return null_argument("relarm_ratings_get");
    if (index >= ratings->entries.size()) {
        g_last_error = "rating index out of range";
        return RELARM_ERR_INVALID_ARGUMENT;
    }
    const auto& e = ratings->entries[index];
    *out = {e.object.c_str(), e.cluster, e.projection, e.category.c_str()};
    return RELARM_OK;
}

size_t relarm_ratings_warning_count(const relarm_ratings* ratings) { return ratings ? ratings->warnings.size() : 0; }

const char* relarm_ratings_warning(const relarm_ratings* ratings, size_t index) {
    return ratings ? warning_at(ratings->warnings, index) : nullptr;
}

relarm_status relarm_score(const relarm_ratings* ratings, const char* reference_path, const relarm_config* config,
                           relarm_report** out) {
    if (!ratings || !reference_path || !out)
        return null_argument("relarm_score");
    *out = nullptr;
    return guarded([&] {
        const auto reference = relarm::parse_reference_csv(relarm::csv::read_file(reference_path), reference_path);
        const auto collapse = config ? config->config.collapse_table() : relarm::CategoryCollapse::standard();
        relarm::RatingScale scale = relarm::RatingScale::standard();
        if (config && (!config->config.labels.empty() || config->config.k))
            scale = config->config.scale();
        *out = new relarm_report{relarm::score_agreement(ratings->entries, reference, collapse, scale)};
    });
}

relarm_status relarm_report_save(const relarm_report* report, const char* path) {
    if (!report || !path)
        return null_argument("relarm_report_save");
    return guarded([&] { relarm::csv::write_file(path, report->report.to_json().dump(2) + "\n"); });
}

relarm_status relarm_report_get_summary(const relarm_report* report, relarm_report_summary* out) {
    if (!report || !out)
        return null_argument("relarm_report_get_summary");
    out->matched = report->report.matched;
    out->compared = report->report.compared;
    out->has_fraction = report->report.fraction ? 1 : 0;
    out->fraction = report->report.fraction.value_or(0.0);
    return RELARM_OK;
}

size_t relarm_report_warning_count(const relarm_report* report) {
    return report ? report->report.warnings.size() : 0;
}

const char* relarm_report_warning(const relarm_report* report, size_t index) {
    return report ? warning_at(report->report.warnings, index) : nullptr;
}

const char* relarm_report_note(void) { return relarm::kRecommendationNote.data(); }

void relarm_report_free(relarm_report* report) { delete report; }

} // extern "C"
