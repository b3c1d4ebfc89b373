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

// relarm command-line front end. Talks to the library only through relarm.h.

#include <cstdio>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "relarm/relarm.h"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;

struct Deleter {
    void operator()(relarm_config* p) const { relarm_config_free(p); }
    void operator()(relarm_model* p) const { relarm_model_free(p); }
    void operator()(relarm_ratings* p) const { relarm_ratings_free(p); }
    void operator()(relarm_report* p) const { relarm_report_free(p); }
};
template <class T>
using Handle = std::unique_ptr<T, Deleter>;

/// Thrown to unwind with an exit code after the message has been printed.
struct Exit {
    int code;
};

void check(relarm_status status, const std::string& context) {
    if (status == RELARM_OK)
        return;
    std::fprintf(stderr, "relarm: %s: %s: %s\n", context.c_str(), relarm_status_string(status), relarm_last_error());
    throw Exit{status == RELARM_ERR_NUMERICAL ? kExitNumerical : kExitValidation};
}

struct Options {
    std::string config;
    std::string data;
    std::string reference;
    std::string model;
    std::string ratings;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> k;
    std::optional<double> threshold;
    bool dump = false;
};

Handle<relarm_config> load_config(const Options& o) {
    relarm_config* raw = nullptr;
    check(relarm_config_load(o.config.c_str(), &raw), o.config);
    Handle<relarm_config> cfg(raw);
    if (o.k)
        check(relarm_config_set_k(cfg.get(), *o.k), "--k");
    if (o.seed)
        check(relarm_config_set_seed(cfg.get(), *o.seed), "--seed");
    if (o.threshold)
        check(relarm_config_set_threshold(cfg.get(), *o.threshold), "--threshold");
    if (o.dump)
        check(relarm_config_set_dump_intermediates(cfg.get(), 1), "--dump-intermediates");
    return cfg;
}

fs::path out_dir(const Options& o, const relarm_config* cfg) {
    fs::path dir = !o.out_dir.empty() ? fs::path(o.out_dir)
                   : (cfg && *relarm_config_out_dir(cfg)) ? fs::path(relarm_config_out_dir(cfg))
                                                          : fs::path(".");
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        std::fprintf(stderr, "relarm: cannot create %s: %s\n", dir.string().c_str(), ec.message().c_str());
        throw Exit{kExitValidation};
    }
    return dir;
}

void print_warnings(std::size_t count, const char* (*get)(const void*, std::size_t), const void* handle) {
    for (std::size_t i = 0; i < count; ++i)
        std::fprintf(stderr, "warning: %s\n", get(handle, i));
}

void model_warnings(const relarm_model* m) {
    print_warnings(
        relarm_model_warning_count(m),
        [](const void* h, std::size_t i) { return relarm_model_warning(static_cast<const relarm_model*>(h), i); }, m);
}

void ratings_warnings(const relarm_ratings* r) {
    print_warnings(
        relarm_ratings_warning_count(r),
        [](const void* h, std::size_t i) { return relarm_ratings_warning(static_cast<const relarm_ratings*>(h), i); },
        r);
}

void score_and_report(const relarm_ratings* ratings, const std::string& reference, const relarm_config* cfg,
                      const fs::path& dir) {
    relarm_report* raw = nullptr;
    check(relarm_score(ratings, reference.c_str(), cfg, &raw), reference);
    Handle<relarm_report> report(raw);
    const auto path = (dir / "agreement.json").string();
    check(relarm_report_save(report.get(), path.c_str()), path);
    for (std::size_t i = 0; i < relarm_report_warning_count(report.get()); ++i)
        std::fprintf(stderr, "warning: %s\n", relarm_report_warning(report.get(), i));
    relarm_report_summary s{};
    check(relarm_report_get_summary(report.get(), &s), "summary");
    if (s.has_fraction)
        std::printf("agreement: %zu/%zu = %.4f\n", s.matched, s.compared, s.fraction);
    else
        std::printf("agreement: no comparable objects\n");
    std::printf("note: %s\n", relarm_report_note());
}

Handle<relarm_model> fit(const Options& o, const relarm_config* cfg, const fs::path& dir) {
    relarm_model* raw = nullptr;
    check(relarm_fit(cfg, o.data.c_str(), &raw), o.data);
    Handle<relarm_model> model(raw);
    model_warnings(model.get());
    const auto path = (dir / "model.json").string();
    check(relarm_model_save(model.get(), path.c_str()), path);
    if (relarm_config_dump_intermediates(cfg))
        check(relarm_model_write_intermediates(model.get(), (dir / "intermediates").string().c_str()),
              "intermediates");
    relarm_model_info info{};
    check(relarm_model_get_info(model.get(), &info), "model info");
    std::printf("fitted %zu objects x %zu indicators: d=%zu (explained %.4f), k=%zu, sse=%.6g\n", info.objects,
                info.indicators, info.components, info.explained, info.clusters, info.sse);
    return model;
}

int cmd_run(const Options& o) {
    auto cfg = load_config(o);
    const auto dir = out_dir(o, cfg.get());
    auto model = fit(o, cfg.get(), dir);
    relarm_ratings* raw = nullptr;
    check(relarm_model_ratings(model.get(), &raw), "ratings");
    Handle<relarm_ratings> ratings(raw);
    const auto path = (dir / "ratings.csv").string();
    check(relarm_ratings_save(ratings.get(), path.c_str()), path);
    if (!o.reference.empty())
        score_and_report(ratings.get(), o.reference, cfg.get(), dir);
    return kExitOk;
}

int cmd_fit(const Options& o) {
    auto cfg = load_config(o);
    fit(o, cfg.get(), out_dir(o, cfg.get()));
    return kExitOk;
}

int cmd_normalize(const Options& o) {
    auto cfg = load_config(o);
    const auto path = (out_dir(o, cfg.get()) / "normalized.csv").string();
    std::size_t warnings = 0;
    check(relarm_normalize_file(cfg.get(), o.data.c_str(), path.c_str(), &warnings), o.data);
    if (warnings)
        std::fprintf(stderr, "warning: %zu constant indicator(s) set to 0.5\n", warnings);
    std::printf("wrote %s\n", path.c_str());
    return kExitOk;
}

int cmd_assign(const Options& o) {
    relarm_model* raw_model = nullptr;
    check(relarm_model_load(o.model.c_str(), &raw_model), o.model);
    Handle<relarm_model> model(raw_model);
    relarm_ratings* raw = nullptr;
    check(relarm_model_assign(model.get(), o.data.c_str(), &raw), o.data);
    Handle<relarm_ratings> ratings(raw);
    ratings_warnings(ratings.get());
    const auto dir = out_dir(o, nullptr);
    const auto path = (dir / "ratings.csv").string();
    check(relarm_ratings_save(ratings.get(), path.c_str()), path);
    std::printf("rated %zu objects -> %s\n", relarm_ratings_count(ratings.get()), path.c_str());
    if (!o.reference.empty())
        score_and_report(ratings.get(), o.reference, nullptr, dir);
    return kExitOk;
}

int cmd_score(const Options& o) {
    Handle<relarm_config> cfg;
    if (!o.config.empty())
        cfg = load_config(o);
    relarm_ratings* raw = nullptr;
    check(relarm_ratings_load(o.ratings.c_str(), &raw), o.ratings);
    Handle<relarm_ratings> ratings(raw);
    score_and_report(ratings.get(), o.reference, cfg.get(), out_dir(o, cfg.get()));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"relarm: rating model from relative PCA attributes and k-means clustering"};
    app.set_version_flag("--version", std::string(relarm_version()));
    app.require_subcommand(1);
    Options o;

    auto add_pipeline_flags = [&](CLI::App* sub, bool with_reference) {
        sub->add_option("--config", o.config, "JSON model config (indicators and parameters)")->required();
        sub->add_option("--data", o.data, "CSV data file: object id column then one column per indicator")->required();
        sub->add_option("--out-dir", o.out_dir, "output directory (default: config out_dir or .)");
        sub->add_option("--seed", o.seed, "k-means seed (overrides config)");
        sub->add_option("--k", o.k, "number of clusters / rating categories (overrides config)");
        sub->add_option("--threshold", o.threshold, "retained variance threshold in (0,1] (overrides config)");
        sub->add_flag("--dump-intermediates", o.dump, "write normalized matrix, W, lambda, features, centers");
        if (with_reference)
            sub->add_option("--reference", o.reference, "agency ratings CSV (object,agency,category) to score against");
    };

    auto* run = app.add_subcommand("run", "fit the model, write ratings, optionally score against a reference");
    add_pipeline_flags(run, true);
    auto* fitc = app.add_subcommand("fit", "fit the model and write model.json");
    add_pipeline_flags(fitc, false);

    auto* norm = app.add_subcommand("normalize", "write the min-max normalized matrix as CSV");
    norm->add_option("--config", o.config, "JSON model config")->required();
    norm->add_option("--data", o.data, "CSV data file")->required();
    norm->add_option("--out-dir", o.out_dir, "output directory");

    auto* assign = app.add_subcommand("assign", "rate objects with a saved model");
    assign->add_option("--model", o.model, "model.json written by fit or run")->required();
    assign->add_option("--data", o.data, "CSV data file")->required();
    assign->add_option("--reference", o.reference, "agency ratings CSV to score against");
    assign->add_option("--out-dir", o.out_dir, "output directory");

    auto* score = app.add_subcommand("score", "compare a rating list with agency ratings");
    score->add_option("--ratings", o.ratings, "rating list CSV (object,cluster,projection,category)")->required();
    score->add_option("--reference", o.reference, "agency ratings CSV (object,agency,category)")->required();
    score->add_option("--config", o.config, "config supplying labels and collapse overrides");
    score->add_option("--out-dir", o.out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (*run)
            return cmd_run(o);
        if (*fitc)
            return cmd_fit(o);
        if (*norm)
            return cmd_normalize(o);
        if (*assign)
            return cmd_assign(o);
        if (*score)
            return cmd_score(o);
    } catch (const Exit& e) {
        return e.code;
    }
    return kExitValidation;
}
