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

#include "relarm/config.hpp"

#include <set>

#include "relarm/json_io.hpp"

namespace relarm {

namespace {

using nlohmann::json;

const std::set<std::string> kKnownKeys = {
    "indicators", "variance_threshold", "k",       "labels",     "seed",
    "restarts",   "max_iterations",     "threads", "distance",   "center",
    "dump_intermediates", "out_dir",    "collapse",
};

std::size_t get_count(const json& doc, const char* key, const std::string& source) {
    const auto& v = doc[key];
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
        fail(ErrorKind::Validation, source + ": \"" + key + "\" must be a non-negative integer");
    return v.get<std::size_t>();
}

bool get_bool(const json& doc, const char* key, const std::string& source) {
    if (!doc[key].is_boolean())
        fail(ErrorKind::Validation, source + ": \"" + key + "\" must be true or false");
    return doc[key].get<bool>();
}

std::string get_string(const json& doc, const char* key, const std::string& source) {
    if (!doc[key].is_string())
        fail(ErrorKind::Validation, source + ": \"" + key + "\" must be a string");
    return doc[key].get<std::string>();
}

} // namespace

void PipelineConfig::validate() const {
    if (indicators.empty())
        fail(ErrorKind::Validation, "config declares no indicators");
    validate_indicator_specs(indicators);
    if (!(variance_threshold > 0.0 && variance_threshold <= 1.0))
        fail(ErrorKind::Validation, "variance_threshold must lie in (0,1]");
    if (!k)
        fail(ErrorKind::Validation, "missing required parameter k (set \"k\" in the config or pass --k)");
    if (*k < 1)
        fail(ErrorKind::Validation, "k must be at least 1");
    if (restarts < 1)
        fail(ErrorKind::Validation, "restarts must be at least 1");
    if (max_iterations < 1)
        fail(ErrorKind::Validation, "max_iterations must be at least 1");
    const auto s = scale();
    s.validate();
    if (s.size() != *k)
        fail(ErrorKind::Validation, "rating scale has " + std::to_string(s.size()) + " labels but k = " +
                                        std::to_string(*k));
}

RatingScale PipelineConfig::scale() const {
    if (!labels.empty())
        return {labels};
    if (k && *k == RatingScale::standard().size())
        return RatingScale::standard();
    fail(ErrorKind::Validation, "config has no \"labels\" and k differs from the standard seven-grade scale");
}

CategoryCollapse PipelineConfig::collapse_table() const {
    auto table = CategoryCollapse::standard();
    for (const auto& [from, to] : collapse)
        table.set(from, to);
    return table;
}

KMeansOptions PipelineConfig::kmeans_options() const {
    KMeansOptions o;
    o.k = k.value_or(0);
    o.seed = seed;
    o.restarts = restarts;
    o.max_iterations = max_iterations;
    o.threads = threads;
    o.distance = distance;
    return o;
}

json PipelineConfig::to_json() const {
    json doc = {
        {"indicators", json_io::indicators_to_json(indicators)},
        {"variance_threshold", variance_threshold},
        {"seed", seed},
        {"restarts", restarts},
        {"max_iterations", max_iterations},
        {"distance", "euclidean"},
        {"center", center},
    };
    if (k)
        doc["k"] = *k;
    if (!labels.empty())
        doc["labels"] = labels;
    if (!collapse.empty())
        doc["collapse"] = collapse;
    return doc;
}

PipelineConfig PipelineConfig::from_json(const json& doc, const std::string& source) {
    const std::string where = source.empty() ? std::string("<config>") : source;
    if (!doc.is_object())
        fail(ErrorKind::Validation, where + ": config must be a JSON object");
    for (const auto& [key, _] : doc.items())
        if (!kKnownKeys.count(key))
            fail(ErrorKind::Validation, where + ": unknown config key \"" + key + "\"");

    PipelineConfig c;
    c.indicators = json_io::indicators_from_json(doc, where);
    if (doc.contains("variance_threshold")) {
        if (!doc["variance_threshold"].is_number())
            fail(ErrorKind::Validation, where + ": \"variance_threshold\" must be a number");
        c.variance_threshold = doc["variance_threshold"].get<double>();
    }
    if (doc.contains("k"))
        c.k = get_count(doc, "k", where);
    if (doc.contains("labels")) {
        if (!doc["labels"].is_array())
            fail(ErrorKind::Validation, where + ": \"labels\" must be an array of strings");
        for (const auto& l : doc["labels"]) {
            if (!l.is_string())
                fail(ErrorKind::Validation, where + ": \"labels\" must be an array of strings");
            c.labels.push_back(l.get<std::string>());
        }
    }
    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_integer() || (doc["seed"].is_number_integer() && !doc["seed"].is_number_unsigned()))
            fail(ErrorKind::Validation, where + ": \"seed\" must be a non-negative integer");
        c.seed = doc["seed"].get<std::uint64_t>();
    }
    if (doc.contains("restarts"))
        c.restarts = get_count(doc, "restarts", where);
    if (doc.contains("max_iterations"))
        c.max_iterations = get_count(doc, "max_iterations", where);
    if (doc.contains("threads"))
        c.threads = get_count(doc, "threads", where);
    if (doc.contains("distance"))
        c.distance = parse_distance(get_string(doc, "distance", where));
    if (doc.contains("center"))
        c.center = get_bool(doc, "center", where);
    if (doc.contains("dump_intermediates"))
        c.dump_intermediates = get_bool(doc, "dump_intermediates", where);
    if (doc.contains("out_dir"))
        c.out_dir = get_string(doc, "out_dir", where);
    if (doc.contains("collapse")) {
        if (!doc["collapse"].is_object())
            fail(ErrorKind::Validation, where + ": \"collapse\" must map agency categories to scale labels");
        for (const auto& [from, to] : doc["collapse"].items()) {
            if (!to.is_string())
                fail(ErrorKind::Validation, where + ": collapse target for \"" + from + "\" must be a string");
            c.collapse[from] = to.get<std::string>();
        }
    }
    return c;
}

PipelineConfig load_config(const std::filesystem::path& path) {
    return PipelineConfig::from_json(json_io::read(path), path.string());
}

} // namespace relarm
