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

#include "relarm/rating.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "relarm/csv.hpp"
#include "relarm/format.hpp"

namespace relarm {

RatingScale RatingScale::standard() {
    return {{"AAA", "AA", "A", "BBB", "BB", "B", "CCC"}};
}

bool RatingScale::contains(std::string_view label) const {
    return std::find(labels.begin(), labels.end(), label) != labels.end();
}

void RatingScale::validate() const {
    if (labels.empty())
        fail(ErrorKind::Validation, "rating scale has no labels");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
        if (l.empty())
            fail(ErrorKind::Validation, "rating scale contains an empty label");
        if (!seen.insert(l).second)
            fail(ErrorKind::Validation, "rating scale label '" + l + "' repeated");
    }
}

double project_center(std::span<const double> center, std::span<const double> lambda) {
    require(center.size() == lambda.size(), "project_center: center has " + std::to_string(center.size()) +
                                                " coordinates but lambda has " + std::to_string(lambda.size()));
    return std::abs(dot(center, lambda));
}

RatingResult assign_ratings(const ClusteringResult& clusters, std::span<const double> lambda, const RatingScale& scale,
                            const std::vector<std::string>& objects) {
    scale.validate();
    const std::size_t k = clusters.k();
    if (scale.size() != k)
        fail(ErrorKind::Validation, "rating scale has " + std::to_string(scale.size()) + " labels but there are " +
                                        std::to_string(k) + " clusters");
    require(objects.size() == clusters.assignments.size(), "assign_ratings: object count mismatch");

    RatingResult out;
    out.clusters.resize(k);
    for (std::size_t q = 0; q < k; ++q) {
        auto& c = out.clusters[q];
        c.cluster = q;
        c.center.assign(clusters.centers.row(q).begin(), clusters.centers.row(q).end());
        c.projection = project_center(c.center, lambda);
    }
    for (auto a : clusters.assignments)
        ++out.clusters[a].size;

    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return out.clusters[a].projection > out.clusters[b].projection;
    });
    for (std::size_t r = 0; r < k; ++r) {
        out.clusters[order[r]].rank = r;
        out.clusters[order[r]].label = scale.labels[r];
    }
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            if (out.clusters[a].projection == out.clusters[b].projection)
                out.ties.emplace_back(a, b);

    for (std::size_t i = 0; i < objects.size(); ++i) {
        const auto q = clusters.assignments[i];
        out.objects.push_back({objects[i], q, out.clusters[q].label});
    }
    return out;
}

std::vector<RatingListEntry> to_rating_list(const RatingResult& result) {
    std::vector<RatingListEntry> out;
    for (const auto& o : result.objects)
        out.push_back({o.object, o.cluster + 1, result.clusters[o.cluster].projection, o.label});
    return out;
}

std::string write_rating_csv(std::span<const RatingListEntry> entries) {
    std::string out = "object,cluster,projection,category\n";
    for (const auto& e : entries)
        out += csv::join({e.object, std::to_string(e.cluster), format_double(e.projection), e.category}) + "\n";
    return out;
}

namespace {

std::unordered_map<std::string, std::size_t> header_index(const csv::Record& header,
                                                          std::initializer_list<const char*> required,
                                                          const std::string& source) {
    std::unordered_map<std::string, std::size_t> idx;
    for (std::size_t c = 0; c < header.fields.size(); ++c)
        idx.emplace(header.fields[c], c);
    for (const char* name : required)
        if (!idx.count(name))
            throw DataError(source, header.line, 0, std::string("missing column '") + name + "'");
    return idx;
}

std::string lower(std::string_view s) {
    std::string out;
    for (char c : s)
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
}

} // namespace

std::vector<RatingListEntry> parse_rating_csv(std::string_view text, const std::string& source) {
    const auto records = csv::parse(text, source);
    if (records.empty())
        throw DataError(source, 1, 0, "empty rating list");
    const auto idx = header_index(records[0], {"object", "category"}, source);
    std::vector<RatingListEntry> out;
    std::unordered_set<std::string> seen;
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        if (rec.fields.size() != records[0].fields.size())
            throw DataError(source, rec.line, 0, "wrong number of fields");
        RatingListEntry e;
        e.object = rec.fields[idx.at("object")];
        e.category = rec.fields[idx.at("category")];
        if (e.object.empty())
            throw DataError(source, rec.line, idx.at("object") + 1, "missing object id");
        if (e.category.empty())
            throw DataError(source, rec.line, idx.at("category") + 1, "missing category");
        if (!seen.insert(e.object).second)
            throw DataError(source, rec.line, idx.at("object") + 1, "duplicate object '" + e.object + "'");
        if (auto it = idx.find("cluster"); it != idx.end()) {
            auto v = parse_double(rec.fields[it->second]);
            if (!v || *v < 1 || *v != std::floor(*v))
                throw DataError(source, rec.line, it->second + 1, "cluster must be a positive integer");
            e.cluster = static_cast<std::size_t>(*v);
        }
        if (auto it = idx.find("projection"); it != idx.end()) {
            auto v = parse_double(rec.fields[it->second]);
            if (!v)
                throw DataError(source, rec.line, it->second + 1, "non-numeric projection");
            e.projection = *v;
        }
        out.push_back(std::move(e));
    }
    return out;
}

CategoryCollapse CategoryCollapse::standard() {
    CategoryCollapse c;
    // S&P / Fitch notches
    for (const char* base : {"AA", "A", "BBB", "BB", "B", "CCC"}) {
        const std::string b = base;
        c.set(b + "+", b);
        c.set(b + "-", b);
    }
    // Moody's
    c.set("Aaa", "AAA");
    const std::pair<const char*, const char*> moodys[] = {
        {"Aa", "AA"}, {"A", "A"}, {"Baa", "BBB"}, {"Ba", "BB"}, {"B", "B"}, {"Caa", "CCC"}};
    for (const auto& [prefix, coarse] : moodys) {
        const std::string p = prefix;
        if (p != "A" && p != "B")
            c.set(p, coarse);
        for (const char* notch : {"1", "2", "3"})
            c.set(p + notch, coarse);
    }
    return c;
}

void CategoryCollapse::set(std::string from, std::string to) {
    table_[std::move(from)] = std::move(to);
}

std::optional<std::string> CategoryCollapse::collapse(std::string_view category, const RatingScale& scale) const {
    if (scale.contains(category))
        return std::string(category);
    auto it = table_.find(std::string(category));
    if (it == table_.end() || !scale.contains(it->second))
        return std::nullopt;
    return it->second;
}

std::vector<ReferenceRating> parse_reference_csv(std::string_view text, const std::string& source) {
    const auto records = csv::parse(text, source);
    std::vector<ReferenceRating> out;
    if (records.empty())
        return out;
    const auto idx = header_index(records[0], {"object", "agency", "category"}, source);
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        if (rec.fields.size() != records[0].fields.size())
            throw DataError(source, rec.line, 0, "wrong number of fields");
        ReferenceRating ref;
        ref.line = rec.line;
        ref.object = rec.fields[idx.at("object")];
        ref.agency = rec.fields[idx.at("agency")];
        ref.category = rec.fields[idx.at("category")];
        if (ref.object.empty())
            throw DataError(source, rec.line, idx.at("object") + 1, "missing object id");
        if (ref.agency.empty())
            throw DataError(source, rec.line, idx.at("agency") + 1, "missing agency");
        const auto l = lower(ref.category);
        if (l == "not rated" || l == "nr" || l == "n/a")
            ref.category.clear();
        out.push_back(std::move(ref));
    }
    return out;
}

nlohmann::json AgreementReport::to_json() const {
    using nlohmann::json;
    json objs = json::array();
    for (const auto& o : objects) {
        json agencies = json::array();
        for (const auto& a : o.agencies)
            agencies.push_back(
                {{"agency", a.agency}, {"category", a.category}, {"collapsed", a.collapsed}, {"matched", a.matched}});
        objs.push_back({{"object", o.object},
                        {"model_category", o.model_category},
                        {"comparable", o.comparable},
                        {"matched", o.matched},
                        {"agencies", agencies}});
    }
    json doc = {{"matched", matched}, {"compared", compared}, {"objects", objs}, {"warnings", warnings}};
    if (fraction)
        doc["fraction"] = *fraction;
    else
        doc["fraction"] = nullptr;
    doc["status"] = compared == 0 ? "no comparable objects" : "ok";
    doc["note"] = std::string(kRecommendationNote);
    return doc;
}

AgreementReport score_agreement(std::span<const RatingListEntry> ratings, std::span<const ReferenceRating> reference,
                                const CategoryCollapse& collapse, const RatingScale& scale) {
    AgreementReport report;
    std::unordered_map<std::string, std::size_t> position;
    for (const auto& r : ratings) {
        position.emplace(r.object, report.objects.size());
        report.objects.push_back({r.object, r.category, {}, false, false});
    }
    std::unordered_set<std::string> warned;
    for (const auto& ref : reference) {
        auto it = position.find(ref.object);
        if (it == position.end()) {
            if (warned.insert(ref.object).second)
                report.warnings.push_back("reference object '" + ref.object + "' is not in the rating list; skipped");
            continue;
        }
        if (!ref.rated())
            continue;
        auto coarse = collapse.collapse(ref.category, scale);
        if (!coarse)
            fail(ErrorKind::Validation, "line " + std::to_string(ref.line) + ": category '" + ref.category +
                                            "' of " + ref.agency + " for '" + ref.object +
                                            "' does not collapse to the rating scale");
        auto& obj = report.objects[it->second];
        const bool match = *coarse == obj.model_category;
        obj.agencies.push_back({ref.agency, ref.category, *coarse, match});
        obj.comparable = true;
        obj.matched = obj.matched || match;
    }
    for (const auto& o : report.objects) {
        if (!o.comparable)
            continue;
        ++report.compared;
        if (o.matched)
            ++report.matched;
    }
    if (report.compared > 0)
        report.fraction = static_cast<double>(report.matched) / static_cast<double>(report.compared);
    return report;
}

} // namespace relarm
