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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "relarm/clustering.hpp"

namespace relarm {

/// Footer carried by every rating report.
inline constexpr std::string_view kRecommendationNote =
    "Categories produced by this model are a recommendation to a rating agency's rating committee, "
    "not a final rating decision.";

/// Ordered category labels, best first.
struct RatingScale {
    std::vector<std::string> labels;

    static RatingScale standard(); // AAA, AA, A, BBB, BB, B, CCC
    std::size_t size() const noexcept { return labels.size(); }
    bool contains(std::string_view label) const;
    void validate() const;
};

/// |<center, lambda>|.
double project_center(std::span<const double> center, std::span<const double> lambda);

struct ClusterRating {
    std::size_t cluster = 0; // 0-based
    std::vector<double> center;
    double projection = 0.0;
    std::size_t rank = 0; // 0 = best
    std::string label;
    std::size_t size = 0;
};

struct ObjectRating {
    std::string object;
    std::size_t cluster = 0;
    std::string label;
};

struct RatingResult {
    std::vector<ObjectRating> objects;
    /// Indexed by cluster id.
    std::vector<ClusterRating> clusters;
    /// Cluster pairs (lower id first) whose projections are exactly equal.
    std::vector<std::pair<std::size_t, std::size_t>> ties;
};

/// Binds scale labels to clusters by descending projection on `lambda`;
/// equal projections keep ascending cluster order and are reported in `ties`.
RatingResult assign_ratings(const ClusteringResult& clusters, std::span<const double> lambda,
                            const RatingScale& scale, const std::vector<std::string>& objects);

/// One line of a rating list file.
struct RatingListEntry {
    std::string object;
    std::size_t cluster = 0; // 1-based as written
    double projection = 0.0;
    std::string category;
};

std::vector<RatingListEntry> to_rating_list(const RatingResult& result);
std::string write_rating_csv(std::span<const RatingListEntry> entries);
std::vector<RatingListEntry> parse_rating_csv(std::string_view text, const std::string& source = {});

/// Maps agency subcategories (AA+, Aa2, BBB-, ...) to coarse scale labels.
class CategoryCollapse {
public:
    /// S&P/Fitch modifiers and Moody's numeric modifiers for AAA..CCC.
    static CategoryCollapse standard();

    void set(std::string from, std::string to);
    const std::map<std::string, std::string>& table() const noexcept { return table_; }

    /// Scale labels map to themselves; otherwise the table decides. Returns
    /// nullopt when the result is not a label of `scale`.
    std::optional<std::string> collapse(std::string_view category, const RatingScale& scale) const;

private:
    std::map<std::string, std::string> table_;
};

struct ReferenceRating {
    std::string object;
    std::string agency;
    std::string category; // empty when the agency does not rate the object
    std::size_t line = 0;

    bool rated() const noexcept { return !category.empty(); }
};

/// Reads `object,agency,category` rows. "not rated", "NR" and blanks mark unrated entries.
std::vector<ReferenceRating> parse_reference_csv(std::string_view text, const std::string& source = {});

struct AgencyComparison {
    std::string agency;
    std::string category;
    std::string collapsed;
    bool matched = false;
};

struct ObjectAgreement {
    std::string object;
    std::string model_category;
    std::vector<AgencyComparison> agencies;
    bool comparable = false; // at least one rated agency entry
    bool matched = false;    // model category equals at least one collapsed agency category
};

struct AgreementReport {
    std::vector<ObjectAgreement> objects;
    std::size_t matched = 0;
    std::size_t compared = 0;
    std::optional<double> fraction; // empty when nothing was comparable
    std::vector<std::string> warnings;

    nlohmann::json to_json() const;
};

AgreementReport score_agreement(std::span<const RatingListEntry> ratings, std::span<const ReferenceRating> reference,
                                const CategoryCollapse& collapse, const RatingScale& scale);

} // namespace relarm
