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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "relarm/matrix.hpp"
#include "relarm/rng.hpp"

namespace relarm {

/// Only squared Euclidean distance is implemented; the enum reserves room for others.
enum class Distance { Euclidean };

Distance parse_distance(std::string_view text);

struct KMeansOptions {
    std::size_t k = 0;
    std::uint64_t seed = 0;
    std::size_t restarts = 50;
    std::size_t max_iterations = 300;
    /// Worker threads for restarts. Results do not depend on this value.
    std::size_t threads = 1;
    Distance distance = Distance::Euclidean;
};

/// One Lloyd descent from a given set of initial centers.
struct LloydRun {
    std::vector<std::size_t> assignments;
    Matrix centers;
    double sse = 0.0;
    /// SSE after the initial assignment and after every iteration.
    std::vector<double> sse_history;
    std::size_t iterations = 0;
    bool converged = false;
    std::size_t empty_repairs = 0;
};

/// Best of several k-means++ seeded Lloyd runs. Cluster indices are 0-based.
struct ClusteringResult {
    std::vector<std::size_t> assignments;
    Matrix centers;
    double sse = 0.0;
    std::size_t restarts_used = 0;
    std::uint64_t seed = 0;
    std::size_t winning_restart = 0;
    std::size_t iterations = 0;
    bool converged = false;
    std::vector<double> sse_history;

    std::size_t k() const noexcept { return centers.rows(); }
    std::vector<std::size_t> sizes() const;
};

std::size_t count_distinct_rows(const Matrix& points);

/// Index of the closest center; ties go to the lowest index.
std::size_t nearest_center(std::span<const double> point, const Matrix& centers);

double total_sse(const Matrix& points, const Matrix& centers, std::span<const std::size_t> assignments);

/// k-means++ seeding: first center uniform, then each next center drawn with
/// probability proportional to its squared distance from the chosen ones.
Matrix kmeanspp_seed(const Matrix& points, std::size_t k, Rng& rng);

LloydRun lloyd(const Matrix& points, Matrix initial_centers, std::size_t max_iterations);

/// Runs `restarts` seeded descents and keeps the minimum-SSE one (earliest on ties).
ClusteringResult kmeans(const Matrix& points, const KMeansOptions& options);

std::string write_assignments_csv(const std::vector<std::string>& objects, const ClusteringResult& result);
std::string write_centers_csv(const ClusteringResult& result);

} // namespace relarm
