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

#include "relarm/clustering.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "relarm/csv.hpp"

namespace relarm {

Distance parse_distance(std::string_view text) {
    if (text == "euclidean")
        return Distance::Euclidean;
    fail(ErrorKind::Validation, "unsupported distance '" + std::string(text) + "' (only euclidean is implemented)");
}

std::vector<std::size_t> ClusteringResult::sizes() const {
    std::vector<std::size_t> out(k(), 0);
    for (auto a : assignments)
        ++out[a];
    return out;
}

std::size_t count_distinct_rows(const Matrix& points) {
    std::vector<std::size_t> idx(points.rows());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    auto less = [&](std::size_t a, std::size_t b) {
        const auto ra = points.row(a);
        const auto rb = points.row(b);
        return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
    };
    std::sort(idx.begin(), idx.end(), less);
    std::size_t distinct = idx.empty() ? 0 : 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (less(idx[i - 1], idx[i]))
            ++distinct;
    return distinct;
}

std::size_t nearest_center(std::span<const double> point, const Matrix& centers) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t q = 0; q < centers.rows(); ++q) {
        const double d = squared_distance(point, centers.row(q));
        if (d < best_d) {
            best_d = d;
            best = q;
        }
    }
    return best;
}

double total_sse(const Matrix& points, const Matrix& centers, std::span<const std::size_t> assignments) {
    double s = 0.0;
    for (std::size_t i = 0; i < points.rows(); ++i)
        s += squared_distance(points.row(i), centers.row(assignments[i]));
    return s;
}

Matrix kmeanspp_seed(const Matrix& points, std::size_t k, Rng& rng) {
    const std::size_t m = points.rows();
    require(k >= 1 && k <= m, "kmeanspp_seed: k out of range");
    Matrix centers(k, points.cols());

    auto first = static_cast<std::size_t>(rng.uniform() * static_cast<double>(m));
    first = std::min(first, m - 1);
    std::copy(points.row(first).begin(), points.row(first).end(), centers.row(0).begin());

    std::vector<double> d2(m);
    for (std::size_t i = 0; i < m; ++i)
        d2[i] = squared_distance(points.row(i), centers.row(0));

    for (std::size_t c = 1; c < k; ++c) {
        double total = 0.0;
        for (double v : d2)
            total += v;
        if (!(total > 0.0))
            fail(ErrorKind::Numerical, "k-means++ seeding ran out of distinct points");
        const double target = rng.uniform() * total;
        std::size_t pick = m;
        std::size_t last_positive = 0;
        double cumulative = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (d2[i] <= 0.0)
                continue;
            last_positive = i;
            cumulative += d2[i];
            if (cumulative > target) {
                pick = i;
                break;
            }
        }
        if (pick == m)
            pick = last_positive;
        std::copy(points.row(pick).begin(), points.row(pick).end(), centers.row(c).begin());
        for (std::size_t i = 0; i < m; ++i)
            d2[i] = std::min(d2[i], squared_distance(points.row(i), centers.row(c)));
    }
    return centers;
}

namespace {

double assign_all(const Matrix& points, const Matrix& centers, std::vector<std::size_t>& assignments) {
    double sse = 0.0;
    for (std::size_t i = 0; i < points.rows(); ++i) {
        assignments[i] = nearest_center(points.row(i), centers);
        sse += squared_distance(points.row(i), centers.row(assignments[i]));
    }
    return sse;
}

// Moves, for every empty cluster, the point farthest from its current center
// (taken from clusters with at least two members) into that cluster.
std::size_t repair_empty(const Matrix& points, const Matrix& centers, std::vector<std::size_t>& assignments) {
    const std::size_t k = centers.rows();
    std::vector<std::size_t> counts(k, 0);
    for (auto a : assignments)
        ++counts[a];
    std::size_t repairs = 0;
    for (std::size_t j = 0; j < k; ++j) {
        if (counts[j] != 0)
            continue;
        std::size_t far = points.rows();
        double far_d = -1.0;
        for (std::size_t i = 0; i < points.rows(); ++i) {
            if (counts[assignments[i]] < 2)
                continue;
            const double d = squared_distance(points.row(i), centers.row(assignments[i]));
            if (d > far_d) {
                far_d = d;
                far = i;
            }
        }
        if (far == points.rows())
            fail(ErrorKind::Numerical, "k-means: cannot repair empty cluster (k exceeds point count)");
        --counts[assignments[far]];
        assignments[far] = j;
        counts[j] = 1;
        ++repairs;
    }
    return repairs;
}

Matrix cluster_means(const Matrix& points, std::span<const std::size_t> assignments, std::size_t k) {
    Matrix centers(k, points.cols());
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t i = 0; i < points.rows(); ++i) {
        auto c = centers.row(assignments[i]);
        const auto p = points.row(i);
        for (std::size_t j = 0; j < p.size(); ++j)
            c[j] += p[j];
        ++counts[assignments[i]];
    }
    for (std::size_t q = 0; q < k; ++q)
        for (double& x : centers.row(q))
            x /= static_cast<double>(counts[q]);
    return centers;
}

} // namespace

LloydRun lloyd(const Matrix& points, Matrix initial_centers, std::size_t max_iterations) {
    require(initial_centers.rows() >= 1 && initial_centers.rows() <= points.rows(), "lloyd: bad center count");
    require(initial_centers.cols() == points.cols(), "lloyd: center dimension mismatch");
    const std::size_t k = initial_centers.rows();

    LloydRun run;
    run.centers = std::move(initial_centers);
    run.assignments.assign(points.rows(), 0);
    run.sse = assign_all(points, run.centers, run.assignments);
    run.sse_history.push_back(run.sse);

    std::vector<std::size_t> next(points.rows());
    while (run.iterations < max_iterations) {
        ++run.iterations;
        run.empty_repairs += repair_empty(points, run.centers, run.assignments);
        run.centers = cluster_means(points, run.assignments, k);
        run.sse = assign_all(points, run.centers, next);
        run.sse_history.push_back(run.sse);
        if (next == run.assignments) {
            run.converged = true;
            return run;
        }
        run.assignments.swap(next);
    }
    // Iteration cap: settle centers on the last assignment so every cluster is
    // non-empty and each center is its members' mean.
    run.empty_repairs += repair_empty(points, run.centers, run.assignments);
    run.centers = cluster_means(points, run.assignments, k);
    run.sse = total_sse(points, run.centers, run.assignments);
    run.sse_history.push_back(run.sse);
    return run;
}

ClusteringResult kmeans(const Matrix& points, const KMeansOptions& options) {
    require(options.k >= 1, "k-means: k must be at least 1");
    require(options.restarts >= 1, "k-means: restarts must be at least 1");
    require(points.rows() >= 1 && points.cols() >= 1, "k-means: no points");
    for (double v : points.data())
        require(std::isfinite(v), "k-means: non-finite coordinate");
    const std::size_t distinct = count_distinct_rows(points);
    if (options.k > distinct)
        fail(ErrorKind::InvalidArgument, "k-means: k = " + std::to_string(options.k) + " exceeds the " +
                                             std::to_string(distinct) + " distinct points");

    std::vector<LloydRun> runs(options.restarts);
    auto run_one = [&](std::size_t r) {
        Rng rng(restart_seed(options.seed, r));
        runs[r] = lloyd(points, kmeanspp_seed(points, options.k, rng), options.max_iterations);
    };
    const std::size_t workers = std::clamp<std::size_t>(options.threads, 1, options.restarts);
    if (workers == 1) {
        for (std::size_t r = 0; r < options.restarts; ++r)
            run_one(r);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t r; (r = next.fetch_add(1)) < options.restarts;)
                        run_one(r);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (auto& t : pool)
            t.join();
        for (auto& e : errors)
            if (e)
                std::rethrow_exception(e);
    }

    std::size_t best = 0;
    for (std::size_t r = 1; r < runs.size(); ++r)
        if (runs[r].sse < runs[best].sse)
            best = r;

    ClusteringResult out;
    auto& win = runs[best];
    out.assignments = std::move(win.assignments);
    out.centers = std::move(win.centers);
    out.sse = win.sse;
    out.sse_history = std::move(win.sse_history);
    out.iterations = win.iterations;
    out.converged = win.converged;
    out.restarts_used = options.restarts;
    out.seed = options.seed;
    out.winning_restart = best;
    return out;
}

std::string write_assignments_csv(const std::vector<std::string>& objects, const ClusteringResult& result) {
    require(objects.size() == result.assignments.size(), "write_assignments_csv: object count mismatch");
    std::string out = "object,cluster\n";
    for (std::size_t i = 0; i < objects.size(); ++i)
        out += csv::escape(objects[i]) + "," + std::to_string(result.assignments[i] + 1) + "\n";
    return out;
}

std::string write_centers_csv(const ClusteringResult& result) {
    std::vector<std::string> names;
    std::vector<std::string> rows;
    for (std::size_t p = 0; p < result.centers.cols(); ++p)
        names.push_back("r" + std::to_string(p + 1));
    for (std::size_t q = 0; q < result.centers.rows(); ++q)
        rows.push_back(std::to_string(q + 1));
    return csv::table("cluster", names, rows, result.centers);
}

} // namespace relarm
