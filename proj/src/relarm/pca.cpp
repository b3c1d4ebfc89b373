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

#include "relarm/pca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "relarm/jacobi.hpp"

namespace relarm {

namespace {

constexpr double kRankTolerance = 1e-12;
constexpr double kThresholdSlack = 1e-12;

// Largest-magnitude entry (first on ties) made positive.
void canonical_sign(std::span<double> v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (std::abs(v[i]) > std::abs(v[best]))
            best = i;
    if (v[best] < 0.0)
        for (double& x : v)
            x = -x;
}

} // namespace

PcaModel PcaModel::from_components(Matrix components, std::vector<double> variance_fractions, std::size_t d) {
    require(components.rows() == components.cols(), "PcaModel: components must be square");
    require(variance_fractions.size() == components.cols(), "PcaModel: one variance fraction per component");
    require(d >= 1 && d <= components.cols(), "PcaModel: d out of range");
    PcaModel m;
    m.W = ranking_matrix(components, d);
    m.lambda.assign(variance_fractions.begin(), variance_fractions.begin() + static_cast<std::ptrdiff_t>(d));
    m.components = std::move(components);
    m.variance_fractions = std::move(variance_fractions);
    m.eigenvalues = m.variance_fractions;
    m.d = d;
    m.solver_order.resize(m.components.cols());
    std::iota(m.solver_order.begin(), m.solver_order.end(), std::size_t{0});
    m.column_means.assign(m.components.rows(), 0.0);
    return m;
}

Matrix covariance_matrix(const Matrix& b, bool center) {
    const std::size_t m = b.rows();
    const std::size_t n = b.cols();
    require(m >= 2, "covariance_matrix: need at least 2 rows");
    std::vector<double> mean(n, 0.0);
    if (center) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                mean[j] += b(i, j);
        for (double& x : mean)
            x /= static_cast<double>(m);
    }
    Matrix c(n, n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p; q < n; ++q) {
            double s = 0.0;
            for (std::size_t i = 0; i < m; ++i)
                s += (b(i, p) - mean[p]) * (b(i, q) - mean[q]);
            c(p, q) = c(q, p) = s / static_cast<double>(m - 1);
        }
    return c;
}

std::size_t select_component_count(std::span<const double> variance_fractions, double threshold, std::size_t rank) {
    require(threshold > 0.0 && threshold <= 1.0, "variance threshold must lie in (0,1]");
    require(!variance_fractions.empty(), "select_component_count: no components");
    std::size_t d = variance_fractions.size();
    double cumulative = 0.0;
    for (std::size_t k = 0; k < variance_fractions.size(); ++k) {
        cumulative += variance_fractions[k];
        if (cumulative + kThresholdSlack >= threshold) {
            d = k + 1;
            break;
        }
    }
    return std::max<std::size_t>(1, std::min(d, rank));
}

Matrix ranking_matrix(const Matrix& components, std::size_t d) {
    require(d <= components.cols(), "ranking_matrix: d exceeds component count");
    Matrix w(components.rows(), d);
    for (std::size_t k = 0; k < components.rows(); ++k)
        for (std::size_t p = 0; p < d; ++p)
            w(k, p) = std::abs(components(k, p));
    return w;
}

PcaModel fit_pca(const Matrix& b, const PcaOptions& options) {
    require(options.variance_threshold > 0.0 && options.variance_threshold <= 1.0,
            "variance threshold must lie in (0,1]");
    require(b.rows() >= 2, "fit_pca: need at least 2 rating objects");
    require(b.cols() >= 1, "fit_pca: need at least 1 indicator");
    const std::size_t n = b.cols();

    const Matrix cov = covariance_matrix(b, options.center);
    const auto eig = jacobi_eigen(cov);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return eig.values[x] > eig.values[y]; });

    PcaModel model;
    model.centered = options.center;
    model.variance_threshold = options.variance_threshold;
    model.solver_order = order;
    model.column_means.assign(n, 0.0);
    if (options.center)
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t i = 0; i < b.rows(); ++i)
                s += b(i, j);
            model.column_means[j] = s / static_cast<double>(b.rows());
        }

    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        model.eigenvalues.push_back(eig.values[order[k]]);
        total += std::max(0.0, model.eigenvalues.back());
    }
    if (!(total > 0.0))
        fail(ErrorKind::Numerical, "fit_pca: data has no variance (every indicator is constant)");

    std::size_t rank = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const double lam = std::max(0.0, model.eigenvalues[k]);
        model.variance_fractions.push_back(lam / total);
        if (lam > kRankTolerance * total)
            ++rank;
    }

    model.components = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<double> v = eig.vectors.column(order[k]);
        canonical_sign(v);
        double l1 = 0.0;
        for (double x : v)
            l1 += std::abs(x);
        for (double& x : v)
            x /= l1;
        model.components.set_column(k, v);
    }

    model.d = select_component_count(model.variance_fractions, options.variance_threshold, rank);
    model.W = ranking_matrix(model.components, model.d);
    model.lambda.assign(model.variance_fractions.begin(),
                        model.variance_fractions.begin() + static_cast<std::ptrdiff_t>(model.d));
    return model;
}

PcaModel fit_pca(const NormalizedMatrix& b, const PcaOptions& options) {
    return fit_pca(b.values, options);
}

bool FixtureReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const FixtureCheck& c) { return c.passed; });
}

FixtureReport verify_fixture_w(const Matrix& w, double tolerance) {
    require(!w.empty(), "verify_fixture_w: empty fixture");
    FixtureReport report;
    for (std::size_t p = 0; p < w.cols(); ++p) {
        double s = 0.0;
        bool nonnegative = true;
        for (std::size_t k = 0; k < w.rows(); ++k) {
            s += w(k, p);
            nonnegative = nonnegative && w(k, p) >= 0.0;
        }
        report.checks.push_back({"column " + std::to_string(p + 1) + " sum", s, 1.0, tolerance,
                                 nonnegative && std::abs(s - 1.0) <= tolerance});
    }
    return report;
}

FixtureReport verify_fixture_lambda(std::span<const double> lambda, double expected_total, double tolerance) {
    require(!lambda.empty(), "verify_fixture_lambda: empty fixture");
    FixtureReport report;
    double s = 0.0;
    bool descending = true;
    for (std::size_t k = 0; k < lambda.size(); ++k) {
        s += lambda[k];
        if (k > 0 && lambda[k] > lambda[k - 1])
            descending = false;
    }
    report.checks.push_back({"lambda sum", s, expected_total, tolerance,
                             std::abs(s - expected_total) <= tolerance});
    report.checks.push_back({"lambda descending", descending ? 1.0 : 0.0, 1.0, 0.0, descending});
    return report;
}

} // namespace relarm
