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

#include <span>
#include <string>
#include <vector>

#include "relarm/matrix.hpp"
#include "relarm/normalize.hpp"

namespace relarm {

struct PcaOptions {
    /// Minimum share of total variance the retained components must explain, in (0,1].
    double variance_threshold = 0.95;
    /// Subtract column means before forming the covariance matrix.
    bool center = true;
};

/// Principal components of a normalized matrix and the quantities derived from them.
///
/// Column k of `components` is the k-th eigenvector of the covariance matrix
/// rescaled to unit l1 norm; columns are ordered by descending eigenvalue.
/// `W` holds the absolute values of the first `d` columns (each column sums
/// to one) and `lambda` the first `d` variance fractions.
struct PcaModel {
    Matrix components;
    std::vector<double> eigenvalues;
    std::vector<double> variance_fractions;
    std::size_t d = 0;
    Matrix W;
    std::vector<double> lambda;

    /// Solver (pre-sort) position of each component; records tie order.
    std::vector<std::size_t> solver_order;
    std::vector<double> column_means;
    bool centered = true;
    double variance_threshold = 0.95;

    std::size_t indicator_count() const noexcept { return components.rows(); }

    /// Assembles a model from explicit components; W and lambda are derived.
    static PcaModel from_components(Matrix components, std::vector<double> variance_fractions, std::size_t d);
};

/// Sample covariance (divisor M-1) of the columns of `b`; uncentered when `center` is false.
Matrix covariance_matrix(const Matrix& b, bool center);

/// Smallest count whose cumulative fraction reaches `threshold`, capped at `rank`.
std::size_t select_component_count(std::span<const double> variance_fractions, double threshold, std::size_t rank);

/// Entrywise |components| restricted to the first d columns.
Matrix ranking_matrix(const Matrix& components, std::size_t d);

PcaModel fit_pca(const Matrix& b, const PcaOptions& options = {});
PcaModel fit_pca(const NormalizedMatrix& b, const PcaOptions& options = {});

struct FixtureCheck {
    std::string name;
    double value = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct FixtureReport {
    std::vector<FixtureCheck> checks;
    bool passed() const;
};

/// Arithmetic self-check of a shipped W table: every column must sum to one.
FixtureReport verify_fixture_w(const Matrix& w, double tolerance = 1e-3);

/// Arithmetic self-check of a shipped rating vector against its stated total.
FixtureReport verify_fixture_lambda(std::span<const double> lambda, double expected_total = 0.96,
                                    double tolerance = 5e-3);

} // namespace relarm
