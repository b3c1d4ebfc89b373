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

#include <doctest.h>

#include <cmath>
#include <random>

#include "eigen_oracle.hpp"
#include "relarm/jacobi.hpp"

using namespace relarm;

namespace {

Matrix random_symmetric(std::mt19937_64& gen, std::size_t n) {
    std::normal_distribution<double> g;
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            a(i, j) = a(j, i) = g(gen);
    return a;
}

double residual(const Matrix& a, const SymmetricEigen& e, std::size_t k) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j)
            s += a(i, j) * e.vectors(j, k);
        worst = std::max(worst, std::abs(s - e.values[k] * e.vectors(i, k)));
    }
    return worst;
}

} // namespace

TEST_CASE("diagonal input needs no sweep") {
    auto e = jacobi_eigen(Matrix{{3, 0}, {0, 1}});
    CHECK(e.sweeps == 0);
    CHECK(e.values == std::vector<double>{3, 1});
    CHECK(e.vectors == Matrix::identity(2));
}

TEST_CASE("2x2 closed form") {
    auto e = jacobi_eigen(Matrix{{2, 1}, {1, 2}});
    std::vector<double> v = e.values;
    std::sort(v.begin(), v.end());
    CHECK(v[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(v[1] == doctest::Approx(3.0).epsilon(1e-14));
    for (std::size_t k = 0; k < 2; ++k)
        CHECK(std::abs(std::abs(e.vectors(0, k)) - std::sqrt(0.5)) < 1e-14);
}

TEST_CASE("random symmetric matrices: residuals, orthonormality and oracle spectrum") {
    std::mt19937_64 gen(3);
    for (std::size_t n = 1; n <= 12; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            const auto a = random_symmetric(gen, n);
            const auto e = jacobi_eigen(a);
            for (std::size_t k = 0; k < n; ++k)
                CHECK(residual(a, e, k) < 1e-10);
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q) {
                    double s = 0.0;
                    for (std::size_t i = 0; i < n; ++i)
                        s += e.vectors(i, p) * e.vectors(i, q);
                    CHECK(std::abs(s - (p == q ? 1.0 : 0.0)) < 1e-12);
                }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(relarm_test::to_eigen(a));
            std::vector<double> mine = e.values;
            std::sort(mine.begin(), mine.end());
            for (std::size_t k = 0; k < n; ++k)
                CHECK(std::abs(mine[k] - solver.eigenvalues()(k)) < 1e-10);
        }
}

TEST_CASE("input checks and sweep cap") {
    CHECK_THROWS(jacobi_eigen(Matrix(2, 3)));
    CHECK_THROWS(jacobi_eigen(Matrix{{1, 2}, {3, 1}}));
    try {
        jacobi_eigen(Matrix{{1, 2}, {2, 1}}, {1e-12, 0});
        FAIL("expected non-convergence");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Numerical);
    }
}
