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

#include "relarm/attribute_map.hpp"
#include "test_support.hpp"

using namespace relarm;

namespace {

// Model whose single component is (0.3, -0.7), i.e. W column (0.3, 0.7).
PcaModel two_indicator_model() {
    Matrix c{{0.3, 0.7}, {-0.7, 0.3}};
    return PcaModel::from_components(c, {0.8, 0.2}, 1);
}

PcaModel random_model(std::mt19937_64& gen, std::size_t n, std::size_t d) {
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix c(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        double l1 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            c(i, k) = g(gen);
            l1 += std::abs(c(i, k));
        }
        for (std::size_t i = 0; i < n; ++i)
            c(i, k) /= l1;
    }
    std::vector<double> f(n, 1.0 / static_cast<double>(n));
    return PcaModel::from_components(c, f, d);
}

std::vector<double> random_unit_vector(std::mt19937_64& gen, std::size_t n) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> v(n);
    for (auto& x : v)
        x = u(gen);
    return v;
}

} // namespace

TEST_CASE("attribute vector entries are b_k times the signed component") {
    const auto model = two_indicator_model();
    const std::vector<double> b{0.5, 0.5};
    const auto a = attribute_vector(b, model, 0, 3);
    CHECK(a.object_index == 3);
    CHECK(a.component_index == 0);
    REQUIRE(a.values.size() == 2);
    CHECK(std::abs(a.values[0] - 0.15) <= 1e-15);
    CHECK(std::abs(a.values[1] + 0.35) <= 1e-15);
    CHECK(std::abs(a.l1_norm() - 0.5) <= 1e-15);
    CHECK(std::abs(rank_value(b, model, 0) - 0.5) <= 1e-15);

    const std::vector<double> zeros{0.0, 0.0};
    CHECK(attribute_vector(zeros, model, 0).l1_norm() == 0.0);
    CHECK(rank_value(zeros, model, 0) == 0.0);

    const std::vector<double> c{0.30, 0.20};
    CHECK(std::abs(rank_value(c, model, 0) - (0.3 * 0.3 + 0.2 * 0.7)) <= 1e-15);
}

TEST_CASE("bounds of the ranking function") {
    std::mt19937_64 gen(11);
    const auto model = random_model(gen, 6, 4);
    const std::vector<double> ones(6, 1.0), zeros(6, 0.0);
    for (std::size_t p = 0; p < 4; ++p) {
        CHECK(std::abs(rank_value(ones, model, p) - 1.0) <= 1e-12);
        CHECK(rank_value(zeros, model, p) == 0.0);
    }
}

TEST_CASE("feature map agrees with a naive triple loop") {
    std::mt19937_64 gen(12);
    const auto model = random_model(gen, 10, 6);
    Matrix b(30, 10);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (std::size_t i = 0; i < 30; ++i)
        for (std::size_t j = 0; j < 10; ++j)
            b(i, j) = u(gen);
    // Indicator 9 plays the role of an expert column fixed at mid-scale.
    for (std::size_t i = 0; i < 30; ++i)
        b(i, 9) = 0.5;

    const auto f = map_to_feature_space(b, model);
    REQUIRE(f.rows() == 30);
    REQUIRE(f.cols() == 6);
    for (std::size_t i = 0; i < 30; ++i)
        for (std::size_t p = 0; p < 6; ++p) {
            double s = 0.0;
            for (std::size_t k = 0; k < 10; ++k)
                s += b(i, k) * std::abs(model.components(k, p));
            CHECK(std::abs(f(i, p) - s) <= 1e-12);
            CHECK(std::abs(f(i, p) - rank_value(b.row(i), model, p)) <= 1e-12);
        }
}

TEST_CASE("identity and all-ones inputs") {
    std::mt19937_64 gen(13);
    const auto model = random_model(gen, 5, 3);
    const auto f = map_to_feature_space(Matrix::identity(5), model);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t p = 0; p < 3; ++p)
            CHECK(std::abs(f(i, p) - model.W(i, p)) <= 1e-15);
    Matrix ones(2, 5);
    for (std::size_t j = 0; j < 5; ++j)
        ones(0, j) = ones(1, j) = 1.0;
    const auto g = map_to_feature_space(ones, model);
    for (std::size_t p = 0; p < 3; ++p)
        CHECK(std::abs(g(0, p) - 1.0) <= 1e-12);
}

TEST_CASE("property: monotone, bounded and consistent with attribute norms") {
    std::mt19937_64 gen(14);
    std::uniform_int_distribution<std::size_t> ndist(2, 10);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = ndist(gen);
        const std::size_t d = 1 + gen() % n;
        const auto model = random_model(gen, n, d);
        const auto b = random_unit_vector(gen, n);
        auto c = b;
        for (auto& x : c)
            x = x + (1.0 - x) * u(gen); // c >= b componentwise
        for (std::size_t p = 0; p < d; ++p) {
            const double rb = rank_value(b, model, p);
            const double rc = rank_value(c, model, p);
            CHECK(rb >= -1e-15);
            CHECK(rb <= 1.0 + 1e-12);
            CHECK(rb <= rc + 1e-12);
            CHECK(std::abs(attribute_vector(b, model, p).l1_norm() - rb) <= 1e-12);
            const double ra = attribute_vector(b, model, p).l1_norm();
            const double rca = attribute_vector(c, model, p).l1_norm();
            CHECK((ra < rca - 1e-12) == (rb < rc - 1e-12));
        }
    }
}

TEST_CASE("argument checks") {
    const auto model = two_indicator_model();
    const std::vector<double> b{0.1, 0.2};
    CHECK_THROWS(attribute_vector(b, model, 1));
    CHECK_THROWS(rank_value(b, model, 5));
    const std::vector<double> short_b{0.1};
    CHECK_THROWS(rank_value(short_b, model, 0));
    CHECK_THROWS(map_to_feature_space(Matrix(2, 3), model));
}

TEST_CASE("named feature matrix and csv output") {
    const auto model = two_indicator_model();
    NormalizedMatrix nm;
    nm.objects = {"x", "y"};
    nm.indicators = {{"a", Direction::Positive, true}, {"b", Direction::Positive, true}};
    nm.values = Matrix{{1.0, 0.0}, {0.0, 1.0}};
    const auto f = map_to_feature_space(nm, model);
    CHECK(f.objects == nm.objects);
    const auto csv = write_features_csv(f);
    CHECK(csv.find("r1") != std::string::npos);
    CHECK(csv.find("x,0.29999999999999999") != std::string::npos);
}
