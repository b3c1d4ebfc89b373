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

#include <cstdlib>
#include <string>

#include <sys/wait.h>

#include "test_support.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code = -1;
    std::string out;
};

std::string quote(const fs::path& p) { return "'" + p.string() + "'"; }

Result cli(const std::string& args, const relarm_test::TempDir& tmp) {
    const auto log = tmp / "stdout.txt";
    const std::string cmd = quote(RELARM_CLI_PATH) + " " + args + " > " + quote(log) + " 2>&1";
    const int status = std::system(cmd.c_str());
    Result r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = relarm_test::slurp(log);
    return r;
}

std::string data(const char* name) { return quote(relarm_test::countries() / name); }

} // namespace

TEST_CASE("run writes byte-identical outputs across invocations") {
    relarm_test::TempDir tmp("cli_run");
    const std::string base = "run --config " + data("config.json") + " --data " + data("raw.csv");
    const auto a = cli(base + " --out-dir " + quote(tmp / "a") + " --dump-intermediates", tmp);
    REQUIRE_MESSAGE(a.code == 0, a.out);
    const auto b = cli(base + " --out-dir " + quote(tmp / "b"), tmp);
    REQUIRE_MESSAGE(b.code == 0, b.out);
    const auto ra = relarm_test::slurp(tmp / "a" / "ratings.csv");
    CHECK(ra.rfind("object,cluster,projection,category\n", 0) == 0);
    CHECK(ra == relarm_test::slurp(tmp / "b" / "ratings.csv"));
    CHECK(relarm_test::slurp(tmp / "a" / "model.json") == relarm_test::slurp(tmp / "b" / "model.json"));
    for (const char* f : {"normalized.csv", "w.csv", "lambda.csv", "features.csv", "centers.csv"})
        CHECK_MESSAGE(fs::exists(tmp / "a" / "intermediates" / f), f);
    CHECK_FALSE(fs::exists(tmp / "b" / "intermediates"));
}

TEST_CASE("missing k exits with a usage error") {
    relarm_test::TempDir tmp("cli_k");
    relarm_test::spit(tmp / "c.json", R"({"indicators": [{"name": "gdp_growth", "direction": "positive"}]})");
    const auto r = cli("run --config " + quote(tmp / "c.json") + " --data " + data("raw.csv") + " --out-dir " +
                           quote(tmp.path()),
                       tmp);
    CHECK(r.code == 1);
    CHECK(r.out.find("k") != std::string::npos);
    const auto with_k = cli("run --config " + quote(tmp / "c.json") + " --data " + data("raw.csv") +
                                " --k 3 --out-dir " + quote(tmp.path()),
                            tmp);
    // A config without labels needs k = 7 for the default scale.
    CHECK(with_k.code == 1);
}

TEST_CASE("bad arguments and unreadable inputs exit with 1") {
    relarm_test::TempDir tmp("cli_bad");
    CHECK(cli("", tmp).code == 1);
    CHECK(cli("frobnicate", tmp).code == 1);
    CHECK(cli("run --config /nonexistent.json --data " + data("raw.csv"), tmp).code == 1);
    relarm_test::spit(tmp / "bad.csv", "country,gdp_growth\nX,abc\n");
    const auto r = cli("normalize --config " + data("config.json") + " --data " + quote(tmp / "bad.csv") +
                           " --out-dir " + quote(tmp.path()),
                       tmp);
    CHECK(r.code == 1);
}

TEST_CASE("score reproduces the country comparison") {
    relarm_test::TempDir tmp("cli_score");
    const auto r = cli("score --ratings " + data("model_ratings.csv") + " --reference " +
                           data("agency_ratings.csv") + " --out-dir " + quote(tmp.path()),
                       tmp);
    REQUIRE_MESSAGE(r.code == 0, r.out);
    CHECK(r.out.find("agreement: 26/30 = 0.8667") != std::string::npos);
    const auto report = relarm_test::slurp(tmp / "agreement.json");
    CHECK(report.find("\"matched\": 26") != std::string::npos);
    CHECK(report.find("\"compared\": 30") != std::string::npos);
}

TEST_CASE("empty reference reports no comparable objects") {
    relarm_test::TempDir tmp("cli_empty");
    relarm_test::spit(tmp / "ref.csv", "object,agency,category\n");
    const auto r = cli("score --ratings " + data("model_ratings.csv") + " --reference " +
                           quote(tmp / "ref.csv") + " --out-dir " + quote(tmp.path()),
                       tmp);
    CHECK(r.code == 0);
    CHECK(r.out.find("no comparable objects") != std::string::npos);
    CHECK(relarm_test::slurp(tmp / "agreement.json").find("\"fraction\": null") != std::string::npos);
}

TEST_CASE("assign with a saved model matches the fitted ratings") {
    relarm_test::TempDir tmp("cli_assign");
    const auto fit = cli("run --config " + data("config.json") + " --data " + data("raw.csv") + " --out-dir " +
                             quote(tmp / "fit"),
                         tmp);
    REQUIRE_MESSAGE(fit.code == 0, fit.out);
    const auto assign = cli("assign --model " + quote(tmp / "fit" / "model.json") + " --data " + data("raw.csv") +
                                " --out-dir " + quote(tmp / "assign"),
                            tmp);
    REQUIRE_MESSAGE(assign.code == 0, assign.out);
    const auto a = relarm_test::read_first_column(tmp / "fit" / "ratings.csv");
    const auto b = relarm_test::read_first_column(tmp / "assign" / "ratings.csv");
    CHECK(a == b);
    CHECK(relarm_test::slurp(tmp / "fit" / "ratings.csv") == relarm_test::slurp(tmp / "assign" / "ratings.csv"));
}
