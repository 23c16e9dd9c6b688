// Copyright 2026 The cvcat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace cvcat::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string read_file(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("cvcat_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override {
        fs::remove_all(dir_);
    }
    std::string path(const std::string &name) const {
        return (dir_ / name).string();
    }
    fs::path dir_;
};

TEST_F(CliTest, UnknownFlagIsUsageError) {
    Result r = invoke({"gate", "--no-such-flag", "1"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("Usage"), std::string::npos);
}

TEST_F(CliTest, MissingSubcommandIsUsageError) {
    EXPECT_EQ(invoke({}).code, kExitUsage);
    EXPECT_EQ(invoke({"plot"}).code, kExitUsage);
}

TEST_F(CliTest, DomainErrorsExitOne) {
    Result r = invoke({"gate", "--gamma", "-1", "--ym", "3"});
    EXPECT_EQ(r.code, kExitDomainError);
    EXPECT_FALSE(r.err.empty());
    EXPECT_EQ(invoke({"state", "--kind", "banana"}).code, kExitDomainError);
    EXPECT_EQ(invoke({"sweep-infidelity", "--db-range", "5:1"}).code, kExitDomainError);
}

TEST_F(CliTest, StateWritesCsvColumns) {
    Result r = invoke({"state", "--kind", "vacuum", "--n-points", "64", "--half-width", "8"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(r.out.rfind("x,re,im\n", 0), 0u);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 65);
}

TEST_F(CliTest, JsonCarriesMetadata) {
    Result r = invoke({"gate", "--gamma", "0.5", "--ym", "15", "--db", "14", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["meta"]["tool"], "cvcat");
    EXPECT_EQ(j["meta"]["command"], "gate");
    EXPECT_EQ(j["meta"]["config"]["gamma"], 0.5);
}

TEST_F(CliTest, FlagsOverrideConfigFile) {
    std::ofstream(path("config.json")) << R"({"gamma": 0.3, "ym": 5.0, "db": 9.0})";
    Result r = invoke({"gate", "--config", path("config.json"), "--gamma", "0.2", "--dump-config"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["gamma"], 0.2);
    EXPECT_EQ(j["ym"], 5.0);
    EXPECT_EQ(j["db"], 9.0);
}

TEST_F(CliTest, ConfigRejectsUnknownKeysAndWrongTypes) {
    std::ofstream(path("unknown.json")) << R"({"gama": 0.3})";
    EXPECT_NE(invoke({"gate", "--config", path("unknown.json")}).code, kExitOk);
    std::ofstream(path("typed.json")) << R"({"gamma": "big"})";
    EXPECT_NE(invoke({"gate", "--config", path("typed.json")}).code, kExitOk);
}

TEST_F(CliTest, DumpedConfigReproducesRun) {
    std::vector<std::string> flags = {"--gamma", "0.2", "--ym", "6", "--db", "9"};
    std::vector<std::string> dump = {"gate"};
    dump.insert(dump.end(), flags.begin(), flags.end());
    dump.push_back("--dump-config");
    Result dumped = invoke(dump);
    ASSERT_EQ(dumped.code, kExitOk) << dumped.err;
    std::ofstream(path("effective.json")) << dumped.out;

    std::vector<std::string> direct = {"gate", "--out", path("direct.csv")};
    direct.insert(direct.end(), flags.begin(), flags.end());
    ASSERT_EQ(invoke(direct).code, kExitOk);
    ASSERT_EQ(invoke({"gate", "--config", path("effective.json"), "--out", path("replay.csv")}).code, kExitOk);
    EXPECT_EQ(read_file(path("direct.csv")), read_file(path("replay.csv")));

    Result again = invoke({"gate", "--config", path("effective.json"), "--dump-config"});
    EXPECT_EQ(again.out, dumped.out);
}

TEST_F(CliTest, SweepIsDeterministic) {
    std::vector<std::string> args = {"sweep-infidelity", "--ym", "3", "--gamma-rule", "ym/30", "--db-range", "0:20",
                                     "--n-values", "12"};
    Result first = invoke(args);
    Result second = invoke(args);
    ASSERT_EQ(first.code, kExitOk) << first.err;
    EXPECT_EQ(first.out, second.out);
    EXPECT_EQ(first.out.rfind("variable_value,infidelity,probability_density,wln,efficiency,error\n", 0), 0u);
    EXPECT_EQ(std::count(first.out.begin(), first.out.end(), '\n'), 13);
}

TEST_F(CliTest, SweepInfidelityFallsThenFlattens) {
    Result r = invoke({"sweep-infidelity", "--ym", "3", "--gamma-rule", "ym/30", "--db-range", "0:20"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    std::vector<double> infidelity;
    while (std::getline(lines, line)) {
        std::istringstream fields(line);
        std::string value;
        std::getline(fields, value, ',');
        std::getline(fields, value, ',');
        infidelity.push_back(std::stod(value));
    }
    ASSERT_EQ(infidelity.size(), 60u);
    EXPECT_GT(infidelity.front(), 0.5);
    EXPECT_LT(infidelity.back(), 0.1);
    for (std::size_t k = 1; k < infidelity.size(); ++k) {
        EXPECT_LE(infidelity[k], infidelity[k - 1] + 1e-12) << "row " << k;
    }
}

TEST_F(CliTest, HighFidelityWignerHasNegativeRegions) {
    ASSERT_EQ(invoke({"wigner", "--gamma", "0.5", "--ym", "15", "--db", "14", "--out", path("wigner.csv")}).code,
              kExitOk);
    std::istringstream in(read_file(path("wigner.csv")));
    std::string line;
    std::getline(in, line);
    std::getline(in, line);
    double minimum = std::numeric_limits<double>::infinity();
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        std::istringstream fields(line);
        std::string value;
        while (std::getline(fields, value, ',')) {
            minimum = std::min(minimum, std::stod(value));
        }
    }
    EXPECT_EQ(rows, 256u);
    EXPECT_LT(minimum, -0.1);
}

TEST_F(CliTest, VerifyPasses) {
    Result r = invoke({"verify"});
    EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
    EXPECT_NE(r.out.find("max_relative_deviation"), std::string::npos);
}

}  // namespace
}  // namespace cvcat::cli
