// Copyright 2026 The QAM Authors.

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "oracles.hpp"
#include "qam/qsim/serialization.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string &args) {
    const std::string cmd = std::string(QAM_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE *pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
        r.out.append(buf, got);
    }
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const char *name) {
    return std::string(QAM_TEST_DATA_DIR) + "/" + name;
}

class Cli : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("qam_cli_" + std::string(::testing::UnitTest::GetInstance()
                                             ->current_test_info()
                                             ->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const char *name) const { return (dir_ / name).string(); }

    static std::string slurp(const std::string &p) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    fs::path dir_;
};

TEST_F(Cli, StoreSequentialWritesUniformState) {
    const auto r = run("store " + data("three_patterns.txt") + " " + path("s.json") +
                       " --method sequential");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("p=3 n=4"), std::string::npos) << r.out;
    const auto state = qam::qsim::state_from_json(slurp(path("s.json")));
    int nonzero = 0;
    for (const auto &a : state.amplitudes()) {
        if (std::norm(a) > 1e-12) {
            ++nonzero;
            EXPECT_NEAR(std::norm(a), 1.0 / 3.0, 1e-12);
        }
    }
    EXPECT_EQ(nonzero, 3);
}

TEST_F(Cli, StoreOperatorPrintsGateCount) {
    const auto r = run("store " + data("three_patterns.txt") + " " + path("o.json") +
                       " --method operator");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("gates=34"), std::string::npos) << r.out;
    (void)run("store " + data("three_patterns.txt") + " " + path("a.json") +
              " --method analytic");
    const auto op = qam::qsim::state_from_json(slurp(path("o.json")));
    const auto an = qam::qsim::state_from_json(slurp(path("a.json")));
    EXPECT_LT(qam::testing::max_abs_diff({an.amplitudes().begin(), an.amplitudes().end()},
                                         op.amplitudes()),
              1e-12);
}

TEST_F(Cli, StoreRejectsBadFiles) {
    EXPECT_EQ(run("store " + data("duplicate.txt") + " " + path("x.json")).code, 2);
    EXPECT_EQ(run("store " + data("ragged.txt") + " " + path("x.json")).code, 2);
    EXPECT_EQ(run("store /nonexistent " + path("x.json")).code, 2);
}

TEST_F(Cli, RecallStoredPatternIsRecognized) {
    const auto r = run("recall " + data("three_patterns.txt") +
                       " --input 1010 --b 16 --T 64 --seed 7");
    ASSERT_EQ(r.code, 0) << r.out;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["recognized"].get<bool>());
    EXPECT_EQ(j["output"], "1010");
}

TEST_F(Cli, RecallNotRecognizedExitsOne) {
    // The complement of the only stored pattern has recognition probability 0.
    const auto r = run("recall " + data("single.txt") + " --input 1001 --b 2 --T 4 --seed 1");
    EXPECT_EQ(r.code, 1);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_FALSE(j["recognized"].get<bool>());
    EXPECT_TRUE(j["output"].is_null());
}

TEST_F(Cli, RecallCapacityExitsTwo) {
    EXPECT_EQ(run("recall " + data("two_patterns.txt") + " --input 0001 --b 32 --T 1 --seed 1")
                  .code,
              2);
}

TEST_F(Cli, RecallValidation) {
    EXPECT_EQ(run("recall " + data("two_patterns.txt") + " --input 001 --b 1 --T 1 --seed 1")
                  .code,
              2);
    EXPECT_EQ(run("recall " + data("two_patterns.txt") + " --input 0001 --b 1 --T 1").code,
              2); // seed is mandatory
    EXPECT_EQ(run("recall " + data("two_patterns.txt") +
                  " --input 0001 --b 1 --T 1 --seed 1 --mask 0,9")
                  .code,
              2);
}

TEST_F(Cli, RecallTrialsMatchDistribution) {
    const auto r = run("recall " + data("two_patterns.txt") +
                       " --input 0001 --b 1 --T 1000 --seed 3 --trials 100000");
    ASSERT_EQ(r.code, 0);
    std::istringstream in(r.out);
    std::string line;
    double emp = -1.0;
    double ana = -1.0;
    while (std::getline(in, line)) {
        if (line.rfind("0000,", 0) == 0) {
            std::sscanf(line.c_str(), "0000,%*[0-9],%lf,%lf", &emp, &ana);
        }
    }
    EXPECT_NEAR(ana, 0.630602, 1e-6);
    EXPECT_NEAR(emp, ana, qam::testing::four_sigma(ana, 100000));
}

TEST_F(Cli, RecallMaskedDistribution) {
    // Known positions {0, 1}: both stored patterns agree with input 00xx
    // except 0111 at position 1, so masked distances are 0 and 1.
    const auto r = run("recall " + data("two_patterns.txt") +
                       " --input 0000 --b 1 --T 50 --seed 4 --mask 0,1");
    ASSERT_EQ(r.code, 0) << r.out;
    const auto j = nlohmann::json::parse(r.out);
    const double w1 = std::pow(std::cos(M_PI / 8), 2);
    EXPECT_NEAR(j["distribution"][0]["prob"].get<double>(), 1.0 / (1.0 + w1), 1e-12);
}

TEST_F(Cli, RecallIsDeterministic) {
    const std::string args = "recall " + data("two_patterns.txt") +
                             " --input 0001 --b 2 --T 3 --seed 99 --trials 500";
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST_F(Cli, RecallAmplified) {
    const auto r = run("recall " + data("single.txt") +
                       " --input 0110 --b 2 --T 0 --mode amplified --seed 5");
    EXPECT_EQ(r.code, 0) << r.out;
}

TEST_F(Cli, AnalyzeWritesCsvAndCriticalPoint) {
    const auto r = run("analyze --n 8000000 --d-over-n 0.01 --b-min 1e-3 --b-max 1e6 "
                       "--points 181 " +
                       path("scan.csv"));
    ASSERT_EQ(r.code, 0) << r.out;
    double b_cr = 0.0;
    ASSERT_EQ(std::sscanf(r.out.c_str(), "b_cr=%lf", &b_cr), 1);
    EXPECT_GE(b_cr, 0.03);
    EXPECT_LE(b_cr, 0.3);
    const auto csv = slurp(path("scan.csv"));
    EXPECT_EQ(csv.rfind("b,z_ratio,F,U,S,S_rescaled,D,p_rec_av\n", 0), 0U);
}

TEST_F(Cli, AnalyzeZeroDistanceStartsAtTwoThirds) {
    const auto r = run("analyze --n 8000000 --d-over-n 0 --b-min 1e-4 --b-max 1e6 "
                       "--points 61 " +
                       path("scan.csv"));
    ASSERT_EQ(r.code, 0) << r.out;
    std::istringstream in(slurp(path("scan.csv")));
    std::string header;
    std::string first;
    std::getline(in, header);
    std::getline(in, first);
    double cols[8];
    ASSERT_EQ(std::sscanf(first.c_str(), "%lf,%lf,%lf,%lf,%lf,%lf,%lf,%lf", &cols[0],
                          &cols[1], &cols[2], &cols[3], &cols[4], &cols[5], &cols[6],
                          &cols[7]),
              8);
    EXPECT_NEAR(cols[6], 2.0 / 3.0, 1e-3);
}

TEST_F(Cli, AnalyzeBracketFailure) {
    EXPECT_EQ(run("analyze --n 8000000 --d-over-n 0.01 --b-min 1e-9 --b-max 1e-3 "
                  "--points 30 " +
                  path("scan.csv"))
                  .code,
              3);
}

TEST_F(Cli, TuneReportsThresholds) {
    const auto r = run("tune --n 8000000 --epsilon 0.01 --nu 0.991");
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["b"].get<std::uint64_t>(), 9814U);
    EXPECT_EQ(j["T_amplified"].get<std::uint64_t>(), 80U);
}

TEST_F(Cli, TuneTrivialAndInfeasible) {
    const auto r = run("tune --n 8000000 --epsilon 0.01 --nu 0");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["b"].get<std::uint64_t>(), 1U);
    EXPECT_EQ(run("tune --n 8000000 --epsilon 0.01 --nu 1").code, 4);
}

TEST_F(Cli, VerifyQuickPasses) {
    const auto r = run("verify --level quick --seed 1");
    EXPECT_EQ(r.code, 0) << r.out;
}

TEST_F(Cli, VerifyFaultInjectionNamesUnitarity) {
    const auto r = run("verify --level quick --seed 1 --inject-fault s2");
    EXPECT_EQ(r.code, 5);
    EXPECT_NE(r.out.find("invariant failure: unitarity"), std::string::npos) << r.out;
}

TEST_F(Cli, VerifyReportIsDeterministic) {
    EXPECT_EQ(run("verify --level quick --seed 42").out,
              run("verify --level quick --seed 42").out);
}

TEST_F(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("verify --level medium --seed 1").code, 2);
}

TEST_F(Cli, QubitCapFromEnvironment) {
    const auto r = run("store " + data("three_patterns.txt") + " " + path("s.json") +
                       " --method sequential");
    ASSERT_EQ(r.code, 0);
    ::setenv("QAM_QUBIT_CAP", "4", 1);
    const auto capped = run("store " + data("three_patterns.txt") + " " + path("s.json") +
                            " --method sequential");
    ::unsetenv("QAM_QUBIT_CAP");
    EXPECT_EQ(capped.code, 2);
}

} // namespace
