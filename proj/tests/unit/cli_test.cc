/*
 * Copyright 2026 The codedmv Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "codedmv/matrix_io.h"
#include "codedmv/plan_json.h"
#include "codedmv/schemes.h"
#include "json.hpp"

namespace codedmv::cli {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Exec(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    unsetenv(kBudgetEnv);
    dir_ = fs::temp_directory_path() /
           ("codedmv_cli_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override {
    unsetenv(kBudgetEnv);
    fs::remove_all(dir_);
  }
  std::string Path(const std::string& name) const {
    return (dir_ / name).string();
  }

  fs::path dir_;
};

TEST_F(CliTest, DesignPrintsGridAndWritesPlan) {
  const CliRun r = Exec({"design", "cyclic-coded-top", "--n", "5", "--r_u", "2",
                      "--ell_c", "1", "--out", Path("top.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("placement=coded_top"), std::string::npos);
  EXPECT_EQ(ReadPlanFile(Path("top.json")),
            CyclicCoded(5, 2, 1, Placement::kCodedTop));
}

TEST_F(CliTest, DesignToStdoutIsPlanJson) {
  const CliRun r = Exec({"design", "mds", "--n", "4", "--ell", "2", "--delta",
                      "5", "--out", "-"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(PlanFromJson(r.out), MdsPlan(4, 2, 5));
}

TEST_F(CliTest, DesignErrors) {
  EXPECT_EQ(Exec({"design", "spiral", "--n", "3"}).code, kExitUsage);
  const CliRun missing = Exec({"design", "cyclic-uncoded", "--n", "3"});
  EXPECT_EQ(missing.code, kExitUsage);
  EXPECT_NE(missing.err.find("--r"), std::string::npos);
  EXPECT_EQ(Exec({"design", "cyclic-uncoded", "--n", "3", "--r", "4"}).code,
            kExitUsage);
  EXPECT_EQ(Exec({"design", "cyclic-uncoded", "--n", "3", "--r", "2",
                  "--format", "yaml"})
                .code,
            kExitUsage);
  EXPECT_EQ(Exec({}).code, kExitUsage);
  EXPECT_EQ(Exec({"--help"}).code, kExitOk);
}

TEST_F(CliTest, BoundsFromParams) {
  const CliRun r = Exec({"bounds", "--n", "15", "--r_u", "3", "--ell_c", "1",
                      "--placement", "coded_top", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["q_lower"], 18);
  EXPECT_EQ(doc["resilience"], 8);
  EXPECT_EQ(doc["witness"]["x"], 1);
  EXPECT_EQ(doc["witness"]["beta"], 4);

  const CliRun csv = Exec({"bounds", "--n", "5", "--r", "3", "--format", "csv"});
  ASSERT_EQ(csv.code, kExitOk) << csv.err;
  EXPECT_EQ(csv.out,
            "q_lower,q_exact,resilience,witness_x,witness_beta\n10,10,2,,\n");

  EXPECT_EQ(Exec({"bounds", "--n", "5", "--r", "2", "--ell_c", "1"}).code,
            kExitUsage);
  EXPECT_EQ(Exec({"bounds"}).code, kExitUsage);
}

TEST_F(CliTest, BoundsFromPlanMatchesParams) {
  WritePlanFile(Path("b.json"), CyclicCoded(6, 3, 1, Placement::kCodedBottom));
  const CliRun a = Exec({"bounds", "--plan", Path("b.json"), "--format", "csv"});
  const CliRun b = Exec({"bounds", "--n", "6", "--r_u", "3", "--ell_c", "1",
                      "--placement", "coded_bottom", "--format", "csv"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, VerifyReportsOracleAndFormulas) {
  WritePlanFile(Path("u.json"), CyclicUncoded(5, 3));
  const CliRun r = Exec({"verify", Path("u.json"), "--out", Path("v.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("q_true           10"), std::string::npos);
  EXPECT_NE(r.out.find("resilience_true  2"), std::string::npos);
  EXPECT_NE(r.out.find("result           match"), std::string::npos);
  std::ifstream in(Path("v.json"));
  const auto doc = nlohmann::json::parse(in);
  EXPECT_EQ(doc["q_true"], 10);
  EXPECT_EQ(doc["ok"], true);
  EXPECT_EQ(doc["worst_straggler_set"].size(), 3u);
}

TEST_F(CliTest, VerifyRejectsInvalidPlan) {
  AssignmentPlan plan = CyclicUncoded(3, 2);
  plan.workers[0][0] = Task::Uncoded(7);
  WritePlanFile(Path("bad.json"), plan);
  EXPECT_EQ(Exec({"verify", Path("bad.json")}).code, kExitUsage);
  EXPECT_EQ(Exec({"verify", Path("absent.json")}).code, kExitUsage);
}

TEST_F(CliTest, BudgetExceededExitCode) {
  WritePlanFile(Path("u.json"), CyclicUncoded(5, 3));
  const CliRun r = Exec({"verify", Path("u.json"), "--budget", "10"});
  EXPECT_EQ(r.code, kExitBudget);
  EXPECT_NE(r.err.find("1024"), std::string::npos);

  setenv(kBudgetEnv, "10", 1);
  EXPECT_EQ(Exec({"verify", Path("u.json")}).code, kExitBudget);
  // The flag overrides the environment.
  EXPECT_EQ(Exec({"verify", Path("u.json"), "--budget", "5000"}).code,
            kExitOk);
  setenv(kBudgetEnv, "lots", 1);
  EXPECT_EQ(Exec({"verify", Path("u.json")}).code, kExitUsage);
}

TEST_F(CliTest, SimulateWritesTrialsAndSummary) {
  WritePlanFile(Path("uncoded.json"), CyclicUncoded(5, 3));
  WritePlanFile(Path("top.json"), CyclicCoded(5, 2, 1, Placement::kCodedTop));
  const CliRun r = Exec({"simulate", "--plan", Path("uncoded.json"), "--plan",
                      Path("top.json"), "--trials", "25", "--seed", "4",
                      "--out", Path("trials.csv"), "--summary",
                      Path("summary.csv")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            "plan_id,trials,mean_finish,median_finish,p95_finish,"
            "failure_rate");
  EXPECT_NE(r.out.find("\nuncoded,25,"), std::string::npos);
  EXPECT_NE(r.out.find("\ntop,25,"), std::string::npos);
  std::ifstream s(Path("summary.csv"));
  std::stringstream summary;
  summary << s.rdbuf();
  EXPECT_EQ(summary.str(), r.out);
  std::ifstream t(Path("trials.csv"));
  std::string line;
  int lines = 0;
  while (std::getline(t, line)) ++lines;
  EXPECT_EQ(lines, 51);

  // Same seed, same bytes.
  const CliRun again = Exec({"simulate", "--plan", Path("uncoded.json"),
                          "--plan", Path("top.json"), "--trials", "25",
                          "--seed", "4"});
  EXPECT_EQ(again.out, r.out);
}

TEST_F(CliTest, SimulateFromConfigAsJson) {
  std::ofstream(Path("cfg.json"))
      << R"({"trials": 10, "seed": 1, "plans": [{"id": "b",
            "scheme": "cyclic-coded-bottom", "n": 4, "r_u": 2, "ell_c": 1}],
            "speed": {"model": "deterministic", "block_times": 1}})";
  const CliRun r =
      Exec({"simulate", "--config", Path("cfg.json"), "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["trials"], 10);
  EXPECT_EQ(doc["summaries"][0]["plan_id"], "b");
  EXPECT_EQ(doc["summaries"][0]["mean_finish"], "1");
}

TEST_F(CliTest, SimulateRejectsBadArguments) {
  WritePlanFile(Path("u.json"), CyclicUncoded(3, 2));
  EXPECT_EQ(Exec({"simulate", "--plan", Path("u.json"), "--trials", "0"}).code,
            kExitUsage);
  EXPECT_EQ(Exec({"simulate"}).code, kExitUsage);
  EXPECT_EQ(Exec({"simulate", "--plan", Path("u.json"), "--format", "xml"})
                .code,
            kExitUsage);
}

TEST_F(CliTest, DecodeDenseAndSparse) {
  WritePlanFile(Path("b.json"), CyclicCoded(5, 2, 1, Placement::kCodedBottom));
  DenseMatrix a(10, 3);
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 3; ++j) a(i, j) = (i == j) ? 2.0 : (i + 1) * 0.5 - j;
  }
  Eigen::VectorXd x(3);
  x << 1, -2, 0.25;
  WriteDenseCsv(Path("a.csv"), a);
  WriteMatrixMarket(Path("a.mtx"), a.sparseView());
  WriteVector(Path("x.txt"), x);

  for (const char* matrix : {"a.csv", "a.mtx"}) {
    const CliRun r = Exec({"decode", "--plan", Path("b.json"), "--matrix",
                        Path(matrix), "--vector", Path("x.txt"), "--state",
                        "3,0,3,0,2", "--out", Path("y.txt")});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("relative error"), std::string::npos);
    const Eigen::VectorXd y = ReadVector(Path("y.txt"));
    EXPECT_LT((y - a * x).norm(), 1e-12 * (a * x).norm());
  }

  const CliRun stdout_run = Exec({"decode", "--plan", Path("b.json"),
                               "--matrix", Path("a.csv"), "--vector",
                               Path("x.txt")});
  ASSERT_EQ(stdout_run.code, kExitOk);
  EXPECT_EQ(std::count(stdout_run.out.begin(), stdout_run.out.end(), '\n'),
            10);

  EXPECT_EQ(Exec({"decode", "--plan", Path("b.json"), "--matrix",
                  Path("a.csv"), "--vector", Path("x.txt"), "--state",
                  "1,0,0,0,0"})
                .code,
            kExitUsage);
  EXPECT_EQ(Exec({"decode", "--plan", Path("b.json"), "--matrix",
                  Path("a.csv"), "--vector", Path("x.txt"), "--state",
                  "9,9"})
                .code,
            kExitUsage);
}

}  // namespace
}  // namespace codedmv::cli
