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


#include "codedmv/experiment_config.h"

#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "codedmv/errors.h"
#include "codedmv/plan_json.h"
#include "codedmv/schemes.h"

namespace codedmv {
namespace {

namespace fs = std::filesystem;

class ExperimentConfigTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("codedmv_cfg_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
};

TEST_F(ExperimentConfigTest, PlansFromPathInlineAndScheme) {
  WritePlanFile(dir_ / "u.json", CyclicUncoded(5, 3));
  const std::string inline_plan =
      PlanToJson(CyclicCoded(5, 2, 1, Placement::kCodedTop));
  const std::string text = R"({"trials": 20, "seed": 9, "plans": [
      {"id": "uncoded", "path": "u.json"},
      {"id": "top", "plan": )" + inline_plan + R"(},
      {"scheme": "cyclic-coded-bottom", "n": 5, "r_u": 2, "ell_c": 1}]})";
  const ExperimentConfig cfg = ParseExperimentConfig(text, dir_);
  EXPECT_EQ(cfg.trials, 20);
  EXPECT_EQ(cfg.seed, 9u);
  EXPECT_EQ(cfg.plan_ids,
            (std::vector<std::string>{"uncoded", "top", "plan3"}));
  EXPECT_EQ(cfg.plans[0], CyclicUncoded(5, 3));
  EXPECT_EQ(cfg.plans[1], CyclicCoded(5, 2, 1, Placement::kCodedTop));
  EXPECT_EQ(cfg.plans[2], CyclicCoded(5, 2, 1, Placement::kCodedBottom));
  EXPECT_TRUE(std::holds_alternative<ShiftedExponential>(cfg.speed));
  EXPECT_TRUE(std::holds_alternative<UniformCost>(cfg.cost));
}

TEST_F(ExperimentConfigTest, SpeedModels) {
  const std::string plans =
      R"("plans": [{"scheme": "cyclic-uncoded", "n": 3, "r": 2}])";
  auto parse = [&](const std::string& speed) {
    return ParseExperimentConfig("{" + plans + R"(, "speed": )" + speed + "}",
                                 dir_)
        .speed;
  };
  const auto se = std::get<ShiftedExponential>(parse(
      R"({"model": "shifted_exponential", "shift": 0.5, "rate": 2,
          "multipliers": [1, 0.5, 1]})"));
  EXPECT_EQ(se.shift, 0.5);
  EXPECT_EQ(se.rate, 2);
  EXPECT_EQ(se.multipliers, (std::vector<double>{1, 0.5, 1}));

  EXPECT_EQ(std::get<Deterministic>(
                parse(R"({"model": "deterministic", "block_times": 2})"))
                .block_times,
            (std::vector<std::vector<double>>{{2}}));
  EXPECT_EQ(std::get<Deterministic>(
                parse(R"({"model": "deterministic",
                          "block_times": [1, 2, 3]})"))
                .block_times,
            (std::vector<std::vector<double>>{{1}, {2}, {3}}));
  EXPECT_EQ(std::get<Deterministic>(
                parse(R"({"model": "deterministic",
                          "block_times": [[1, 2], [3, 4], [5, 6]]})"))
                .block_times,
            (std::vector<std::vector<double>>{{1, 2}, {3, 4}, {5, 6}}));

  const auto halt = std::get<HaltAfter>(
      parse(R"({"model": "halt_after", "stragglers": [1, 3],
                "blocks_before_halt": 1, "block_time": 2})"));
  EXPECT_EQ(halt.stragglers, (std::vector<int>{0, 2}));
  EXPECT_EQ(halt.blocks_before_halt, 1);
  EXPECT_EQ(halt.block_time, 2);

  EXPECT_THROW(parse(R"({"model": "warp"})"), ParseError);
  EXPECT_THROW(parse(R"({"model": "halt_after", "stragglers": [0]})"),
               ParseError);
}

TEST_F(ExperimentConfigTest, SparsityCostFromMatrixFile) {
  std::ofstream(dir_ / "a.mtx") << "%%MatrixMarket matrix coordinate real "
                                   "general\n4 2 3\n1 1 1\n2 2 1\n4 1 1\n";
  const ExperimentConfig cfg = ParseExperimentConfig(
      R"({"plans": [{"scheme": "cyclic-uncoded", "n": 2, "r": 1}],
          "cost": {"model": "sparsity_aware", "matrix": "a.mtx"}})",
      dir_);
  const auto& cost = std::get<SparsityAwareCost>(cfg.cost);
  EXPECT_EQ(cost.block_nnz, (std::vector<std::int64_t>{2, 1}));
  EXPECT_EQ(cost.block_patterns.size(), 2u);

  const ExperimentConfig counts = ParseExperimentConfig(
      R"({"plans": [{"scheme": "cyclic-uncoded", "n": 2, "r": 1}],
          "cost": {"model": "sparsity_aware", "block_nnz": [3, 5],
                   "block_capacity": 6}})",
      dir_);
  EXPECT_EQ(std::get<SparsityAwareCost>(counts.cost).block_capacity, 6);
}

TEST_F(ExperimentConfigTest, RejectsMalformedDocuments) {
  const char* bad[] = {
      "not json",
      "[]",
      R"({"plans": []})",
      R"({"plans": [{"id": "a,b", "scheme": "mds", "n": 2, "ell": 1,
                     "delta": 2}]})",
      R"({"plans": [{"id": "x", "scheme": "mds", "n": 2, "ell": 1,
                     "delta": 2},
                    {"id": "x", "scheme": "mds", "n": 2, "ell": 1,
                     "delta": 2}]})",
      R"({"plans": [{"scheme": "cyclic-uncoded", "n": 3, "r": 2}],
          "trials": 0})",
      R"({"plans": [{"scheme": "cyclic-uncoded", "n": 3, "r": 2}],
          "trials": "many"})",
      R"({"plans": [{"path": "missing.json"}]})",
      R"({"plans": [{"scheme": "spiral", "n": 3}]})",
  };
  for (const char* text : bad) {
    EXPECT_THROW(ParseExperimentConfig(text, dir_), Error) << text;
  }
  EXPECT_THROW(
      ParseExperimentConfig(
          R"({"plans": [{"scheme": "cyclic-uncoded", "n": 3}]})", dir_),
      InvalidParamsError);
}

TEST_F(ExperimentConfigTest, ReadResolvesRelativeToFile) {
  fs::create_directories(dir_ / "sub");
  WritePlanFile(dir_ / "sub" / "p.json", CyclicUncoded(4, 2));
  std::ofstream(dir_ / "sub" / "cfg.json")
      << R"({"trials": 3, "plans": [{"path": "p.json"}]})";
  const ExperimentConfig cfg = ReadExperimentConfig(dir_ / "sub" / "cfg.json");
  EXPECT_EQ(cfg.plans[0], CyclicUncoded(4, 2));
  EXPECT_EQ(cfg.plan_ids[0], "plan1");
}

}  // namespace
}  // namespace codedmv
