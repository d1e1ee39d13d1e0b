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


#include "codedmv/plan_json.h"

#include <filesystem>
#include <random>

#include <gtest/gtest.h>

#include "codedmv/errors.h"
#include "codedmv/plan_format.h"
#include "codedmv/schemes.h"
#include "test_util.h"

namespace codedmv {
namespace {

TEST(PlanJsonTest, RoundTripsEveryScheme) {
  std::mt19937_64 rng(8);
  std::vector<AssignmentPlan> plans = {
      CyclicUncoded(5, 3), CyclicCoded(5, 2, 1, Placement::kCodedBottom),
      CyclicCoded(5, 2, 1, Placement::kCodedTop), MdsPlan(4, 2, 5),
      CyclicCoded(6, 0, 2, Placement::kCodedBottom)};
  for (int i = 0; i < 10; ++i) {
    plans.push_back(testing::RandomUncodedPlan(rng, 6, 3));
  }
  for (const auto& plan : plans) {
    const std::string text = PlanToJson(plan);
    EXPECT_EQ(PlanFromJson(text), plan);
    EXPECT_EQ(PlanToJson(PlanFromJson(text)), text);
  }
}

TEST(PlanJsonTest, DocumentShape) {
  const std::string text = PlanToJson(MdsPlan(3, 1, 2));
  EXPECT_EQ(text.substr(0, 22), "{\n  \"params\": {\n    \"n");
  EXPECT_NE(text.find("\"placement\": \"fully_coded\""), std::string::npos);
  EXPECT_NE(text.find("\"c\": {"), std::string::npos);
  EXPECT_EQ(text.back(), '\n');

  const AssignmentPlan p = PlanFromJson(R"({
    "params": {"n": 2, "delta": 2, "ell_u": 1, "ell_c": 0, "r_u": 1,
               "placement": "uncoded_only"},
    "workers": [[{"u": 2}], [{"u": 1}]]})");
  EXPECT_EQ(p.workers[0][0], Task::Uncoded(1));
  EXPECT_TRUE(ValidatePlan(p).ok());

  const AssignmentPlan c = PlanFromJson(R"({
    "params": {"n": 1, "delta": 2, "ell_u": 0, "ell_c": 1, "r_u": 0,
               "placement": "fully_coded"},
    "workers": [[{"c": {"1": "5", "2": 7}}]]})");
  EXPECT_EQ(c.workers[0][0].coeffs().at(1), Fp(7));
}

TEST(PlanJsonTest, RejectsMalformedDocuments) {
  const char* bad[] = {
      "not json",
      "[]",
      R"({"params": {}})",
      R"({"params": {"n": 1}, "workers": []})",
      R"({"params": {"n": 1, "delta": 1, "ell_u": 1, "ell_c": 0, "r_u": 1,
          "placement": "diagonal"}, "workers": [[{"u": 1}]]})",
      R"({"params": {"n": 1, "delta": 1, "ell_u": 1, "ell_c": 0, "r_u": 1,
          "placement": "uncoded_only"}, "workers": [[{"u": 0}]]})",
      R"({"params": {"n": 1, "delta": 1, "ell_u": 1, "ell_c": 0, "r_u": 1,
          "placement": "uncoded_only"}, "workers": [[{"x": 1}]]})",
      R"({"params": {"n": 1, "delta": 1, "ell_u": 0, "ell_c": 1, "r_u": 0,
          "placement": "fully_coded"}, "workers": [[{"c": {"0": "1"}}]]})",
      R"({"params": {"n": 1, "delta": 1, "ell_u": 0, "ell_c": 1, "r_u": 0,
          "placement": "fully_coded"}, "workers": [[{"c": {"1": "-3"}}]]})",
      R"({"params": {"n": 1, "delta": 1, "ell_u": 0, "ell_c": 1, "r_u": 0,
          "placement": "fully_coded"}, "workers": [[{"c": {"1": 2147483647}}]]})",
      R"({"params": {"n": 1, "delta": 1, "ell_u": 1, "ell_c": 0, "r_u": 1,
          "placement": "uncoded_only"}, "workers": [{"u": 1}]})",
  };
  for (const char* text : bad) {
    EXPECT_THROW(PlanFromJson(text), ParseError) << text;
  }
}

TEST(PlanJsonTest, FileRoundTrip) {
  const auto path =
      std::filesystem::temp_directory_path() / "codedmv_plan_json_test.json";
  const auto plan = CyclicCoded(4, 2, 1, Placement::kCodedTop);
  WritePlanFile(path, plan);
  EXPECT_EQ(ReadPlanFile(path), plan);
  std::filesystem::remove(path);
  EXPECT_THROW(ReadPlanFile(path), ParseError);
}

TEST(ReportJsonTest, Shapes) {
  BoundReport b;
  b.q_lower = 18;
  b.resilience = 8;
  b.witness = BoundWitness{1, 4};
  EXPECT_EQ(BoundReportToJson(b),
            "{\n  \"q_lower\": 18,\n  \"q_exact\": null,\n  \"resilience\": "
            "8,\n  \"witness\": {\n    \"x\": 1,\n    \"beta\": 4\n  }\n}\n");
  OracleReport o{10, StateVector{3, 3, 2, 1, 0}, 2, {0, 1, 2}};
  const std::string text = OracleReportToJson(o);
  EXPECT_NE(text.find("\"worst_straggler_set\": [\n    1,\n    2,\n    3"),
            std::string::npos);
}

TEST(PlanFormatTest, GridLayout) {
  EXPECT_EQ(RenderGrid(CyclicUncoded(3, 2)),
            "       W1  W2  W3\n"
            "row 1  A1  A2  A3\n"
            "row 2  A2  A3  A1\n");
  EXPECT_EQ(RenderGrid(MdsPlan(3, 1, 2)),
            "       W1      W2      W3\n"
            "row 1  C(1,2)  C(1,2)  C(1,2)\n");
  EXPECT_EQ(TaskLabel(Task::Coded({{0, Fp(1)}, {3, Fp(2)}})), "C(1,4)");
  EXPECT_EQ(TaskLabel(Task::Uncoded(9)), "A10");
}

}  // namespace
}  // namespace codedmv
