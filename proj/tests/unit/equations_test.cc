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


#include "codedmv/equations.h"

#include <random>

#include <gtest/gtest.h>

#include "codedmv/errors.h"
#include "codedmv/schemes.h"
#include "test_util.h"

namespace codedmv {
namespace {

TEST(EquationsTest, ProcessedEquationsCollectsPrefixes) {
  const auto plan = CyclicCoded(3, 1, 1, Placement::kCodedBottom);
  const EquationSet eq = ProcessedEquations(plan, StateVector{2, 1, 0});
  EXPECT_EQ(eq.known, (std::set<int>{0, 1}));
  ASSERT_EQ(eq.coded.size(), 1u);
  EXPECT_EQ(eq.coded[0], plan.workers[0][1].coeffs());
  EXPECT_TRUE(ProcessedEquations(plan, StateVector::Zero(3)).empty());
}

TEST(EquationsTest, CyclicUncodedWorstCase) {
  const auto plan = CyclicUncoded(5, 3);
  // Block A5 is the last row of worker 3, second of worker 4, first of
  // worker 5: stopping each just before it leaves 9 products and no A5.
  EXPECT_FALSE(IsDecodable(plan, StateVector{3, 3, 2, 1, 0}));
  EXPECT_EQ(EquationRank(plan, StateVector{3, 3, 2, 1, 0}), 4);
  // Worker 4's list is A4, A5, A1, so this state does hold A5.
  EXPECT_TRUE(IsDecodable(plan, StateVector{0, 1, 2, 3, 3}));
  EXPECT_TRUE(IsDecodable(plan, StateVector{1, 1, 1, 1, 1}));
}

TEST(EquationsTest, CodedRowsFillUnknowns) {
  const auto plan = CyclicCoded(5, 2, 1, Placement::kCodedTop);
  // Three full-support rows cover the three blocks not yet seen.
  EXPECT_TRUE(IsDecodable(plan, StateVector{3, 1, 0, 0, 1}));
  EXPECT_FALSE(IsDecodable(plan, StateVector{3, 0, 0, 0, 1}));
  EXPECT_FALSE(IsDecodable(plan, StateVector{3, 2, 0, 0, 0}));
  EXPECT_EQ(EquationRank(plan, StateVector{1, 1, 1, 1, 1}), 5);
}

TEST(EquationsTest, RejectsOutOfRangeCoefficients) {
  EquationSet eq;
  eq.coded.push_back({{4, Fp(1)}});
  EXPECT_THROW(EquationRank(3, eq), InvalidParamsError);
}

TEST(DecodabilityCheckerTest, AgreesWithFreeFunctions) {
  std::mt19937_64 rng(5);
  const std::vector<AssignmentPlan> plans = {
      CyclicUncoded(4, 2), CyclicCoded(4, 2, 1, Placement::kCodedBottom),
      CyclicCoded(4, 1, 2, Placement::kCodedTop), MdsPlan(4, 2, 5),
      CyclicCoded(4, 2, 2, Placement::kCodedTop, CodedRowSupport::kMasked)};
  for (const auto& plan : plans) {
    const DecodabilityChecker checker(plan);
    EXPECT_EQ(checker.delta(), plan.params.delta);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<int> w;
      for (const auto& tasks : plan.workers) {
        w.push_back(std::uniform_int_distribution<int>(
            0, static_cast<int>(tasks.size()))(rng));
      }
      const StateVector s(w);
      EXPECT_EQ(checker.Rank(s), EquationRank(plan, s)) << s.ToString();
      EXPECT_EQ(checker.IsDecodable(s), IsDecodable(plan, s)) << s.ToString();
    }
  }
  const DecodabilityChecker checker(plans[0]);
  EXPECT_THROW(checker.IsDecodable(StateVector{1, 1}), InvalidStateError);
  EXPECT_THROW(checker.IsDecodable(StateVector{3, 0, 0, 0}), InvalidStateError);
}

TEST(DecodabilityCheckerTest, MonotoneOnRandomUncodedPlans) {
  std::mt19937_64 rng(17);
  for (int p = 0; p < 40; ++p) {
    const auto plan = testing::RandomUncodedPlan(rng, 6, 3);
    const DecodabilityChecker checker(plan);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<int> lo, hi;
      for (const auto& tasks : plan.workers) {
        const int l = static_cast<int>(tasks.size());
        const int a = std::uniform_int_distribution<int>(0, l)(rng);
        lo.push_back(a);
        hi.push_back(std::uniform_int_distribution<int>(a, l)(rng));
      }
      if (checker.IsDecodable(StateVector(lo))) {
        EXPECT_TRUE(checker.IsDecodable(StateVector(hi)));
      }
    }
  }
}

}  // namespace
}  // namespace codedmv
