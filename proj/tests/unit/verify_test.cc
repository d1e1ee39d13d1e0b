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


#include "codedmv/verify.h"

#include <random>

#include <gtest/gtest.h>

#include "codedmv/schemes.h"
#include "test_util.h"

namespace codedmv {
namespace {

TEST(IsCanonicalPlanTest, RecognisesConstructors) {
  EXPECT_TRUE(IsCanonicalPlan(CyclicUncoded(5, 3)));
  EXPECT_TRUE(IsCanonicalPlan(CyclicCoded(5, 2, 1, Placement::kCodedBottom)));
  EXPECT_TRUE(IsCanonicalPlan(CyclicCoded(5, 2, 1, Placement::kCodedTop)));
  EXPECT_TRUE(IsCanonicalPlan(MdsPlan(3, 1, 2)));
  EXPECT_FALSE(IsCanonicalPlan(CyclicCoded(5, 2, 1, Placement::kCodedTop,
                                           CodedRowSupport::kMasked)));
  auto swapped = CyclicUncoded(5, 3);
  std::swap(swapped.workers[2][0], swapped.workers[2][1]);
  EXPECT_FALSE(IsCanonicalPlan(swapped));
}

TEST(CheckAgainstFormulasTest, CanonicalPlansMatch) {
  for (const auto& plan :
       {CyclicUncoded(5, 3), CyclicCoded(5, 2, 1, Placement::kCodedBottom),
        CyclicCoded(5, 2, 1, Placement::kCodedTop), MdsPlan(4, 2, 5)}) {
    const FormulaCheck c = CheckAgainstFormulas(plan, RunOracle(plan));
    EXPECT_TRUE(c.ok()) << c.mismatches.front();
    EXPECT_TRUE(c.canonical);
    EXPECT_TRUE(c.bounds.has_value());
  }
}

TEST(CheckAgainstFormulasTest, FlagsContradictions) {
  const auto plan = CyclicUncoded(5, 3);
  OracleReport wrong = RunOracle(plan);
  wrong.q_true = 9;
  wrong.resilience_true = 3;
  const FormulaCheck c = CheckAgainstFormulas(plan, wrong);
  EXPECT_FALSE(c.ok());
  EXPECT_EQ(c.mismatches.size(), 3u);  // bound, exact Q, resilience
}

TEST(CheckAgainstFormulasTest, RandomUncodedPlansRespectInequalities) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    const auto plan = testing::RandomUncodedPlan(rng, 6, 3);
    const FormulaCheck c = CheckAgainstFormulas(plan, RunOracle(plan));
    EXPECT_TRUE(c.ok()) << i;
  }
}

TEST(CheckAgainstFormulasTest, NoClosedFormIsANote) {
  // delta != n with coded rows has no closed form.
  AssignmentPlan plan = MdsPlan(4, 1, 2);
  plan.params.placement = Placement::kCodedTop;
  plan.params.ell_u = 0;
  const FormulaCheck c = CheckAgainstFormulas(plan, RunOracle(plan));
  EXPECT_TRUE(c.ok());
  EXPECT_FALSE(c.bounds.has_value());
  EXPECT_FALSE(c.notes.empty());
}

}  // namespace
}  // namespace codedmv
