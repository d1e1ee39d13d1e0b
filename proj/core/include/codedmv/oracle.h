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

// Brute-force ground truth for small plans.
//
// The recovery threshold Q is one more than the largest total of a
// non-decodable state. Decodability is monotone in the state lattice, so a
// level (fixed total) on which every state decodes certifies every higher
// level. The search climbs levels from delta - 1, leaves a level as soon as
// it finds a non-decodable witness, and stops at the first level that is
// decodable throughout.

#ifndef CODEDMV_ORACLE_H_
#define CODEDMV_ORACLE_H_

#include <cstdint>
#include <vector>

#include "codedmv/plan.h"
#include "codedmv/state.h"

namespace codedmv {

inline constexpr std::int64_t kDefaultOracleBudget = 10'000'000;

struct ThresholdResult {
  // nl + 1 when even the completed state does not decode.
  int q_true = 0;
  // Non-decodable, total q_true - 1.
  StateVector worst_state;
  std::int64_t rank_evaluations = 0;
};

struct ResilienceResult {
  // -1 when the plan does not decode even with every worker complete.
  int resilience = 0;
  // 0-based workers of a straggler set of size resilience + 1 that breaks
  // decoding; empty when every subset short of all workers decodes.
  std::vector<int> worst_straggler_set;
};

struct OracleReport {
  int q_true = 0;
  StateVector worst_state;
  int resilience_true = 0;
  std::vector<int> worst_straggler_set;
};

// Size of the state lattice, prod_i (l_i + 1).
double LatticeSize(const AssignmentPlan& plan);

// Throws BudgetExceededError when LatticeSize exceeds `budget`.
ThresholdResult BruteForceQ(const AssignmentPlan& plan,
                            std::int64_t budget = kDefaultOracleBudget);

// max_j Q_j + 1 where Q_j sums, over workers, the position of block j in
// the worker's list (or l when absent). Throws InvalidParamsError on plans
// with coded tasks.
int UncodedQFast(const AssignmentPlan& plan);

// Largest s such that removing any s workers (w_i = 0, the rest complete)
// still decodes. Throws BudgetExceededError when the subset count exceeds
// `budget`.
ResilienceResult StragglerResilience(
    const AssignmentPlan& plan, std::int64_t budget = kDefaultOracleBudget);

// Minimum over all k-subsets of workers of the number of distinct uncoded
// blocks they jointly hold. Requires 1 <= k <= n.
int MinUncodedCoverage(const AssignmentPlan& plan, int k,
                       std::int64_t budget = kDefaultOracleBudget);

OracleReport RunOracle(const AssignmentPlan& plan,
                       std::int64_t budget = kDefaultOracleBudget);

// Calls `visit` on every state with the given total and 0 <= w_i <= l_i in
// lexicographically descending order until it returns false. Returns false
// iff the visit was cut short.
template <typename Visit>
bool ForEachStateAtLevel(const std::vector<int>& ell, int total,
                         Visit&& visit);

}  // namespace codedmv

#include "codedmv/oracle_inl.h"

#endif  // CODEDMV_ORACLE_H_
