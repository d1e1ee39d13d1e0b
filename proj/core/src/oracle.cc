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

#include "codedmv/oracle.h"

#include <cmath>
#include <set>
#include <string>

#include "codedmv/equations.h"
#include "codedmv/errors.h"

namespace codedmv {
namespace {

std::vector<int> WorkerLengths(const AssignmentPlan& plan) {
  std::vector<int> ell;
  ell.reserve(plan.workers.size());
  for (const auto& tasks : plan.workers) {
    ell.push_back(static_cast<int>(tasks.size()));
  }
  return ell;
}

double Choose(int n, int k) {
  double c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// Visits every k-subset of {0..n-1} in lexicographic order until `visit`
// returns false.
template <typename Visit>
bool ForEachSubset(int n, int k, Visit&& visit) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!visit(idx)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void CheckBudget(const char* what, double required, std::int64_t budget) {
  if (required > static_cast<double>(budget)) {
    throw BudgetExceededError(what, required, budget);
  }
}

}  // namespace

double LatticeSize(const AssignmentPlan& plan) {
  double size = 1;
  for (const auto& tasks : plan.workers) size *= tasks.size() + 1.0;
  return size;
}

ThresholdResult BruteForceQ(const AssignmentPlan& plan, std::int64_t budget) {
  CheckBudget("recovery-threshold search", LatticeSize(plan), budget);
  const DecodabilityChecker checker(plan);
  const std::vector<int> ell = WorkerLengths(plan);
  int max_total = 0;
  for (int l : ell) max_total += l;

  ThresholdResult result;
  const StateVector full(ell);
  ++result.rank_evaluations;
  if (!checker.IsDecodable(full)) {
    result.q_true = max_total + 1;
    result.worst_state = full;
    return result;
  }

  // Below delta equations nothing decodes, so level delta - 1 always yields
  // the first witness.
  for (int level = std::max(0, checker.delta() - 1); level <= max_total;
       ++level) {
    StateVector witness;
    const bool all_decodable =
        ForEachStateAtLevel(ell, level, [&](const StateVector& w) {
          ++result.rank_evaluations;
          if (checker.IsDecodable(w)) return true;
          witness = w;
          return false;
        });
    if (all_decodable) {
      result.q_true = level;
      return result;
    }
    result.worst_state = std::move(witness);
  }
  // Unreachable: the full state decodes, so the top level is all-decodable.
  throw Error("recovery-threshold search did not terminate");
}

int UncodedQFast(const AssignmentPlan& plan) {
  const int delta = plan.params.delta;
  std::vector<int> q(delta, 0);
  for (const auto& tasks : plan.workers) {
    const int len = static_cast<int>(tasks.size());
    std::vector<int> position(delta, len);
    for (int pos = 0; pos < len; ++pos) {
      if (tasks[pos].is_coded()) {
        throw InvalidParamsError("uncoded_q_fast requires a plan without "
                                 "coded tasks");
      }
      const int b = tasks[pos].block();
      if (b < 0 || b >= delta) {
        throw InvalidParamsError("block " + std::to_string(b + 1) +
                                 " outside 1.." + std::to_string(delta));
      }
      position[b] = std::min(position[b], pos);
    }
    for (int b = 0; b < delta; ++b) q[b] += position[b];
  }
  return *std::max_element(q.begin(), q.end()) + 1;
}

ResilienceResult StragglerResilience(const AssignmentPlan& plan,
                                     std::int64_t budget) {
  const int n = static_cast<int>(plan.workers.size());
  CheckBudget("straggler-resilience search", std::pow(2.0, n), budget);
  const DecodabilityChecker checker(plan);
  const std::vector<int> ell = WorkerLengths(plan);

  ResilienceResult result;
  for (int s = 0; s <= n; ++s) {
    std::vector<int> failing;
    const bool all_ok = ForEachSubset(n, s, [&](const std::vector<int>& set) {
      StateVector w(ell);
      for (int i : set) w[i] = 0;
      if (checker.IsDecodable(w)) return true;
      failing = set;
      return false;
    });
    if (!all_ok) {
      result.resilience = s - 1;
      result.worst_straggler_set = std::move(failing);
      return result;
    }
  }
  result.resilience = n;
  return result;
}

int MinUncodedCoverage(const AssignmentPlan& plan, int k,
                       std::int64_t budget) {
  const int n = static_cast<int>(plan.workers.size());
  if (k < 1 || k > n) {
    throw InvalidParamsError("min_uncoded_coverage requires 1 <= k <= n, "
                             "got k = " + std::to_string(k));
  }
  CheckBudget("coverage search", Choose(n, k), budget);
  int best = plan.params.delta + 1;
  ForEachSubset(n, k, [&](const std::vector<int>& set) {
    std::set<int> blocks;
    for (int i : set) {
      for (const Task& t : plan.workers[i]) {
        if (!t.is_coded()) blocks.insert(t.block());
      }
    }
    best = std::min(best, static_cast<int>(blocks.size()));
    return true;
  });
  return best;
}

OracleReport RunOracle(const AssignmentPlan& plan, std::int64_t budget) {
  ThresholdResult q = BruteForceQ(plan, budget);
  ResilienceResult s = StragglerResilience(plan, budget);
  return {q.q_true, std::move(q.worst_state), s.resilience,
          std::move(s.worst_straggler_set)};
}

}  // namespace codedmv
