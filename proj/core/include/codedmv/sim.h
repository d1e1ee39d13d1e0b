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


// Discrete-event simulation of workers running their task lists top to
// bottom, with the master decoding at the first decodable instant.
//
// A trial draws one raw duration per (worker, row) from the speed model and
// scales it by the cost weight of the task in that row. Worker i's k-th raw
// draw depends only on (trial seed, i, k), so every plan in an experiment
// sees the same worker speeds and differs only by its layout.

#ifndef CODEDMV_SIM_H_
#define CODEDMV_SIM_H_

#include <cstdint>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "codedmv/equations.h"
#include "codedmv/numeric.h"
#include "codedmv/plan.h"
#include "codedmv/state.h"

namespace codedmv {

// Per-block time shift + Exp(rate * multiplier_i). Empty multipliers mean 1.
struct ShiftedExponential {
  double shift = 1.0;
  double rate = 1.0;
  std::vector<double> multipliers;
};

// block_times[i][k] is worker i's k-th raw duration. A single row is reused
// for every worker; a single entry in a row is reused for every block.
struct Deterministic {
  std::vector<std::vector<double>> block_times = {{1.0}};
};

// Stragglers (0-based) finish blocks_before_halt rows and then stop; every
// block takes block_time.
struct HaltAfter {
  std::vector<int> stragglers;
  int blocks_before_halt = 0;
  double block_time = 1.0;
};

using SpeedModel = std::variant<ShiftedExponential, Deterministic, HaltAfter>;

struct UniformCost {};

// Task weight = nnz(task) / mean block nnz, both floored at 1. A coded
// task's nnz is the size of the union of its blocks' patterns when patterns
// are given, else the sum of block nnz capped at block_capacity (0 = no cap).
struct SparsityAwareCost {
  std::vector<std::int64_t> block_nnz;
  std::int64_t block_capacity = 0;
  // Sorted linear indices (row within block * cols + col); optional.
  std::vector<std::vector<std::int64_t>> block_patterns;
};

using CostModel = std::variant<UniformCost, SparsityAwareCost>;

// Builds the exact-union cost model of a matrix split into delta blocks.
SparsityAwareCost SparsityCostFromMatrix(const SparseMatrix& a, int delta);

std::int64_t TaskNonzeros(const Task& task, const SparsityAwareCost& cost);
double TaskWeight(const Task& task, const CostModel& cost);

// splitmix64 finalizer over (a, b); used to derive trial and worker seeds.
std::uint64_t MixSeed(std::uint64_t a, std::uint64_t b);

// times[i][k]: when worker i finishes its k-th row (cumulative). Halted
// workers have shorter lists. Throws InvalidParamsError on an invalid model.
std::vector<std::vector<double>> CompletionTimes(const AssignmentPlan& plan,
                                                 const SpeedModel& speed,
                                                 const CostModel& cost,
                                                 std::uint64_t seed);

struct TrialResult {
  double finish_time = std::numeric_limits<double>::infinity();
  StateVector final_state;
  int blocks_processed_total = 0;
  bool decode_ok = false;
};

TrialResult RunTrial(const AssignmentPlan& plan, const SpeedModel& speed,
                     const CostModel& cost, std::uint64_t seed);

struct PlanSummary {
  std::string plan_id;
  int trials = 0;
  // Over decoded trials; infinity when none decoded.
  double mean_finish = 0;
  double median_finish = 0;
  double p95_finish = 0;  // nearest rank
  double failure_rate = 0;
};

struct ExperimentResult {
  std::vector<std::string> plan_ids;
  // trials[p][t]
  std::vector<std::vector<TrialResult>> trials;
  std::vector<PlanSummary> summaries;
};

// Trial t runs with seed MixSeed(seed, t) for every plan. Throws
// InvalidParamsError when trials < 1 or ids and plans differ in length.
ExperimentResult RunExperiment(const std::vector<AssignmentPlan>& plans,
                               const std::vector<std::string>& ids,
                               const SpeedModel& speed, const CostModel& cost,
                               int trials, std::uint64_t seed);

PlanSummary Summarize(const std::string& plan_id,
                      const std::vector<TrialResult>& trials);

// Columns plan_id,trial,finish_time,blocks_total,decode_ok.
std::string TrialsToCsv(const ExperimentResult& result);
// Columns plan_id,trials,mean_finish,median_finish,p95_finish,failure_rate.
std::string SummariesToCsv(const std::vector<PlanSummary>& summaries);

// Fraction of trials where plan a finishes no later than plan b.
double PairedWinRate(const std::vector<TrialResult>& a,
                     const std::vector<TrialResult>& b);

}  // namespace codedmv

#endif  // CODEDMV_SIM_H_
