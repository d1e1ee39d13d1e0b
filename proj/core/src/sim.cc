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


#include "codedmv/sim.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "codedmv/errors.h"
#include "codedmv/matrix_io.h"

namespace codedmv {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Exp(1) from the top 53 bits of the generator, so the draw sequence is
// fixed by the seed across platforms.
double UnitExponential(std::mt19937_64& gen) {
  const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  return -std::log1p(-u);
}

void CheckPositive(double v, const char* what) {
  if (!(v > 0) || !std::isfinite(v)) {
    throw InvalidParamsError(std::string(what) + " must be positive and "
                             "finite, got " + FormatDouble(v));
  }
}

void CheckCost(const AssignmentPlan& plan, const CostModel& cost) {
  const auto* sparse = std::get_if<SparsityAwareCost>(&cost);
  if (sparse == nullptr) return;
  const auto delta = static_cast<std::size_t>(plan.params.delta);
  if (sparse->block_nnz.size() != delta) {
    throw InvalidParamsError("sparsity cost lists " +
                             std::to_string(sparse->block_nnz.size()) +
                             " blocks, plan has " + std::to_string(delta));
  }
  if (!sparse->block_patterns.empty() &&
      sparse->block_patterns.size() != delta) {
    throw InvalidParamsError("sparsity cost patterns do not match delta");
  }
}

// Raw (unweighted) durations of worker i's rows.
std::vector<double> RawDurations(const SpeedModel& speed, int worker,
                                 int rows, std::uint64_t seed) {
  std::vector<double> d;
  d.reserve(rows);
  if (const auto* m = std::get_if<ShiftedExponential>(&speed)) {
    if (!(m->shift >= 0) || !std::isfinite(m->shift)) {
      throw InvalidParamsError("shift must be non-negative");
    }
    CheckPositive(m->rate, "rate");
    double mult = 1.0;
    if (!m->multipliers.empty()) {
      if (worker >= static_cast<int>(m->multipliers.size())) {
        throw InvalidParamsError("speed model has " +
                                 std::to_string(m->multipliers.size()) +
                                 " multipliers, plan has more workers");
      }
      mult = m->multipliers[worker];
      CheckPositive(mult, "rate multiplier");
    }
    std::mt19937_64 gen(MixSeed(seed, static_cast<std::uint64_t>(worker)));
    for (int k = 0; k < rows; ++k) {
      d.push_back(m->shift + UnitExponential(gen) / (m->rate * mult));
    }
  } else if (const auto* m = std::get_if<Deterministic>(&speed)) {
    if (m->block_times.empty()) {
      throw InvalidParamsError("deterministic speed model has no times");
    }
    if (m->block_times.size() > 1 &&
        worker >= static_cast<int>(m->block_times.size())) {
      throw InvalidParamsError("deterministic speed model lists fewer "
                               "workers than the plan");
    }
    const auto& row = m->block_times.size() == 1 ? m->block_times.front()
                                                 : m->block_times[worker];
    if (row.empty() || (row.size() > 1 && static_cast<int>(row.size()) < rows)) {
      throw InvalidParamsError("deterministic speed model lists too few "
                               "block times for worker " +
                               std::to_string(worker + 1));
    }
    for (int k = 0; k < rows; ++k) {
      const double t = row.size() == 1 ? row.front() : row[k];
      CheckPositive(t, "block time");
      d.push_back(t);
    }
  } else {
    const auto& halt = std::get<HaltAfter>(speed);
    CheckPositive(halt.block_time, "block time");
    if (halt.blocks_before_halt < 0) {
      throw InvalidParamsError("blocks_before_halt must be non-negative");
    }
    const bool halted = std::find(halt.stragglers.begin(), halt.stragglers.end(),
                                  worker) != halt.stragglers.end();
    const int done = halted ? std::min(rows, halt.blocks_before_halt) : rows;
    d.assign(done, halt.block_time);
  }
  return d;
}

TrialResult RunTrialWith(const DecodabilityChecker& checker,
                         const AssignmentPlan& plan, const SpeedModel& speed,
                         const CostModel& cost, std::uint64_t seed) {
  const auto times = CompletionTimes(plan, speed, cost, seed);
  struct Event {
    double time;
    int worker;
  };
  std::vector<Event> events;
  for (int i = 0; i < static_cast<int>(times.size()); ++i) {
    for (double t : times[i]) events.push_back({t, i});
  }
  // Within a worker, completion times are non-decreasing, so a stable sort
  // on time keeps each worker's rows in order.
  std::stable_sort(events.begin(), events.end(),
                   [](const Event& a, const Event& b) {
                     return a.time < b.time;
                   });

  TrialResult result;
  StateVector w = StateVector::Zero(static_cast<int>(plan.workers.size()));
  std::size_t e = 0;
  while (e < events.size()) {
    const double now = events[e].time;
    for (; e < events.size() && events[e].time == now; ++e) {
      ++w[events[e].worker];
    }
    if (checker.IsDecodable(w)) {
      result.finish_time = now;
      result.decode_ok = true;
      break;
    }
  }
  result.blocks_processed_total = w.total();
  result.final_state = std::move(w);
  return result;
}

double Mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / v.size();
}

}  // namespace

std::uint64_t MixSeed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a * 0x9E3779B97F4A7C15ull + b + 0x632BE59BD9B4E019ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

SparsityAwareCost SparsityCostFromMatrix(const SparseMatrix& a, int delta) {
  const auto ranges = SplitMatrix(a.rows(), delta);
  SparsityAwareCost cost;
  cost.block_capacity = ranges.front().size() * a.cols();
  for (const BlockRange& r : ranges) {
    std::vector<std::int64_t> pattern;
    for (Eigen::Index row = r.begin; row < r.end; ++row) {
      for (SparseMatrix::InnerIterator it(a, row); it; ++it) {
        if (it.value() != 0) {
          pattern.push_back((row - r.begin) * a.cols() + it.col());
        }
      }
    }
    std::sort(pattern.begin(), pattern.end());
    cost.block_nnz.push_back(static_cast<std::int64_t>(pattern.size()));
    cost.block_patterns.push_back(std::move(pattern));
  }
  return cost;
}

std::int64_t TaskNonzeros(const Task& task, const SparsityAwareCost& cost) {
  auto nnz_of = [&](int b) {
    if (b < 0 || b >= static_cast<int>(cost.block_nnz.size())) {
      throw InvalidParamsError("task references block " +
                               std::to_string(b + 1) +
                               " outside the cost model");
    }
    return cost.block_nnz[b];
  };
  if (!task.is_coded()) return nnz_of(task.block());
  if (!cost.block_patterns.empty()) {
    std::vector<std::int64_t> all;
    for (const auto& [b, c] : task.coeffs()) {
      nnz_of(b);
      const auto& p = cost.block_patterns[b];
      all.insert(all.end(), p.begin(), p.end());
    }
    std::sort(all.begin(), all.end());
    return std::unique(all.begin(), all.end()) - all.begin();
  }
  std::int64_t sum = 0;
  for (const auto& [b, c] : task.coeffs()) sum += nnz_of(b);
  return cost.block_capacity > 0 ? std::min(sum, cost.block_capacity) : sum;
}

double TaskWeight(const Task& task, const CostModel& cost) {
  const auto* sparse = std::get_if<SparsityAwareCost>(&cost);
  if (sparse == nullptr) return 1.0;
  const double total = std::accumulate(sparse->block_nnz.begin(),
                                       sparse->block_nnz.end(), 0.0);
  const double mean = std::max(1.0, total / sparse->block_nnz.size());
  const double nnz =
      std::max<double>(1.0, static_cast<double>(TaskNonzeros(task, *sparse)));
  return nnz / mean;
}

std::vector<std::vector<double>> CompletionTimes(const AssignmentPlan& plan,
                                                 const SpeedModel& speed,
                                                 const CostModel& cost,
                                                 std::uint64_t seed) {
  CheckCost(plan, cost);
  std::vector<std::vector<double>> times(plan.workers.size());
  for (int i = 0; i < static_cast<int>(plan.workers.size()); ++i) {
    const auto& tasks = plan.workers[i];
    const auto raw =
        RawDurations(speed, i, static_cast<int>(tasks.size()), seed);
    double t = 0;
    for (std::size_t k = 0; k < raw.size(); ++k) {
      t += raw[k] * TaskWeight(tasks[k], cost);
      times[i].push_back(t);
    }
  }
  return times;
}

TrialResult RunTrial(const AssignmentPlan& plan, const SpeedModel& speed,
                     const CostModel& cost, std::uint64_t seed) {
  return RunTrialWith(DecodabilityChecker(plan), plan, speed, cost, seed);
}

PlanSummary Summarize(const std::string& plan_id,
                      const std::vector<TrialResult>& trials) {
  PlanSummary s;
  s.plan_id = plan_id;
  s.trials = static_cast<int>(trials.size());
  std::vector<double> finish;
  for (const TrialResult& t : trials) {
    if (t.decode_ok) finish.push_back(t.finish_time);
  }
  s.failure_rate =
      trials.empty() ? 0.0
                     : static_cast<double>(trials.size() - finish.size()) /
                           trials.size();
  if (finish.empty()) {
    s.mean_finish = s.median_finish = s.p95_finish = kInf;
    return s;
  }
  std::sort(finish.begin(), finish.end());
  const std::size_t n = finish.size();
  s.mean_finish = Mean(finish);
  s.median_finish =
      n % 2 == 1 ? finish[n / 2] : (finish[n / 2 - 1] + finish[n / 2]) / 2;
  const auto rank = static_cast<std::size_t>(std::ceil(0.95 * n));
  s.p95_finish = finish[std::max<std::size_t>(rank, 1) - 1];
  return s;
}

ExperimentResult RunExperiment(const std::vector<AssignmentPlan>& plans,
                               const std::vector<std::string>& ids,
                               const SpeedModel& speed, const CostModel& cost,
                               int trials, std::uint64_t seed) {
  if (trials < 1) {
    throw InvalidParamsError("trials must be at least 1, got " +
                             std::to_string(trials));
  }
  if (plans.size() != ids.size()) {
    throw InvalidParamsError("every plan needs exactly one id");
  }
  ExperimentResult result;
  result.plan_ids = ids;
  for (std::size_t p = 0; p < plans.size(); ++p) {
    const DecodabilityChecker checker(plans[p]);
    std::vector<TrialResult> runs;
    runs.reserve(trials);
    for (int t = 0; t < trials; ++t) {
      runs.push_back(RunTrialWith(checker, plans[p], speed, cost,
                                  MixSeed(seed, static_cast<std::uint64_t>(t))));
    }
    result.summaries.push_back(Summarize(ids[p], runs));
    result.trials.push_back(std::move(runs));
  }
  return result;
}

std::string TrialsToCsv(const ExperimentResult& result) {
  std::string out = "plan_id,trial,finish_time,blocks_total,decode_ok\n";
  for (std::size_t p = 0; p < result.trials.size(); ++p) {
    for (std::size_t t = 0; t < result.trials[p].size(); ++t) {
      const TrialResult& r = result.trials[p][t];
      out += result.plan_ids[p] + ',' + std::to_string(t) + ',' +
             FormatDouble(r.finish_time) + ',' +
             std::to_string(r.blocks_processed_total) + ',' +
             (r.decode_ok ? "true" : "false") + '\n';
    }
  }
  return out;
}

std::string SummariesToCsv(const std::vector<PlanSummary>& summaries) {
  std::string out =
      "plan_id,trials,mean_finish,median_finish,p95_finish,failure_rate\n";
  for (const PlanSummary& s : summaries) {
    out += s.plan_id + ',' + std::to_string(s.trials) + ',' +
           FormatDouble(s.mean_finish) + ',' + FormatDouble(s.median_finish) +
           ',' + FormatDouble(s.p95_finish) + ',' +
           FormatDouble(s.failure_rate) + '\n';
  }
  return out;
}

double PairedWinRate(const std::vector<TrialResult>& a,
                     const std::vector<TrialResult>& b) {
  if (a.size() != b.size() || a.empty()) {
    throw InvalidParamsError("paired win rate needs equal, non-empty trial "
                             "lists");
  }
  std::size_t wins = 0;
  for (std::size_t t = 0; t < a.size(); ++t) {
    if (a[t].finish_time <= b[t].finish_time) ++wins;
  }
  return static_cast<double>(wins) / a.size();
}

}  // namespace codedmv
