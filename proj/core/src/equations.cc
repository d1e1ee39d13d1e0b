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

#include "codedmv/errors.h"

namespace codedmv {

EquationSet ProcessedEquations(const AssignmentPlan& plan,
                               const StateVector& state) {
  state.CheckFits(plan);
  EquationSet out;
  for (int i = 0; i < state.size(); ++i) {
    for (int pos = 0; pos < state[i]; ++pos) {
      const Task& t = plan.workers[i][pos];
      if (t.is_coded()) {
        out.coded.push_back(t.coeffs());
      } else {
        out.known.insert(t.block());
      }
    }
  }
  return out;
}

int EquationRank(int delta, const EquationSet& equations) {
  std::vector<int> column_of(delta, -1);
  int unknowns = 0;
  for (int b = 0; b < delta; ++b) {
    if (!equations.known.contains(b)) column_of[b] = unknowns++;
  }
  const int known = delta - unknowns;
  if (unknowns == 0 || equations.coded.empty()) return known;

  std::vector<std::vector<Fp>> rows;
  rows.reserve(equations.coded.size());
  for (const auto& coeffs : equations.coded) {
    std::vector<Fp> row(unknowns);
    for (const auto& [b, c] : coeffs) {
      if (b < 0 || b >= delta) {
        throw InvalidParamsError("coded row references block " +
                                 std::to_string(b + 1) + " outside 1.." +
                                 std::to_string(delta));
      }
      if (column_of[b] >= 0) row[column_of[b]] = c;
    }
    rows.push_back(std::move(row));
  }
  return known + Rank(std::move(rows));
}

bool IsDecodable(int delta, const EquationSet& equations) {
  return EquationRank(delta, equations) == delta;
}

int EquationRank(const AssignmentPlan& plan, const StateVector& state) {
  return EquationRank(plan.params.delta, ProcessedEquations(plan, state));
}

bool IsDecodable(const AssignmentPlan& plan, const StateVector& state) {
  return IsDecodable(plan.params.delta, ProcessedEquations(plan, state));
}

DecodabilityChecker::DecodabilityChecker(const AssignmentPlan& plan)
    : delta_(plan.params.delta) {
  tasks_.resize(plan.workers.size());
  for (std::size_t i = 0; i < plan.workers.size(); ++i) {
    for (const Task& t : plan.workers[i]) {
      CompiledTask ct;
      if (t.is_coded()) {
        std::vector<Fp> row(delta_);
        for (const auto& [b, c] : t.coeffs()) {
          if (b < 0 || b >= delta_) {
            throw InvalidParamsError("coded row references block " +
                                     std::to_string(b + 1) + " outside 1.." +
                                     std::to_string(delta_));
          }
          row[b] = c;
        }
        ct.row = static_cast<int>(coded_rows_.size());
        coded_rows_.push_back(std::move(row));
      } else {
        if (t.block() < 0 || t.block() >= delta_) {
          throw InvalidParamsError("uncoded task references block " +
                                   std::to_string(t.block() + 1) +
                                   " outside 1.." + std::to_string(delta_));
        }
        ct.block = t.block();
      }
      tasks_[i].push_back(ct);
    }
  }
}

void DecodabilityChecker::CheckState(const StateVector& state) const {
  if (state.size() != workers()) {
    throw InvalidStateError("state has " + std::to_string(state.size()) +
                            " entries for a plan with " +
                            std::to_string(workers()) + " workers");
  }
  for (int i = 0; i < state.size(); ++i) {
    if (state[i] < 0 || state[i] > ell(i)) {
      throw InvalidStateError("w_" + std::to_string(i + 1) + " = " +
                              std::to_string(state[i]) + " outside [0, " +
                              std::to_string(ell(i)) + "]");
    }
  }
}

int DecodabilityChecker::RankImpl(const StateVector& state,
                                  bool stop_when_short) const {
  CheckState(state);
  std::vector<char> known(delta_, 0);
  std::vector<int> coded;
  for (int i = 0; i < state.size(); ++i) {
    for (int pos = 0; pos < state[i]; ++pos) {
      const CompiledTask& t = tasks_[i][pos];
      if (t.block >= 0) {
        known[t.block] = 1;
      } else {
        coded.push_back(t.row);
      }
    }
  }
  std::vector<int> unknown_cols;
  for (int b = 0; b < delta_; ++b) {
    if (!known[b]) unknown_cols.push_back(b);
  }
  const int known_count = delta_ - static_cast<int>(unknown_cols.size());
  if (unknown_cols.empty() || coded.empty()) return known_count;
  // Fewer equations than unknowns can never reach full rank.
  if (stop_when_short && coded.size() < unknown_cols.size()) return -1;

  std::vector<std::vector<Fp>> rows;
  rows.reserve(coded.size());
  for (int r : coded) {
    std::vector<Fp> row;
    row.reserve(unknown_cols.size());
    for (int b : unknown_cols) row.push_back(coded_rows_[r][b]);
    rows.push_back(std::move(row));
  }
  return known_count + codedmv::Rank(std::move(rows));
}

int DecodabilityChecker::Rank(const StateVector& state) const {
  return RankImpl(state, false);
}

bool DecodabilityChecker::IsDecodable(const StateVector& state) const {
  return RankImpl(state, true) == delta_;
}

}  // namespace codedmv
