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

// What the master holds after a given computation state, and whether it
// determines A x.
//
// Decodability is an exact rank test over GF(2^31 - 1): the unit rows of
// the known uncoded blocks plus every received coded row must span all
// `delta` block unknowns.

#ifndef CODEDMV_EQUATIONS_H_
#define CODEDMV_EQUATIONS_H_

#include <map>
#include <set>
#include <vector>

#include "codedmv/field.h"
#include "codedmv/plan.h"
#include "codedmv/state.h"

namespace codedmv {

struct EquationSet {
  std::set<int> known;                    // 0-based, duplicates merged
  std::vector<std::map<int, Fp>> coded;   // in worker-major, row order

  bool empty() const { return known.empty() && coded.empty(); }
};

// The first w_i tasks of every worker. Throws InvalidStateError when the
// state does not fit the plan.
EquationSet ProcessedEquations(const AssignmentPlan& plan,
                               const StateVector& state);

// |known| + rank of the coded rows restricted to the unknown columns.
int EquationRank(int delta, const EquationSet& equations);
bool IsDecodable(int delta, const EquationSet& equations);

int EquationRank(const AssignmentPlan& plan, const StateVector& state);
bool IsDecodable(const AssignmentPlan& plan, const StateVector& state);

// Precompiles a plan into dense coefficient rows so repeated decodability
// queries (oracle searches, simulation) avoid map lookups. Holds a copy of
// nothing but indices and rows; safe to share across threads.
class DecodabilityChecker {
 public:
  explicit DecodabilityChecker(const AssignmentPlan& plan);

  int delta() const { return delta_; }
  int workers() const { return static_cast<int>(tasks_.size()); }
  int ell(int worker) const {
    return static_cast<int>(tasks_[worker].size());
  }

  int Rank(const StateVector& state) const;
  bool IsDecodable(const StateVector& state) const;

 private:
  struct CompiledTask {
    int block = -1;   // >= 0 for uncoded tasks
    int row = -1;     // index into coded_rows_ for coded tasks
  };

  void CheckState(const StateVector& state) const;
  int RankImpl(const StateVector& state, bool stop_when_short) const;

  int delta_ = 0;
  std::vector<std::vector<CompiledTask>> tasks_;
  std::vector<std::vector<Fp>> coded_rows_;
};

}  // namespace codedmv

#endif  // CODEDMV_EQUATIONS_H_
