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

#include "codedmv/state.h"

#include <numeric>

#include "codedmv/errors.h"
#include "codedmv/plan.h"

namespace codedmv {

int StateVector::total() const {
  return std::accumulate(w_.begin(), w_.end(), 0);
}

bool StateVector::Dominates(const StateVector& other) const {
  if (other.size() != size()) return false;
  for (int i = 0; i < size(); ++i) {
    if (w_[i] < other.w_[i]) return false;
  }
  return true;
}

void StateVector::CheckFits(const AssignmentPlan& plan) const {
  if (size() != static_cast<int>(plan.workers.size())) {
    throw InvalidStateError("state has " + std::to_string(size()) +
                            " entries for a plan with " +
                            std::to_string(plan.workers.size()) + " workers");
  }
  for (int i = 0; i < size(); ++i) {
    const int len = static_cast<int>(plan.workers[i].size());
    if (w_[i] < 0 || w_[i] > len) {
      throw InvalidStateError("w_" + std::to_string(i + 1) + " = " +
                              std::to_string(w_[i]) + " outside [0, " +
                              std::to_string(len) + "]");
    }
  }
}

std::string StateVector::ToString() const {
  std::string out = "(";
  for (int i = 0; i < size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(w_[i]);
  }
  return out + ")";
}

}  // namespace codedmv
