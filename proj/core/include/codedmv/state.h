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

#ifndef CODEDMV_STATE_H_
#define CODEDMV_STATE_H_

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace codedmv {

struct AssignmentPlan;

// Per-worker progress counts w_i: worker i has finished its first w_i rows.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::vector<int> counts) : w_(std::move(counts)) {}
  StateVector(std::initializer_list<int> counts) : w_(counts) {}

  static StateVector Zero(int n) { return StateVector(std::vector<int>(n, 0)); }
  static StateVector Full(int n, int ell) {
    return StateVector(std::vector<int>(n, ell));
  }

  int size() const { return static_cast<int>(w_.size()); }
  int operator[](int i) const { return w_[i]; }
  int& operator[](int i) { return w_[i]; }
  const std::vector<int>& counts() const { return w_; }
  int total() const;

  // True when w_i >= other_i for every i.
  bool Dominates(const StateVector& other) const;

  // Throws InvalidStateError unless size() == n and 0 <= w_i <= ell.
  void CheckFits(const AssignmentPlan& plan) const;

  // "(3,3,2,1,0)".
  std::string ToString() const;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  std::vector<int> w_;
};

}  // namespace codedmv

#endif  // CODEDMV_STATE_H_
