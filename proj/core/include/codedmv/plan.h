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

// Tasks and assignment plans.
//
// A plan gives every worker an ordered list of block-row tasks. Workers
// process their list from the top, so after w_i completions worker i has
// delivered exactly its first w_i tasks.

#ifndef CODEDMV_PLAN_H_
#define CODEDMV_PLAN_H_

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "codedmv/field.h"
#include "codedmv/params.h"

namespace codedmv {

// One block row A_b, 0-based.
struct UncodedTask {
  int block = 0;

  friend bool operator==(const UncodedTask&, const UncodedTask&) = default;
};

// A linear combination sum_k coeffs[k] * A_k. Keys are 0-based block
// indices; zero coefficients are never stored.
struct CodedTask {
  std::map<int, Fp> coeffs;

  friend bool operator==(const CodedTask&, const CodedTask&) = default;
};

class Task {
 public:
  Task() = default;
  Task(UncodedTask t) : value_(t) {}                 // NOLINT
  Task(CodedTask t) : value_(std::move(t)) {}        // NOLINT

  static Task Uncoded(int block) { return Task(UncodedTask{block}); }
  static Task Coded(std::map<int, Fp> coeffs) {
    return Task(CodedTask{std::move(coeffs)});
  }

  bool is_coded() const { return std::holds_alternative<CodedTask>(value_); }
  // Only valid when !is_coded().
  int block() const { return std::get<UncodedTask>(value_).block; }
  // Only valid when is_coded().
  const std::map<int, Fp>& coeffs() const {
    return std::get<CodedTask>(value_).coeffs;
  }

  friend bool operator==(const Task&, const Task&) = default;

 private:
  std::variant<UncodedTask, CodedTask> value_;
};

struct AssignmentPlan {
  SystemParams params;
  std::vector<std::vector<Task>> workers;

  friend bool operator==(const AssignmentPlan&, const AssignmentPlan&) =
      default;
};

enum class ViolationKind {
  kParams,
  kWorkerCount,
  kWorkerLength,
  kBlockOutOfRange,
  kEmptyCoded,
  kZeroCoefficient,
  kDuplicateUncoded,
  kReplicationCount,
  kTaskMix,
  kPlacementOrder,
};

// `worker` and `block` are 0-based, -1 when not applicable. `message` uses
// 1-based numbering.
struct Violation {
  ViolationKind kind;
  int worker = -1;
  int block = -1;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool Has(ViolationKind kind) const;
  std::string ToString() const;
};

// Checks every structural invariant of a plan. Never throws.
ValidationReport ValidatePlan(const AssignmentPlan& plan);

}  // namespace codedmv

#endif  // CODEDMV_PLAN_H_
