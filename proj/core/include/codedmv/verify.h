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

// Cross-checks oracle truth against the closed-form bounds.

#ifndef CODEDMV_VERIFY_H_
#define CODEDMV_VERIFY_H_

#include <optional>
#include <string>
#include <vector>

#include "codedmv/bounds.h"
#include "codedmv/oracle.h"
#include "codedmv/plan.h"

namespace codedmv {

struct FormulaCheck {
  std::optional<BoundReport> bounds;  // nullopt when no closed form applies
  bool canonical = false;
  std::vector<std::string> mismatches;
  std::vector<std::string> notes;

  bool ok() const { return mismatches.empty(); }
};

// True when the plan is exactly what the matching constructor
// (CyclicUncoded, CyclicCoded with default support, MdsPlan) builds for its
// parameters. Only canonical plans are held to the exact formulas.
bool IsCanonicalPlan(const AssignmentPlan& plan);

// Every plan: bound q_lower <= oracle Q. Canonical plans: oracle Q equals
// q_exact when one exists and oracle resilience equals the formula.
// Non-canonical uncoded plans: oracle resilience <= r - 1.
FormulaCheck CheckAgainstFormulas(const AssignmentPlan& plan,
                                  const OracleReport& oracle);

}  // namespace codedmv

#endif  // CODEDMV_VERIFY_H_
