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

#include "codedmv/verify.h"

#include "codedmv/errors.h"
#include "codedmv/schemes.h"

namespace codedmv {
namespace {

std::optional<AssignmentPlan> CanonicalFor(const SystemParams& p) {
  try {
    switch (p.placement) {
      case Placement::kUncodedOnly:
        if (p.delta != p.n || p.ell_u != p.r_u) return std::nullopt;
        return CyclicUncoded(p.n, p.r_u);
      case Placement::kCodedBottom:
      case Placement::kCodedTop:
        if (p.delta != p.n || p.ell_u != p.r_u) return std::nullopt;
        return CyclicCoded(p.n, p.r_u, p.ell_c, p.placement);
      case Placement::kFullyCoded:
        return MdsPlan(p.n, p.ell_c, p.delta);
    }
  } catch (const Error&) {
  }
  return std::nullopt;
}

}  // namespace

bool IsCanonicalPlan(const AssignmentPlan& plan) {
  auto canonical = CanonicalFor(plan.params);
  return canonical && *canonical == plan;
}

FormulaCheck CheckAgainstFormulas(const AssignmentPlan& plan,
                                  const OracleReport& oracle) {
  FormulaCheck check;
  check.canonical = IsCanonicalPlan(plan);
  try {
    check.bounds = EvaluateBounds(plan.params);
  } catch (const Error& e) {
    check.notes.push_back(std::string("no closed form: ") + e.what());
    return check;
  }
  const BoundReport& b = *check.bounds;
  const int q = oracle.q_true;
  if (q > plan.params.n * plan.params.ell()) {
    check.notes.push_back("plan does not decode even when every worker "
                          "finishes");
  }
  if (b.q_lower > q) {
    check.mismatches.push_back("lower bound " + std::to_string(b.q_lower) +
                               " exceeds oracle Q = " + std::to_string(q));
  }
  if (check.canonical) {
    if (b.q_exact && *b.q_exact != q) {
      check.mismatches.push_back("formula Q = " + std::to_string(*b.q_exact) +
                                 " but oracle Q = " + std::to_string(q));
    }
    if (b.resilience != oracle.resilience_true) {
      check.mismatches.push_back(
          "formula resilience " + std::to_string(b.resilience) +
          " but oracle resilience " + std::to_string(oracle.resilience_true));
    }
  } else {
    check.notes.push_back("plan is not a canonical construction; only "
                          "inequalities are checked");
    if (plan.params.placement == Placement::kUncodedOnly &&
        oracle.resilience_true > plan.params.r_u - 1) {
      check.mismatches.push_back(
          "oracle resilience " + std::to_string(oracle.resilience_true) +
          " exceeds r - 1 = " + std::to_string(plan.params.r_u - 1));
    }
  }
  return check;
}

}  // namespace codedmv
