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

// JSON form of plans and reports.
//
// Plan documents look like
//   {"params": {"n": 3, "delta": 3, "ell_u": 1, "ell_c": 1, "r_u": 1,
//               "placement": "coded_bottom"},
//    "workers": [[{"u": 1}, {"c": {"2": "1431655765", "3": "1"}}], ...]}
// Block indices are 1-based in files. Coefficients are decimal strings of
// field elements. Output is deterministic: fixed key order, two-space
// indent, trailing newline.

#ifndef CODEDMV_PLAN_JSON_H_
#define CODEDMV_PLAN_JSON_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "codedmv/bounds.h"
#include "codedmv/oracle.h"
#include "codedmv/plan.h"

namespace codedmv {

std::string PlanToJson(const AssignmentPlan& plan);
// Throws ParseError on malformed documents. Structural invariants are not
// checked here; run ValidatePlan on the result.
AssignmentPlan PlanFromJson(std::string_view text);

AssignmentPlan ReadPlanFile(const std::filesystem::path& path);
void WritePlanFile(const std::filesystem::path& path,
                   const AssignmentPlan& plan);

std::string BoundReportToJson(const BoundReport& report);
// Worker indices in the straggler set are 1-based.
std::string OracleReportToJson(const OracleReport& report);

// Reads a whole file; throws ParseError when it cannot be opened.
std::string ReadTextFile(const std::filesystem::path& path);
// Writes bytes verbatim; throws Error on failure.
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

}  // namespace codedmv

#endif  // CODEDMV_PLAN_JSON_H_
