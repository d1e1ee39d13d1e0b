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

// Assignment plan constructors.
//
// All cyclic schemes fix delta = n: worker i (0-based) stores the uncoded
// blocks i, i+1, ..., i+l_u-1 (mod n) in that order. Coded rows draw
// successive rows of a Cauchy matrix, worker-major then row order.

#ifndef CODEDMV_SCHEMES_H_
#define CODEDMV_SCHEMES_H_

#include <optional>
#include <string_view>

#include "codedmv/plan.h"

namespace codedmv {

// Support of the coded rows in a cyclic coded plan.
enum class CodedRowSupport {
  kDefault,  // masked for kCodedBottom, full for kCodedTop
  kMasked,   // coefficients of the worker's own uncoded blocks zeroed
  kFull,     // every coefficient of the Cauchy row kept
};

// Worker i holds A_i, ..., A_{i+r-1}. Requires 1 <= r <= n.
AssignmentPlan CyclicUncoded(int n, int r);

// Cyclic uncoded portion with replication r_u plus `ell_c` coded rows per
// worker, at the bottom or the top. Requires 0 <= r_u, r_u + ell_c <= n,
// r_u + ell_c >= 1 and placement in {kCodedBottom, kCodedTop}. With
// ell_c = 0 the result is exactly CyclicUncoded(n, r_u).
AssignmentPlan CyclicCoded(int n, int r_u, int ell_c, Placement placement,
                           CodedRowSupport support = CodedRowSupport::kDefault);

// Dense (n * ell, delta) MDS baseline: every task is a full Cauchy row.
// Requires n * ell >= delta and 1 <= ell <= delta.
AssignmentPlan MdsPlan(int n, int ell, int delta);

enum class SchemeKind { kCyclicUncoded, kCyclicCodedBottom, kCyclicCodedTop, kMds };

// "cyclic-uncoded", "cyclic-coded-bottom", "cyclic-coded-top", "mds".
std::optional<SchemeKind> ParseSchemeKind(std::string_view name);
std::string_view SchemeKindName(SchemeKind kind);

// Named-scheme front end. Unused fields are ignored; missing required ones
// (negative) raise InvalidParamsError naming the flag.
struct DesignRequest {
  SchemeKind kind = SchemeKind::kCyclicUncoded;
  int n = -1;
  int r = -1;      // replication; r_u for the coded schemes
  int ell_c = -1;
  int ell = -1;    // mds only
  int delta = -1;  // mds only
};

AssignmentPlan Design(const DesignRequest& request);

}  // namespace codedmv

#endif  // CODEDMV_SCHEMES_H_
