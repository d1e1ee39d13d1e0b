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

#include "codedmv/schemes.h"

#include <set>
#include <string>

#include "codedmv/cauchy.h"
#include "codedmv/errors.h"

namespace codedmv {
namespace {

std::vector<Task> CyclicBlocks(int worker, int count, int delta) {
  std::vector<Task> tasks;
  tasks.reserve(count);
  for (int t = 0; t < count; ++t) {
    tasks.push_back(Task::Uncoded((worker + t) % delta));
  }
  return tasks;
}

std::map<int, Fp> RowToCoeffs(const std::vector<Fp>& row,
                              const std::set<int>& excluded) {
  std::map<int, Fp> coeffs;
  for (int k = 0; k < static_cast<int>(row.size()); ++k) {
    if (excluded.contains(k) || row[k].is_zero()) continue;
    coeffs.emplace(k, row[k]);
  }
  return coeffs;
}

}  // namespace

AssignmentPlan CyclicUncoded(int n, int r) {
  if (n < 1) throw InvalidParamsError("cyclic_uncoded needs n >= 1");
  if (r < 1 || r > n) {
    throw InvalidParamsError("cyclic_uncoded needs 1 <= r <= n, got r = " +
                             std::to_string(r) + ", n = " + std::to_string(n));
  }
  AssignmentPlan plan;
  plan.params = {.n = n, .delta = n, .ell_u = r, .ell_c = 0, .r_u = r,
                 .placement = Placement::kUncodedOnly};
  for (int i = 0; i < n; ++i) plan.workers.push_back(CyclicBlocks(i, r, n));
  return plan;
}

AssignmentPlan CyclicCoded(int n, int r_u, int ell_c, Placement placement,
                           CodedRowSupport support) {
  if (placement != Placement::kCodedBottom &&
      placement != Placement::kCodedTop) {
    throw InvalidParamsError(
        "cyclic_coded placement must be coded_bottom or coded_top");
  }
  if (n < 1) throw InvalidParamsError("cyclic_coded needs n >= 1");
  if (r_u < 0 || ell_c < 0) {
    throw InvalidParamsError("cyclic_coded needs r_u >= 0 and ell_c >= 0");
  }
  if (r_u + ell_c > n) {
    throw InvalidParamsError("cyclic_coded needs r_u + ell_c <= delta = n, "
                             "got " + std::to_string(r_u) + " + " +
                             std::to_string(ell_c) + " > " +
                             std::to_string(n));
  }
  if (r_u + ell_c < 1) {
    throw InvalidParamsError("cyclic_coded needs r_u >= 1 or ell_c >= 1");
  }
  if (ell_c == 0) return CyclicUncoded(n, r_u);

  if (support == CodedRowSupport::kDefault) {
    support = placement == Placement::kCodedBottom ? CodedRowSupport::kMasked
                                                   : CodedRowSupport::kFull;
  }
  const CauchyMatrix cauchy = CauchyMatrix::Generate(n * ell_c, n, 0);

  AssignmentPlan plan;
  plan.params = {.n = n, .delta = n, .ell_u = r_u, .ell_c = ell_c,
                 .r_u = r_u, .placement = placement};
  int next_row = 0;
  for (int i = 0; i < n; ++i) {
    std::vector<Task> uncoded = CyclicBlocks(i, r_u, n);
    std::set<int> excluded;
    if (support == CodedRowSupport::kMasked) {
      for (const Task& t : uncoded) excluded.insert(t.block());
    }
    std::vector<Task> coded;
    for (int j = 0; j < ell_c; ++j) {
      coded.push_back(Task::Coded(RowToCoeffs(cauchy.row(next_row++),
                                              excluded)));
    }
    std::vector<Task>& first =
        placement == Placement::kCodedBottom ? uncoded : coded;
    std::vector<Task>& second =
        placement == Placement::kCodedBottom ? coded : uncoded;
    first.insert(first.end(), second.begin(), second.end());
    plan.workers.push_back(std::move(first));
  }
  return plan;
}

AssignmentPlan MdsPlan(int n, int ell, int delta) {
  if (n < 1 || ell < 1 || delta < 1) {
    throw InvalidParamsError("mds needs n, ell, delta >= 1");
  }
  if (ell > delta) {
    throw InvalidParamsError("mds needs ell <= delta, got ell = " +
                             std::to_string(ell) + ", delta = " +
                             std::to_string(delta));
  }
  if (static_cast<long long>(n) * ell < delta) {
    throw InvalidParamsError("mds needs n * ell >= delta, got " +
                             std::to_string(n * ell) + " < " +
                             std::to_string(delta));
  }
  const CauchyMatrix cauchy = CauchyMatrix::Generate(n * ell, delta, 0);
  AssignmentPlan plan;
  plan.params = {.n = n, .delta = delta, .ell_u = 0, .ell_c = ell, .r_u = 0,
                 .placement = Placement::kFullyCoded};
  int next_row = 0;
  for (int i = 0; i < n; ++i) {
    std::vector<Task> tasks;
    for (int j = 0; j < ell; ++j) {
      tasks.push_back(Task::Coded(RowToCoeffs(cauchy.row(next_row++), {})));
    }
    plan.workers.push_back(std::move(tasks));
  }
  return plan;
}

namespace {

int Require(int value, const char* flag, SchemeKind kind) {
  if (value < 0) {
    throw InvalidParamsError(std::string(SchemeKindName(kind)) + " needs " +
                             flag);
  }
  return value;
}

}  // namespace

std::optional<SchemeKind> ParseSchemeKind(std::string_view name) {
  for (SchemeKind k : {SchemeKind::kCyclicUncoded,
                       SchemeKind::kCyclicCodedBottom,
                       SchemeKind::kCyclicCodedTop, SchemeKind::kMds}) {
    if (SchemeKindName(k) == name) return k;
  }
  return std::nullopt;
}

std::string_view SchemeKindName(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::kCyclicUncoded:
      return "cyclic-uncoded";
    case SchemeKind::kCyclicCodedBottom:
      return "cyclic-coded-bottom";
    case SchemeKind::kCyclicCodedTop:
      return "cyclic-coded-top";
    case SchemeKind::kMds:
      return "mds";
  }
  return "unknown";
}

AssignmentPlan Design(const DesignRequest& req) {
  switch (req.kind) {
    case SchemeKind::kCyclicUncoded:
      return CyclicUncoded(Require(req.n, "--n", req.kind),
                           Require(req.r, "--r", req.kind));
    case SchemeKind::kCyclicCodedBottom:
    case SchemeKind::kCyclicCodedTop:
      return CyclicCoded(Require(req.n, "--n", req.kind),
                         Require(req.r, "--r_u", req.kind),
                         Require(req.ell_c, "--ell_c", req.kind),
                         req.kind == SchemeKind::kCyclicCodedTop
                             ? Placement::kCodedTop
                             : Placement::kCodedBottom);
    case SchemeKind::kMds:
      return MdsPlan(Require(req.n, "--n", req.kind),
                     Require(req.ell, "--ell", req.kind),
                     Require(req.delta, "--delta", req.kind));
  }
  throw InvalidParamsError("unknown scheme");
}

}  // namespace codedmv
