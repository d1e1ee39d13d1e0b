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

#include "codedmv/plan.h"

#include <algorithm>
#include <set>
#include <sstream>

namespace codedmv {
namespace {

template <typename... Parts>
std::string Concat(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

}  // namespace

bool ValidationReport::Has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::ToString() const {
  if (ok()) return "ok";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "\n";
    out += v.message;
  }
  return out;
}

ValidationReport ValidatePlan(const AssignmentPlan& plan) {
  ValidationReport report;
  auto add = [&report](ViolationKind kind, int worker, int block,
                       std::string message) {
    report.violations.push_back({kind, worker, block, std::move(message)});
  };

  const SystemParams& p = plan.params;
  for (auto& msg : p.Violations()) add(ViolationKind::kParams, -1, -1, msg);

  if (static_cast<int>(plan.workers.size()) != p.n) {
    add(ViolationKind::kWorkerCount, -1, -1,
        Concat("plan has ", plan.workers.size(), " workers, params say n = ",
               p.n));
  }

  std::vector<int> replication(std::max(p.delta, 0), 0);
  for (std::size_t wi = 0; wi < plan.workers.size(); ++wi) {
    const int w = static_cast<int>(wi);
    const auto& tasks = plan.workers[wi];
    if (static_cast<int>(tasks.size()) != p.ell()) {
      add(ViolationKind::kWorkerLength, w, -1,
          Concat("worker ", w + 1, " holds ", tasks.size(),
                 " tasks, expected ell = ", p.ell()));
    }

    std::set<int> seen;
    int uncoded = 0, coded = 0;
    for (std::size_t pos = 0; pos < tasks.size(); ++pos) {
      const Task& t = tasks[pos];
      if (!t.is_coded()) {
        ++uncoded;
        const int b = t.block();
        if (b < 0 || b >= p.delta) {
          add(ViolationKind::kBlockOutOfRange, w, b,
              Concat("worker ", w + 1, " references block ", b + 1,
                     " outside 1..", p.delta));
          continue;
        }
        if (!seen.insert(b).second) {
          add(ViolationKind::kDuplicateUncoded, w, b,
              Concat("duplicate uncoded block A", b + 1, " on worker ", w + 1));
          continue;
        }
        ++replication[b];  // distinct workers holding b
        continue;
      }
      ++coded;
      if (t.coeffs().empty()) {
        add(ViolationKind::kEmptyCoded, w, -1,
            Concat("worker ", w + 1, " has an empty coded task at row ",
                   pos + 1));
      }
      for (const auto& [b, c] : t.coeffs()) {
        if (b < 0 || b >= p.delta) {
          add(ViolationKind::kBlockOutOfRange, w, b,
              Concat("coded task on worker ", w + 1, " references block ",
                     b + 1, " outside 1..", p.delta));
        }
        if (c.is_zero()) {
          add(ViolationKind::kZeroCoefficient, w, b,
              Concat("coded task on worker ", w + 1,
                     " stores a zero coefficient for block ", b + 1));
        }
      }
    }

    if (uncoded != p.ell_u || coded != p.ell_c) {
      add(ViolationKind::kTaskMix, w, -1,
          Concat("worker ", w + 1, " holds ", uncoded, " uncoded and ", coded,
                 " coded tasks, expected ", p.ell_u, " and ", p.ell_c));
      continue;
    }
    // Coded rows must form one contiguous run at the bottom or top.
    for (std::size_t pos = 0; pos < tasks.size(); ++pos) {
      bool want_coded = false;
      switch (p.placement) {
        case Placement::kUncodedOnly: want_coded = false; break;
        case Placement::kFullyCoded: want_coded = true; break;
        case Placement::kCodedBottom:
          want_coded = static_cast<int>(pos) >= p.ell_u;
          break;
        case Placement::kCodedTop:
          want_coded = static_cast<int>(pos) < p.ell_c;
          break;
      }
      if (tasks[pos].is_coded() != want_coded) {
        add(ViolationKind::kPlacementOrder, w, -1,
            Concat("worker ", w + 1, " row ", pos + 1, " should be ",
                   want_coded ? "coded" : "uncoded", " under ",
                   PlacementName(p.placement), " placement"));
        break;
      }
    }
  }

  if (p.r_u > 0) {
    for (int b = 0; b < p.delta; ++b) {
      if (replication[b] != p.r_u) {
        add(ViolationKind::kReplicationCount, -1, b,
            Concat("replication count of block A", b + 1, " is ",
                   replication[b], ", expected r_u = ", p.r_u));
      }
    }
  }
  return report;
}

}  // namespace codedmv
