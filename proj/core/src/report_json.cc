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

#include "codedmv/plan_json.h"
#include "json_util.h"

namespace codedmv {

std::string BoundReportToJson(const BoundReport& report) {
  internal::OrderedJson doc;
  doc["q_lower"] = report.q_lower;
  doc["q_exact"] = report.q_exact ? internal::OrderedJson(*report.q_exact)
                                  : internal::OrderedJson(nullptr);
  doc["resilience"] = report.resilience;
  if (report.witness) {
    doc["witness"] = {{"x", report.witness->x},
                      {"beta", report.witness->beta}};
  } else {
    doc["witness"] = nullptr;
  }
  return internal::Dump(doc);
}

std::string OracleReportToJson(const OracleReport& report) {
  internal::OrderedJson doc;
  doc["q_true"] = report.q_true;
  doc["worst_state"] = report.worst_state.counts();
  doc["resilience_true"] = report.resilience_true;
  internal::OrderedJson set = internal::OrderedJson::array();
  for (int w : report.worst_straggler_set) set.push_back(w + 1);
  doc["worst_straggler_set"] = std::move(set);
  return internal::Dump(doc);
}

}  // namespace codedmv
