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

#ifndef CODEDMV_SRC_JSON_UTIL_H_
#define CODEDMV_SRC_JSON_UTIL_H_

#include "codedmv/plan.h"
#include "json.hpp"

namespace codedmv::internal {

using OrderedJson = nlohmann::ordered_json;

OrderedJson PlanToJsonValue(const AssignmentPlan& plan);
AssignmentPlan PlanFromJsonValue(const nlohmann::json& doc);

// Dumps with two-space indent and a trailing newline.
std::string Dump(const OrderedJson& value);

}  // namespace codedmv::internal

#endif  // CODEDMV_SRC_JSON_UTIL_H_
