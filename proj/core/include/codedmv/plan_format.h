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

#ifndef CODEDMV_PLAN_FORMAT_H_
#define CODEDMV_PLAN_FORMAT_H_

#include <string>

#include "codedmv/plan.h"

namespace codedmv {

// Text grid with one column per worker and tasks listed top to bottom:
//
//          W1   W2   W3
//   row 1  A1   A2   A3
//   row 2  A2   A3   A1
//
// Coded tasks render as C(i,j,...) over their 1-based support.
std::string RenderGrid(const AssignmentPlan& plan);

// "A3" or "C(1,2,4)".
std::string TaskLabel(const Task& task);

}  // namespace codedmv

#endif  // CODEDMV_PLAN_FORMAT_H_
