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

#include "codedmv/plan_format.h"

#include <algorithm>
#include <sstream>

namespace codedmv {

std::string TaskLabel(const Task& task) {
  if (!task.is_coded()) return "A" + std::to_string(task.block() + 1);
  std::string out = "C(";
  bool first = true;
  for (const auto& [b, c] : task.coeffs()) {
    if (!first) out += ",";
    out += std::to_string(b + 1);
    first = false;
  }
  return out + ")";
}

std::string RenderGrid(const AssignmentPlan& plan) {
  std::size_t rows = 0;
  std::size_t width = 2;
  for (const auto& tasks : plan.workers) {
    rows = std::max(rows, tasks.size());
    for (const Task& t : tasks) width = std::max(width, TaskLabel(t).size());
  }
  width = std::max(width, std::to_string(plan.workers.size()).size() + 1);
  const std::string row_prefix = "row " + std::to_string(rows);

  std::ostringstream os;
  auto cell = [&os, width](const std::string& text) {
    os << "  " << text << std::string(width - text.size(), ' ');
  };
  os << std::string(row_prefix.size(), ' ');
  for (std::size_t i = 0; i < plan.workers.size(); ++i) {
    cell("W" + std::to_string(i + 1));
  }
  os << "\n";
  for (std::size_t r = 0; r < rows; ++r) {
    std::string label = "row " + std::to_string(r + 1);
    os << label << std::string(row_prefix.size() - label.size(), ' ');
    for (const auto& tasks : plan.workers) {
      cell(r < tasks.size() ? TaskLabel(tasks[r]) : "");
    }
    os << "\n";
  }
  // Strip trailing padding so the output diffs cleanly.
  std::string text = os.str();
  std::string out;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + "\n";
  }
  return out;
}

}  // namespace codedmv
