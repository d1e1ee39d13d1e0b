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


// Command-line front end. RunCli is the whole program minus process
// plumbing, so tests drive it in-process.
//
// Exit codes: 0 success, 1 usage or input error, 2 an oracle result
// contradicts a closed-form value, 3 an exhaustive search exceeded its
// budget.

#ifndef CODEDMV_TOOLS_CLI_H_
#define CODEDMV_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace codedmv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitBudget = 3;

// Environment variable holding the default --budget.
inline constexpr const char* kBudgetEnv = "CODEDMV_BUDGET";

// args excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace codedmv::cli

#endif  // CODEDMV_TOOLS_CLI_H_
