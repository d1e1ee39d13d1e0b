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


// Simulation experiment described as a JSON document:
//
//   {"trials": 1000, "seed": 7,
//    "plans": [{"id": "uncoded", "path": "uncoded.json"},
//              {"id": "top", "plan": {...inline plan...}},
//              {"id": "bottom", "scheme": "cyclic-coded-bottom",
//               "n": 5, "r_u": 2, "ell_c": 1}],
//    "speed": {"model": "shifted_exponential", "shift": 1, "rate": 1,
//              "multipliers": [1, 1, 0.2, 1, 1]},
//    "cost": {"model": "uniform"}}
//
// Speed models: shifted_exponential, deterministic ("block_times": number,
// per-worker list, or list of lists), halt_after ("stragglers" 1-based,
// "blocks_before_halt", "block_time"). Cost models: uniform, sparsity_aware
// ("block_nnz" + optional "block_capacity", or "matrix": a Matrix Market
// path). Relative paths resolve against the config file's directory.

#ifndef CODEDMV_EXPERIMENT_CONFIG_H_
#define CODEDMV_EXPERIMENT_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "codedmv/plan.h"
#include "codedmv/sim.h"

namespace codedmv {

struct ExperimentConfig {
  std::vector<std::string> plan_ids;
  std::vector<AssignmentPlan> plans;
  SpeedModel speed = ShiftedExponential{};
  CostModel cost = UniformCost{};
  int trials = 1000;
  std::uint64_t seed = 0;
};

// Throws ParseError on malformed documents and InvalidParamsError when a
// referenced plan or model is invalid.
ExperimentConfig ParseExperimentConfig(std::string_view text,
                                       const std::filesystem::path& base_dir);
ExperimentConfig ReadExperimentConfig(const std::filesystem::path& path);

}  // namespace codedmv

#endif  // CODEDMV_EXPERIMENT_CONFIG_H_
