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


#include <benchmark/benchmark.h>

#include "codedmv/equations.h"
#include "codedmv/numeric.h"
#include "codedmv/oracle.h"
#include "codedmv/schemes.h"
#include "codedmv/sim.h"

namespace codedmv {
namespace {

AssignmentPlan TopPlan(int n) {
  return CyclicCoded(n, n / 2, 1, Placement::kCodedTop);
}

void BM_IsDecodable(benchmark::State& state) {
  const AssignmentPlan plan = TopPlan(static_cast<int>(state.range(0)));
  const DecodabilityChecker checker(plan);
  std::vector<int> w;
  for (const auto& tasks : plan.workers) {
    w.push_back(static_cast<int>(tasks.size()) / 2 + 1);
  }
  const StateVector s(w);
  for (auto _ : state) benchmark::DoNotOptimize(checker.IsDecodable(s));
}
BENCHMARK(BM_IsDecodable)->Arg(5)->Arg(10)->Arg(20);

void BM_BruteForceQ(benchmark::State& state) {
  const AssignmentPlan plan = TopPlan(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(BruteForceQ(plan).q_true);
}
BENCHMARK(BM_BruteForceQ)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_RunTrial(benchmark::State& state) {
  const AssignmentPlan plan = TopPlan(static_cast<int>(state.range(0)));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        RunTrial(plan, ShiftedExponential{}, UniformCost{}, seed++));
  }
}
BENCHMARK(BM_RunTrial)->Arg(5)->Arg(10)->Arg(20);

void BM_NumericDecode(benchmark::State& state) {
  const AssignmentPlan plan = MdsPlan(6, 2, 8);
  const DenseMatrix a = DenseMatrix::Random(state.range(0), 100);
  const Eigen::VectorXd x = Eigen::VectorXd::Random(100);
  const auto received =
      ComputeProducts(plan, a, x, StateVector({2, 2, 0, 0, 2, 2}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(NumericDecode(plan, a.rows(), received));
  }
}
BENCHMARK(BM_NumericDecode)->Arg(200)->Arg(2000);

}  // namespace
}  // namespace codedmv

BENCHMARK_MAIN();
