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


#include "codedmv/numeric.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>

#include "codedmv/errors.h"

namespace codedmv {
namespace {

using LongMatrix =
    Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

// Reciprocal condition numbers below this are treated as singular; long
// double carries about 19 digits and the decode has to hold 1e-9.
constexpr long double kMinRcond = 1e-13L;

std::map<int, Fp> TaskCoefficients(const Task& task) {
  if (task.is_coded()) return task.coeffs();
  return {{task.block(), Fp(1)}};
}

void CheckBlocks(const std::map<int, Fp>& coeffs, int delta) {
  for (const auto& [b, c] : coeffs) {
    if (b < 0 || b >= delta) {
      throw InvalidParamsError("task references block " +
                               std::to_string(b + 1) + " outside 1.." +
                               std::to_string(delta));
    }
  }
}

const Task& TaskAt(const AssignmentPlan& plan, int worker, int position) {
  if (worker < 0 || worker >= static_cast<int>(plan.workers.size())) {
    throw InvalidParamsError("received product from unknown worker " +
                             std::to_string(worker + 1));
  }
  const auto& tasks = plan.workers[worker];
  if (position < 0 || position >= static_cast<int>(tasks.size())) {
    throw InvalidParamsError("worker " + std::to_string(worker + 1) +
                             " has no task at row " +
                             std::to_string(position + 1));
  }
  return tasks[position];
}

template <typename Matrix>
std::vector<ReceivedProduct> ComputeProductsImpl(const AssignmentPlan& plan,
                                                 const Matrix& a,
                                                 const Eigen::VectorXd& x,
                                                 const StateVector& state) {
  if (x.size() != a.cols()) {
    throw InvalidParamsError("vector length " + std::to_string(x.size()) +
                             " does not match matrix columns " +
                             std::to_string(a.cols()));
  }
  state.CheckFits(plan);
  std::vector<ReceivedProduct> out;
  for (int i = 0; i < state.size(); ++i) {
    for (int pos = 0; pos < state[i]; ++pos) {
      const Matrix encoded =
          EncodeTask(plan.workers[i][pos], a, plan.params.delta);
      out.push_back({i, pos, encoded * x});
    }
  }
  return out;
}

}  // namespace

std::vector<BlockRange> SplitMatrix(Eigen::Index rows, int delta) {
  if (delta < 1) {
    throw InvalidParamsError("delta must be positive, got " +
                             std::to_string(delta));
  }
  if (rows < delta) {
    throw InvalidParamsError("cannot split " + std::to_string(rows) +
                             " rows into " + std::to_string(delta) +
                             " blocks");
  }
  const Eigen::Index base = rows / delta;
  const Eigen::Index extra = rows % delta;
  std::vector<BlockRange> ranges;
  ranges.reserve(delta);
  Eigen::Index begin = 0;
  for (int b = 0; b < delta; ++b) {
    const Eigen::Index size = base + (b < extra ? 1 : 0);
    ranges.push_back({begin, begin + size});
    begin += size;
  }
  return ranges;
}

Eigen::Index BlockLength(Eigen::Index rows, int delta) {
  return SplitMatrix(rows, delta).front().size();
}

long double RealCoefficient(Fp value) {
  const auto r = ReconstructRational(value);
  if (!r) {
    throw NumericError("field coefficient " + value.ToString() +
                       " has no small rational preimage");
  }
  return static_cast<long double>(r->num) / static_cast<long double>(r->den);
}

DenseMatrix EncodeTask(const Task& task, const DenseMatrix& a, int delta) {
  const auto ranges = SplitMatrix(a.rows(), delta);
  const auto coeffs = TaskCoefficients(task);
  CheckBlocks(coeffs, delta);
  DenseMatrix out = DenseMatrix::Zero(ranges.front().size(), a.cols());
  if (!task.is_coded()) {
    const BlockRange r = ranges[task.block()];
    out.topRows(r.size()) = a.middleRows(r.begin, r.size());
    return out;
  }
  for (const auto& [b, c] : coeffs) {
    const BlockRange r = ranges[b];
    out.topRows(r.size()) += static_cast<double>(RealCoefficient(c)) *
                             a.middleRows(r.begin, r.size());
  }
  return out;
}

SparseMatrix EncodeTask(const Task& task, const SparseMatrix& a, int delta) {
  const auto ranges = SplitMatrix(a.rows(), delta);
  const auto coeffs = TaskCoefficients(task);
  CheckBlocks(coeffs, delta);
  std::vector<Eigen::Triplet<double>> entries;
  for (const auto& [b, c] : coeffs) {
    const double scale =
        task.is_coded() ? static_cast<double>(RealCoefficient(c)) : 1.0;
    const BlockRange r = ranges[b];
    for (Eigen::Index row = r.begin; row < r.end; ++row) {
      for (SparseMatrix::InnerIterator it(a, row); it; ++it) {
        entries.emplace_back(row - r.begin, it.col(), scale * it.value());
      }
    }
  }
  SparseMatrix out(ranges.front().size(), a.cols());
  out.setFromTriplets(entries.begin(), entries.end());
  return out;
}

std::vector<ReceivedProduct> ComputeProducts(const AssignmentPlan& plan,
                                             const DenseMatrix& a,
                                             const Eigen::VectorXd& x,
                                             const StateVector& state) {
  return ComputeProductsImpl(plan, a, x, state);
}

std::vector<ReceivedProduct> ComputeProducts(const AssignmentPlan& plan,
                                             const SparseMatrix& a,
                                             const Eigen::VectorXd& x,
                                             const StateVector& state) {
  return ComputeProductsImpl(plan, a, x, state);
}

EquationSet ReceivedEquations(const AssignmentPlan& plan,
                              std::span<const ReceivedProduct> received) {
  EquationSet eq;
  for (const ReceivedProduct& p : received) {
    const Task& t = TaskAt(plan, p.worker, p.position);
    if (t.is_coded()) {
      eq.coded.push_back(t.coeffs());
    } else {
      eq.known.insert(t.block());
    }
  }
  return eq;
}

Eigen::VectorXd NumericDecode(const AssignmentPlan& plan, Eigen::Index rows,
                              std::span<const ReceivedProduct> received) {
  const int delta = plan.params.delta;
  const auto ranges = SplitMatrix(rows, delta);
  const Eigen::Index len = ranges.front().size();
  if (!IsDecodable(delta, ReceivedEquations(plan, received))) {
    throw NotDecodableError("received products do not determine all " +
                            std::to_string(delta) + " blocks");
  }

  std::vector<std::optional<Eigen::VectorXd>> blocks(delta);
  std::vector<const ReceivedProduct*> coded;
  for (const ReceivedProduct& p : received) {
    if (p.value.size() != len) {
      throw InvalidParamsError(
          "product from worker " + std::to_string(p.worker + 1) + " has " +
          std::to_string(p.value.size()) + " entries, expected " +
          std::to_string(len));
    }
    const Task& t = TaskAt(plan, p.worker, p.position);
    if (t.is_coded()) {
      coded.push_back(&p);
      continue;
    }
    auto& slot = blocks[t.block()];
    if (!slot) {
      slot = p.value;
    } else if (!(slot->array() == p.value.array()).all()) {
      throw NumericError("copies of block A" + std::to_string(t.block() + 1) +
                         " disagree");
    }
  }

  std::vector<int> unknown;
  for (int b = 0; b < delta; ++b) {
    if (!blocks[b]) unknown.push_back(b);
  }
  const int m = static_cast<int>(unknown.size());
  if (m > 0) {
    auto field_row = [&](const ReceivedProduct* p) {
      const auto& coeffs = TaskAt(plan, p->worker, p->position).coeffs();
      std::vector<Fp> row(m);
      for (int k = 0; k < m; ++k) {
        auto it = coeffs.find(unknown[k]);
        if (it != coeffs.end()) row[k] = it->second;
      }
      return row;
    };

    const int total = static_cast<int>(coded.size());
    long double last_rcond = 0;
    bool solved = false;
    for (int start = 0; start < total && !solved; ++start) {
      std::vector<const ReceivedProduct*> chosen;
      std::vector<std::vector<Fp>> basis;
      for (int k = 0; k < total && static_cast<int>(chosen.size()) < m; ++k) {
        const ReceivedProduct* p = coded[(start + k) % total];
        basis.push_back(field_row(p));
        if (Rank(basis) == static_cast<int>(basis.size())) {
          chosen.push_back(p);
        } else {
          basis.pop_back();
        }
      }
      if (static_cast<int>(chosen.size()) < m) continue;

      LongMatrix system(m, m);
      LongMatrix rhs(m, len);
      for (int r = 0; r < m; ++r) {
        const ReceivedProduct* p = chosen[r];
        const auto& coeffs = TaskAt(plan, p->worker, p->position).coeffs();
        for (int k = 0; k < m; ++k) system(r, k) = 0;
        rhs.row(r) = p->value.cast<long double>().transpose();
        for (const auto& [b, c] : coeffs) {
          const long double v = RealCoefficient(c);
          if (blocks[b]) {
            rhs.row(r) -= v * blocks[b]->cast<long double>().transpose();
          } else {
            const auto pos = std::lower_bound(unknown.begin(), unknown.end(), b);
            system(r, pos - unknown.begin()) = v;
          }
        }
      }
      Eigen::PartialPivLU<LongMatrix> lu(system);
      last_rcond = lu.rcond();
      if (!(last_rcond >= kMinRcond)) continue;
      const LongMatrix solution = lu.solve(rhs);
      for (int k = 0; k < m; ++k) {
        blocks[unknown[k]] = solution.row(k).transpose().cast<double>();
      }
      solved = true;
    }
    if (!solved) {
      std::ostringstream msg;
      msg << "every selected coded system is numerically singular "
          << "(last reciprocal condition estimate " << last_rcond << ")";
      throw NumericError(msg.str());
    }
  }

  Eigen::VectorXd out(rows);
  for (int b = 0; b < delta; ++b) {
    out.segment(ranges[b].begin, ranges[b].size()) =
        blocks[b]->head(ranges[b].size());
  }
  return out;
}

}  // namespace codedmv
