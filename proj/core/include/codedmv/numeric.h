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

// Real-valued encoding and decoding of block products.
//
// A is split into delta contiguous block rows (balanced: the first
// rows % delta blocks get one extra row). Every block product is carried
// as a vector of the longest block length, shorter blocks padded with
// zeros, so coded combinations of blocks line up row by row.
//
// Field coefficients map to reals through rational reconstruction: the
// Cauchy entry (x_i - y_j)^-1 becomes 1 / (x_i - y_j).

#ifndef CODEDMV_NUMERIC_H_
#define CODEDMV_NUMERIC_H_

#include <span>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "codedmv/equations.h"
#include "codedmv/plan.h"
#include "codedmv/state.h"

namespace codedmv {

using DenseMatrix = Eigen::MatrixXd;
using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

struct BlockRange {
  Eigen::Index begin = 0;
  Eigen::Index end = 0;

  Eigen::Index size() const { return end - begin; }
  friend bool operator==(const BlockRange&, const BlockRange&) = default;
};

// Throws InvalidParamsError when rows < delta or delta < 1.
std::vector<BlockRange> SplitMatrix(Eigen::Index rows, int delta);
// Length of a padded block product, ceil(rows / delta).
Eigen::Index BlockLength(Eigen::Index rows, int delta);

// Real image of a field coefficient. Throws NumericError when the element
// has no small rational preimage.
long double RealCoefficient(Fp value);

// The padded (block length x cols) matrix a worker multiplies for a task.
DenseMatrix EncodeTask(const Task& task, const DenseMatrix& a, int delta);
SparseMatrix EncodeTask(const Task& task, const SparseMatrix& a, int delta);

struct ReceivedProduct {
  int worker = 0;    // 0-based
  int position = 0;  // 0-based row in the worker's list
  Eigen::VectorXd value;
};

// What the workers deliver in a state: the product of every prefix task.
std::vector<ReceivedProduct> ComputeProducts(const AssignmentPlan& plan,
                                             const DenseMatrix& a,
                                             const Eigen::VectorXd& x,
                                             const StateVector& state);
std::vector<ReceivedProduct> ComputeProducts(const AssignmentPlan& plan,
                                             const SparseMatrix& a,
                                             const Eigen::VectorXd& x,
                                             const StateVector& state);

// Equation set of an arbitrary collection of received tasks.
EquationSet ReceivedEquations(const AssignmentPlan& plan,
                              std::span<const ReceivedProduct> received);

// Reconstructs A x (of length rows) from received products.
//
// Known uncoded blocks are copied; duplicates must agree bitwise. The
// remaining blocks come from a square system of coded rows chosen greedily
// (first independent rows over the field) and solved in long double. When
// the chosen system is numerically singular the selection restarts from the
// next coded row.
//
// Throws NotDecodableError when the equations lack full rank over the
// field, and NumericError on inconsistent duplicates or when every
// selection is numerically singular.
Eigen::VectorXd NumericDecode(const AssignmentPlan& plan, Eigen::Index rows,
                              std::span<const ReceivedProduct> received);

}  // namespace codedmv

#endif  // CODEDMV_NUMERIC_H_
