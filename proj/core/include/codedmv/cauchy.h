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

#ifndef CODEDMV_CAUCHY_H_
#define CODEDMV_CAUCHY_H_

#include <cstdint>
#include <vector>

#include "codedmv/field.h"

namespace codedmv {

// entry(i, j) = (x_i - y_j)^-1 over GF(p) with pairwise distinct
// parameters, so every square submatrix is invertible.
class CauchyMatrix {
 public:
  // x_i = seed + cols + i, y_j = seed + j (mod p). Throws InvalidParamsError
  // when rows + cols >= p or either dimension is negative.
  static CauchyMatrix Generate(int rows, int cols, std::uint64_t seed = 0);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<Fp>& x_params() const { return x_; }
  const std::vector<Fp>& y_params() const { return y_; }

  Fp entry(int i, int j) const { return entries_[i * cols_ + j]; }
  std::vector<Fp> row(int i) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Fp> x_;
  std::vector<Fp> y_;
  std::vector<Fp> entries_;
};

}  // namespace codedmv

#endif  // CODEDMV_CAUCHY_H_
