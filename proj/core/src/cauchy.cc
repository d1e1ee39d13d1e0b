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

#include "codedmv/cauchy.h"

#include <string>

#include "codedmv/errors.h"

namespace codedmv {

CauchyMatrix CauchyMatrix::Generate(int rows, int cols, std::uint64_t seed) {
  if (rows < 0 || cols < 0) {
    throw InvalidParamsError("Cauchy dimensions must be non-negative");
  }
  if (static_cast<std::uint64_t>(rows) + cols >= Fp::kModulus) {
    throw InvalidParamsError("Cauchy matrix needs rows + cols < p, got " +
                             std::to_string(rows) + " + " +
                             std::to_string(cols));
  }
  CauchyMatrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  const Fp base(seed);
  for (int i = 0; i < rows; ++i) m.x_.push_back(base + Fp(cols + i));
  for (int j = 0; j < cols; ++j) m.y_.push_back(base + Fp(j));
  m.entries_.reserve(static_cast<std::size_t>(rows) * cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      m.entries_.push_back((m.x_[i] - m.y_[j]).Inverse());
    }
  }
  return m;
}

std::vector<Fp> CauchyMatrix::row(int i) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(i) * cols_,
          entries_.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols_};
}

}  // namespace codedmv
