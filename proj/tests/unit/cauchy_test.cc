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

#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "codedmv/errors.h"

namespace codedmv {
namespace {

// Leibniz expansion, independent of the elimination in Rank().
Fp Determinant(const std::vector<std::vector<Fp>>& m) {
  const int k = static_cast<int>(m.size());
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Fp det;
  do {
    int inversions = 0;
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) inversions += perm[i] > perm[j];
    }
    Fp term(1);
    for (int i = 0; i < k; ++i) term *= m[i][perm[i]];
    det += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

TEST(CauchyTest, ParametersAndEntries) {
  const CauchyMatrix c = CauchyMatrix::Generate(3, 4, 10);
  ASSERT_EQ(c.rows(), 3);
  ASSERT_EQ(c.cols(), 4);
  EXPECT_EQ(c.x_params()[0], Fp(14));
  EXPECT_EQ(c.y_params()[3], Fp(13));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 4; ++j) {
      EXPECT_EQ(c.entry(i, j) * (c.x_params()[i] - c.y_params()[j]), Fp(1));
    }
    EXPECT_EQ(c.row(i)[2], c.entry(i, 2));
  }
}

TEST(CauchyTest, TwoByTwoDeterminant) {
  // [[1/2, 1], [1/3, 1/2]] has determinant 1/4 - 1/3 = -1/12.
  const CauchyMatrix c = CauchyMatrix::Generate(2, 2, 0);
  EXPECT_EQ(c.entry(0, 0), Fp(2).Inverse());
  EXPECT_EQ(c.entry(0, 1), Fp(1));
  const Fp det = Determinant({c.row(0), c.row(1)});
  EXPECT_EQ(det, -Fp(12).Inverse());
}

TEST(CauchyTest, RejectsBadDimensions) {
  EXPECT_THROW(CauchyMatrix::Generate(-1, 2), InvalidParamsError);
  EXPECT_THROW(CauchyMatrix::Generate(Fp::kModulus, 1), InvalidParamsError);
}

TEST(CauchyTest, SquareSubmatricesAreInvertible) {
  const CauchyMatrix c = CauchyMatrix::Generate(12, 12, 3);
  std::mt19937_64 rng(99);
  std::vector<int> idx(12);
  std::iota(idx.begin(), idx.end(), 0);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 1 + trial % 5;
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<int> rows(idx.begin(), idx.begin() + k);
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<int> cols(idx.begin(), idx.begin() + k);
    std::vector<std::vector<Fp>> sub(k, std::vector<Fp>(k));
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) sub[a][b] = c.entry(rows[a], cols[b]);
    }
    EXPECT_FALSE(Determinant(sub).is_zero());
    EXPECT_EQ(Rank(sub), k);
  }
}

}  // namespace
}  // namespace codedmv
