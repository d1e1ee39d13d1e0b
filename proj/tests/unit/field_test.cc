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


#include "codedmv/field.h"

#include <numeric>

#include <gtest/gtest.h>

#include "codedmv/errors.h"

namespace codedmv {
namespace {

TEST(FpTest, ArithmeticWrapsAtModulus) {
  const Fp a(Fp::kModulus - 1);
  EXPECT_EQ(a + Fp(1), Fp(0));
  EXPECT_EQ(Fp(0) - Fp(1), a);
  EXPECT_EQ(-Fp(5) + Fp(5), Fp(0));
  EXPECT_EQ(a * a, Fp(1));  // (-1)^2
  EXPECT_EQ(Fp::FromSigned(-1), a);
  EXPECT_EQ(Fp::FromSigned(-static_cast<std::int64_t>(Fp::kModulus)), Fp(0));
  EXPECT_EQ(Fp(Fp::kModulus), Fp(0));
}

TEST(FpTest, InverseAndPow) {
  for (std::uint64_t v : {1ull, 2ull, 3ull, 12ull, 65537ull, 2147483646ull}) {
    EXPECT_EQ(Fp(v) * Fp(v).Inverse(), Fp(1)) << v;
  }
  EXPECT_EQ(Fp(2).Pow(31), Fp(1));  // 2^31 = p + 1
  EXPECT_EQ(Fp(7).Pow(0), Fp(1));
  EXPECT_EQ(Fp(2).Inverse(), Fp(1073741824));
  EXPECT_THROW(Fp(0).Inverse(), InvalidParamsError);
  EXPECT_EQ(Fp(6) / Fp(3), Fp(2));
}

TEST(FpTest, ParseAcceptsOnlyCanonicalDecimals) {
  EXPECT_EQ(Fp::Parse("0"), Fp(0));
  EXPECT_EQ(Fp::Parse("2147483646"), Fp(2147483646));
  EXPECT_THROW(Fp::Parse("2147483647"), ParseError);
  EXPECT_THROW(Fp::Parse("-1"), ParseError);
  EXPECT_THROW(Fp::Parse(""), ParseError);
  EXPECT_THROW(Fp::Parse("12a"), ParseError);
  EXPECT_THROW(Fp::Parse("99999999999999999999"), ParseError);
  EXPECT_EQ(Fp::Parse(Fp(123456).ToString()), Fp(123456));
}

TEST(ReconstructRationalTest, RoundTripsSmallFractions) {
  for (std::int64_t num : {-7, -1, 0, 1, 2, 13, 32000}) {
    for (std::int64_t den : {1, 2, 3, 12, 19, 30000}) {
      const Fp f = Fp::FromSigned(num) / Fp(den);
      const auto r = ReconstructRational(f);
      ASSERT_TRUE(r.has_value()) << num << "/" << den;
      const std::int64_t g = std::gcd(num, den);
      EXPECT_EQ(r->num, num / g);
      EXPECT_EQ(r->den, den / g);
    }
  }
}

TEST(ReconstructRationalTest, RejectsLargeImages) {
  // 2^-1 * 3^-1 * 5^-1 * ... large mixes; 10^9 has no small preimage with
  // both parts below sqrt(p/2) ~ 32768.
  EXPECT_FALSE(ReconstructRational(Fp(1000000000)).has_value());
}

TEST(RankTest, SmallMatrices) {
  EXPECT_EQ(Rank({}), 0);
  EXPECT_EQ(Rank({{Fp(0), Fp(0)}}), 0);
  EXPECT_EQ(Rank({{Fp(1), Fp(2)}, {Fp(2), Fp(4)}}), 1);
  EXPECT_EQ(Rank({{Fp(1), Fp(2)}, {Fp(2), Fp(5)}}), 2);
  // Rank over GF(p) differs from rank over Q when entries alias mod p.
  EXPECT_EQ(Rank({{Fp(1), Fp(1)}, {Fp(1), Fp::FromSigned(1 + Fp::kModulus)}}),
            1);
  EXPECT_EQ(Rank({{Fp(1), Fp(0), Fp(1)},
                  {Fp(0), Fp(1), Fp(1)},
                  {Fp(1), Fp(1), Fp(2)}}),
            2);
}

}  // namespace
}  // namespace codedmv
