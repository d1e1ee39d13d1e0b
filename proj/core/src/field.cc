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

#include <charconv>
#include <cmath>
#include <utility>

#include "codedmv/errors.h"

namespace codedmv {

Fp Fp::Parse(std::string_view text) {
  std::uint64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc() || ptr != last || v >= kModulus) {
    throw ParseError("not a field element in [0, 2^31 - 1): '" +
                     std::string(text) + "'");
  }
  return Fp(v);
}

Fp Fp::Pow(std::uint64_t exponent) const {
  Fp result(1);
  Fp base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

Fp Fp::Inverse() const {
  if (is_zero()) throw InvalidParamsError("inverse of zero in GF(p)");
  return Pow(kModulus - 2);
}

std::optional<SmallRational> ReconstructRational(Fp value) {
  // Half-extended Euclid on (p, v); stop once the remainder drops below the
  // bound. Then r = t * v (mod p) with |r|, |t| <= bound.
  const std::int64_t p = Fp::kModulus;
  const auto bound = static_cast<std::int64_t>(std::sqrt(p / 2.0));
  std::int64_t r0 = p, r1 = value.value();
  std::int64_t t0 = 0, t1 = 1;
  while (r1 > bound) {
    std::int64_t q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (t1 == 0 || std::llabs(t1) > bound) return std::nullopt;
  std::int64_t num = r1, den = t1;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t a = std::llabs(num), b = den;
  while (b != 0) a = std::exchange(b, a % b);
  if (a != 1) return std::nullopt;
  return SmallRational{num, den};
}

int Rank(std::vector<std::vector<Fp>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Fp inv = rows[rank][c].Inverse();
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      const Fp factor = rows[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) {
        rows[r][k] -= factor * rows[rank][k];
      }
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace codedmv
