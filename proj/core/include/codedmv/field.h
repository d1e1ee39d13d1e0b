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

// Exact arithmetic over the prime field GF(2^31 - 1).
//
// Every decodability decision in the library is a rank computation over this
// field. Elements are stored in canonical form [0, p).

#ifndef CODEDMV_FIELD_H_
#define CODEDMV_FIELD_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace codedmv {

class Fp {
 public:
  static constexpr std::uint32_t kModulus = 2147483647u;  // 2^31 - 1

  constexpr Fp() = default;
  constexpr explicit Fp(std::uint64_t value)
      : value_(static_cast<std::uint32_t>(value % kModulus)) {}

  // Reduces a signed integer into the field, so FromSigned(-1) == p - 1.
  static constexpr Fp FromSigned(std::int64_t value) {
    std::int64_t r = value % static_cast<std::int64_t>(kModulus);
    if (r < 0) r += kModulus;
    return Fp(static_cast<std::uint64_t>(r));
  }

  // Parses a decimal integer string in [0, p). Throws ParseError otherwise.
  static Fp Parse(std::string_view text);

  constexpr std::uint32_t value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  Fp Pow(std::uint64_t exponent) const;
  // Multiplicative inverse. Throws InvalidParamsError on zero.
  Fp Inverse() const;

  std::string ToString() const { return std::to_string(value_); }

  friend constexpr Fp operator+(Fp a, Fp b) {
    std::uint32_t s = a.value_ + b.value_;
    return FromCanonical(s >= kModulus ? s - kModulus : s);
  }
  friend constexpr Fp operator-(Fp a, Fp b) {
    return FromCanonical(a.value_ >= b.value_ ? a.value_ - b.value_
                                              : a.value_ + kModulus - b.value_);
  }
  friend constexpr Fp operator-(Fp a) { return Fp() - a; }
  friend constexpr Fp operator*(Fp a, Fp b) {
    return Fp(static_cast<std::uint64_t>(a.value_) * b.value_);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.Inverse(); }

  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }

  friend constexpr bool operator==(Fp a, Fp b) = default;
  friend constexpr auto operator<=>(Fp a, Fp b) = default;

  friend std::ostream& operator<<(std::ostream& os, Fp a) {
    return os << a.value_;
  }

 private:
  static constexpr Fp FromCanonical(std::uint32_t v) {
    Fp f;
    f.value_ = v;
    return f;
  }

  std::uint32_t value_ = 0;
};

// A rational a/b with b > 0 and gcd(a, b) = 1.
struct SmallRational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const SmallRational&, const SmallRational&) = default;
};

// Recovers the unique a/b with |a|, b <= sqrt(p/2) whose image in the field
// is `value`, or nullopt when no such pair exists. Integers and unit
// fractions with small denominators (all Cauchy entries used here) round
// trip exactly.
std::optional<SmallRational> ReconstructRational(Fp value);

// Rank of a dense row-major matrix over the field. `rows` is consumed as
// scratch space.
int Rank(std::vector<std::vector<Fp>> rows);

}  // namespace codedmv

#endif  // CODEDMV_FIELD_H_
