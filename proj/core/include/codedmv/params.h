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

#ifndef CODEDMV_PARAMS_H_
#define CODEDMV_PARAMS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace codedmv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Where a worker's coded rows sit in its top-to-bottom processing order.
enum class Placement {
  kUncodedOnly,
  kCodedBottom,
  kCodedTop,
  kFullyCoded,
};

// "uncoded_only", "coded_bottom", "coded_top", "fully_coded".
std::string_view PlacementName(Placement placement);
std::optional<Placement> ParsePlacement(std::string_view name);

// The system tuple <n, l_u, l_c, Delta, r_u> plus placement.
//
// n workers each store l = l_u + l_c block rows of a matrix split into
// `delta` blocks; each uncoded block is replicated on r_u workers.
struct SystemParams {
  int n = 0;
  int delta = 0;
  int ell_u = 0;
  int ell_c = 0;
  int r_u = 0;
  Placement placement = Placement::kUncodedOnly;

  int ell() const { return ell_u + ell_c; }

  // Storage fractions l/Delta, l_u/Delta, l_c/Delta.
  Rational gamma() const;
  Rational gamma_u() const;
  Rational gamma_c() const;

  // Human-readable descriptions of every violated invariant; empty if valid.
  std::vector<std::string> Violations() const;
  bool IsValid() const { return Violations().empty(); }
  // Throws InvalidParamsError listing the violations.
  void Check() const;

  friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

}  // namespace codedmv

#endif  // CODEDMV_PARAMS_H_
