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

#include "codedmv/params.h"

#include <array>
#include <sstream>
#include <utility>

#include "codedmv/errors.h"

namespace codedmv {
namespace {

constexpr std::array<std::pair<Placement, std::string_view>, 4> kNames = {{
    {Placement::kUncodedOnly, "uncoded_only"},
    {Placement::kCodedBottom, "coded_bottom"},
    {Placement::kCodedTop, "coded_top"},
    {Placement::kFullyCoded, "fully_coded"},
}};

}  // namespace

std::string_view PlacementName(Placement placement) {
  for (const auto& [p, name] : kNames) {
    if (p == placement) return name;
  }
  return "unknown";
}

std::optional<Placement> ParsePlacement(std::string_view name) {
  for (const auto& [p, n] : kNames) {
    if (n == name) return p;
  }
  return std::nullopt;
}

Rational SystemParams::gamma() const { return Rational(ell(), delta); }
Rational SystemParams::gamma_u() const { return Rational(ell_u, delta); }
Rational SystemParams::gamma_c() const { return Rational(ell_c, delta); }

std::vector<std::string> SystemParams::Violations() const {
  std::vector<std::string> out;
  auto fail = [&out](auto&&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    out.push_back(os.str());
  };
  if (n < 1) fail("n must be positive, got ", n);
  if (delta < 1) fail("delta must be positive, got ", delta);
  if (ell_u < 0 || ell_c < 0 || r_u < 0) {
    fail("ell_u, ell_c, r_u must be non-negative");
  }
  if (ell() < 1) fail("each worker must store at least one row");
  if (delta >= 1 && ell() > delta) {
    fail("ell = ", ell(), " exceeds delta = ", delta);
  }
  if (static_cast<long long>(n) * ell_u !=
      static_cast<long long>(delta) * r_u) {
    fail("n * ell_u = ", static_cast<long long>(n) * ell_u,
         " differs from delta * r_u = ", static_cast<long long>(delta) * r_u);
  }
  if (r_u > n) fail("r_u = ", r_u, " exceeds n = ", n);
  switch (placement) {
    case Placement::kUncodedOnly:
      if (ell_c != 0) fail("uncoded_only placement requires ell_c = 0");
      break;
    case Placement::kFullyCoded:
      if (ell_u != 0 || r_u != 0) {
        fail("fully_coded placement requires ell_u = 0 and r_u = 0");
      }
      break;
    case Placement::kCodedBottom:
    case Placement::kCodedTop:
      break;
  }
  return out;
}

void SystemParams::Check() const {
  auto violations = Violations();
  if (violations.empty()) return;
  std::string msg = "invalid system parameters:";
  for (const auto& v : violations) msg += " " + v + ";";
  throw InvalidParamsError(msg);
}

}  // namespace codedmv
