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

// Closed-form recovery thresholds and straggler resilience.
//
// Everything here is exact: binomials are big integers, ratios are exact
// rationals, and a fractional lower bound on a block count is rounded up.

#ifndef CODEDMV_BOUNDS_H_
#define CODEDMV_BOUNDS_H_

#include <optional>

#include "codedmv/params.h"

namespace codedmv {

// Maximizer of the coded-at-top program: `x` coded rows from workers that
// stop after their coded part, plus `beta` workers that finish everything.
struct BoundWitness {
  int x = 0;
  int beta = 0;

  friend bool operator==(const BoundWitness&, const BoundWitness&) = default;
};

struct BoundReport {
  int q_lower = 0;               // never below delta
  std::optional<int> q_exact;    // set when a matching construction exists
  int resilience = 0;            // stragglers tolerated by the construction
  std::optional<BoundWitness> witness;
};

BigInt Binomial(int n, int k);
// Smallest integer >= value.
BigInt Ceil(const Rational& value);
// Largest integer <= value.
BigInt Floor(const Rational& value);

// max(delta, ceil(delta * r - r * (l + 1) / 2 + 1)) for an uncoded system.
// Requires valid params with placement kUncodedOnly.
int UncodedQBound(const SystemParams& params);

// r - 1. Requires r >= 1.
int UncodedResilience(int r);

// max(delta, ceil(delta * r_u - r_u * (l_u + 1) / 2 + 1)) for the cyclic
// coded-at-bottom system. Requires placement kCodedBottom and delta = n.
int CodedBottomQ(const SystemParams& params);

// floor((n^2 g_c + n g_u - 1) / (n g_c + 1)) with g_u, g_c the storage
// fractions. Requires placement kCodedBottom or kCodedTop and delta = n.
// Matches the cyclic constructions when r_u >= 1.
int CodedBottomResilience(const SystemParams& params);

// delta * C(n - r_u, beta) / C(n, beta).
Rational TopFeasibilityLimit(int n, int r_u, int delta, int beta);

// Lower bound on the coded-at-top threshold: the largest x + l*beta + 1
// over integers 0 <= beta <= n - r_u, 0 <= x <= n*l_c - l_c*beta with
// x + l_c*beta < TopFeasibilityLimit, floored at delta. Ties keep the
// smallest beta, then the smallest x. Requires placement kCodedTop,
// delta = n and r_u >= 1.
BoundReport CodedTopQBound(const SystemParams& params);

// Dispatches on placement. Coded placements require delta = n.
BoundReport EvaluateBounds(const SystemParams& params);

}  // namespace codedmv

#endif  // CODEDMV_BOUNDS_H_
