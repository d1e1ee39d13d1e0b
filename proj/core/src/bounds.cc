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

#include "codedmv/bounds.h"

#include <algorithm>
#include <string>

#include "codedmv/errors.h"

namespace codedmv {
namespace {

void RequirePlacement(const SystemParams& p, Placement want, const char* op) {
  p.Check();
  if (p.placement != want) {
    throw InvalidParamsError(std::string(op) + " requires " +
                             std::string(PlacementName(want)) +
                             " placement, got " +
                             std::string(PlacementName(p.placement)));
  }
}

void RequireSquare(const SystemParams& p, const char* op) {
  if (p.delta != p.n) {
    throw InvalidParamsError(std::string(op) + " requires delta = n, got n = " +
                             std::to_string(p.n) + ", delta = " +
                             std::to_string(p.delta));
  }
}

int ToInt(const BigInt& v) { return v.convert_to<int>(); }

// max(delta, ceil(delta * r - r * (l + 1) / 2 + 1)).
int ReplicationBound(int delta, int r, int ell) {
  const Rational value = Rational(delta) * r - Rational(r * (ell + 1), 2) + 1;
  return std::max(delta, ToInt(Ceil(value)));
}

// Stragglers an (n * l, delta)-MDS-like layout tolerates: any delta rows
// decode, so n - s workers must hold at least delta rows.
int MdsResilience(int n, int ell, int delta) {
  return n - (delta + ell - 1) / ell;
}

}  // namespace

BigInt Binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt Floor(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  BigInt q = num / den;  // truncates toward zero
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

BigInt Ceil(const Rational& value) { return -Floor(-value); }

int UncodedQBound(const SystemParams& params) {
  RequirePlacement(params, Placement::kUncodedOnly, "uncoded_q_bound");
  return ReplicationBound(params.delta, params.r_u, params.ell());
}

int UncodedResilience(int r) {
  if (r < 1) {
    throw InvalidParamsError("uncoded_resilience requires r >= 1, got " +
                             std::to_string(r));
  }
  return r - 1;
}

int CodedBottomQ(const SystemParams& params) {
  RequirePlacement(params, Placement::kCodedBottom, "coded_bottom_q");
  RequireSquare(params, "coded_bottom_q");
  return ReplicationBound(params.delta, params.r_u, params.ell_u);
}

int CodedBottomResilience(const SystemParams& params) {
  params.Check();
  if (params.placement != Placement::kCodedBottom &&
      params.placement != Placement::kCodedTop) {
    throw InvalidParamsError(
        "coded_bottom_resilience requires coded_bottom or coded_top "
        "placement, got " + std::string(PlacementName(params.placement)));
  }
  RequireSquare(params, "coded_bottom_resilience");
  const Rational n(params.n);
  const Rational value = (n * n * params.gamma_c() + n * params.gamma_u() - 1) /
                         (n * params.gamma_c() + 1);
  return ToInt(Floor(value));
}

Rational TopFeasibilityLimit(int n, int r_u, int delta, int beta) {
  return Rational(BigInt(delta) * Binomial(n - r_u, beta), Binomial(n, beta));
}

BoundReport CodedTopQBound(const SystemParams& params) {
  RequirePlacement(params, Placement::kCodedTop, "coded_top_q_bound");
  RequireSquare(params, "coded_top_q_bound");
  if (params.r_u < 1) {
    throw InvalidParamsError("coded_top_q_bound requires r_u >= 1");
  }
  const int n = params.n;
  const int ell = params.ell();
  const int ell_c = params.ell_c;

  int best = -1;
  BoundWitness witness;
  for (int beta = 0; beta <= n - params.r_u; ++beta) {
    const Rational limit = TopFeasibilityLimit(n, params.r_u, params.delta,
                                               beta);
    for (int x = 0; x <= n * ell_c - ell_c * beta; ++x) {
      if (!(Rational(x + ell_c * beta) < limit)) break;
      const int objective = x + ell * beta + 1;
      if (objective > best) {
        best = objective;
        witness = {x, beta};
      }
    }
  }

  BoundReport report;
  report.q_lower = std::max(params.delta, best);
  report.resilience = CodedBottomResilience(params);
  report.witness = witness;
  return report;
}

BoundReport EvaluateBounds(const SystemParams& params) {
  params.Check();
  BoundReport report;
  switch (params.placement) {
    case Placement::kUncodedOnly:
      report.q_lower = UncodedQBound(params);
      if (params.delta == params.n && params.ell_u == params.r_u) {
        report.q_exact = report.q_lower;
      }
      report.resilience = UncodedResilience(params.r_u);
      return report;
    case Placement::kFullyCoded:
      report.q_lower = params.delta;
      report.q_exact = params.delta;
      report.resilience = MdsResilience(params.n, params.ell(), params.delta);
      return report;
    case Placement::kCodedBottom:
    case Placement::kCodedTop:
      break;
  }
  RequireSquare(params, "bounds for coded placements");
  if (params.r_u == 0) {
    // Every row is a full Cauchy row: the layout is MDS.
    report.q_lower = params.delta;
    report.q_exact = params.delta;
    report.resilience = MdsResilience(params.n, params.ell(), params.delta);
    return report;
  }
  if (params.placement == Placement::kCodedTop) return CodedTopQBound(params);
  report.q_lower = CodedBottomQ(params);
  report.q_exact = report.q_lower;
  report.resilience = CodedBottomResilience(params);
  return report;
}

}  // namespace codedmv
