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

#ifndef CODEDMV_ORACLE_INL_H_
#define CODEDMV_ORACLE_INL_H_

#include <algorithm>
#include <numeric>
#include <vector>

namespace codedmv {
namespace internal {

template <typename Visit>
bool LevelRecurse(const std::vector<int>& ell, const std::vector<int>& suffix,
                  std::size_t i, int remaining, std::vector<int>& w,
                  Visit& visit) {
  if (i == ell.size()) {
    return remaining == 0 ? static_cast<bool>(visit(StateVector(w))) : true;
  }
  // What the workers after i can still absorb.
  const int rest = suffix[i + 1];
  const int hi = std::min(ell[i], remaining);
  const int lo = std::max(0, remaining - rest);
  for (int v = hi; v >= lo; --v) {
    w[i] = v;
    if (!LevelRecurse(ell, suffix, i + 1, remaining - v, w, visit)) {
      return false;
    }
  }
  return true;
}

}  // namespace internal

template <typename Visit>
bool ForEachStateAtLevel(const std::vector<int>& ell, int total,
                         Visit&& visit) {
  std::vector<int> suffix(ell.size() + 1, 0);
  for (std::size_t i = ell.size(); i-- > 0;) suffix[i] = suffix[i + 1] + ell[i];
  if (total < 0 || total > suffix[0]) return true;
  std::vector<int> w(ell.size(), 0);
  return internal::LevelRecurse(ell, suffix, 0, total, w, visit);
}

}  // namespace codedmv

#endif  // CODEDMV_ORACLE_INL_H_
