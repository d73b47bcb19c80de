// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPMAT_SRC_BITS_INTERNAL_H_
#define SPMAT_SRC_BITS_INTERNAL_H_

#include <algorithm>
#include <cstdint>
#include <span>

#include "spmat/element_set.h"

namespace spmat::internal {

// Calls fn(mask) for every k-subset of [n] in increasing mask order, which
// is colex order. Gosper's hack; n < 64.
template <typename Fn>
void for_each_k_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(uint64_t{0});
    return;
  }
  const uint64_t limit = uint64_t{1} << n;
  uint64_t s = (uint64_t{1} << k) - 1;
  while (s < limit) {
    fn(s);
    uint64_t c = s & -s;
    uint64_t rr = s + c;
    if (rr == 0) break;
    s = (((rr ^ s) >> 2) / c) | rr;
  }
}

inline bool contains_sorted(std::span<const uint64_t> sorted, uint64_t v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

// Removes bit e-1 and shifts the higher bits down by one.
inline uint64_t squeeze_out(uint64_t bits, int e) {
  uint64_t low = bits & ((uint64_t{1} << (e - 1)) - 1);
  uint64_t high = (bits >> e) << (e - 1);
  return low | high;
}

}  // namespace spmat::internal

#endif  // SPMAT_SRC_BITS_INTERNAL_H_
