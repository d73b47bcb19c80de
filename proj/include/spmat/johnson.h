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

#ifndef SPMAT_JOHNSON_H_
#define SPMAT_JOHNSON_H_

#include <cstdint>
#include <span>
#include <vector>

#include "spmat/element_set.h"

namespace spmat {

// Exact binomial coefficient; throws ScaleLimitExceeded on uint64 overflow.
uint64_t binomial(int n, int k);

// Position of an r-subset of [n] in colexicographic order.
struct RSubsetIndex {
  uint64_t rank = 0;
  int n = 0;
  int r = 0;

  friend bool operator==(const RSubsetIndex&, const RSubsetIndex&) = default;
};

struct JohnsonParams {
  int n = 0;
  int r = 0;
  uint64_t vertices = 0;  // C(n, r)
  uint64_t valency = 0;   // r (n - r)
};

RSubsetIndex colex_rank(const ElementSet& s, int r);
ElementSet colex_unrank(const RSubsetIndex& index);
ElementSet colex_unrank(uint64_t rank, int n, int r);

// Mask-level variants used on hot paths; no validation.
uint64_t colex_rank_bits(uint64_t bits);
uint64_t colex_unrank_bits(uint64_t rank, int r);

bool johnson_adjacent(const ElementSet& x, const ElementSet& y, int r);
JohnsonParams johnson_params(int n, int r);

// True iff no two distinct members meet in exactly r - 1 elements.
bool is_stable(std::span<const ElementSet> family, int r);

// Same test on raw masks; members are assumed to have size r.
bool is_stable_bits(std::span<const uint64_t> family, int r);

// The Johnson graph J(n, r) with vertices indexed by colex rank and
// neighbourhoods stored as bit rows. Intended for C(n, r) up to a few
// tens of thousands.
class JohnsonGraph {
 public:
  JohnsonGraph(int n, int r);

  int n() const { return n_; }
  int r() const { return r_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int words() const { return words_; }

  uint64_t vertex(int v) const { return vertices_[v]; }
  std::span<const uint64_t> vertices() const { return vertices_; }

  // Row of `words()` 64-bit words; bit u set iff u ~ v.
  std::span<const uint64_t> neighbours(int v) const {
    return {adjacency_.data() + static_cast<size_t>(v) * words_,
            static_cast<size_t>(words_)};
  }
  bool adjacent(int u, int v) const {
    return (adjacency_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64)) &
           1u;
  }

 private:
  int n_;
  int r_;
  int words_;
  std::vector<uint64_t> vertices_;
  std::vector<uint64_t> adjacency_;
};

}  // namespace spmat

#endif  // SPMAT_JOHNSON_H_
