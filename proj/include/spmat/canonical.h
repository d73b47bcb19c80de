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

#ifndef SPMAT_CANONICAL_H_
#define SPMAT_CANONICAL_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spmat/matroid.h"

namespace spmat {

inline constexpr int kMaxCanonicalN = 12;

// Isomorphism-invariant code of a rank-r matroid on [n]: the
// lexicographically least colex-indexed basis indicator (bit i = 1 iff the
// r-subset of colex rank i is a basis) over all relabellings of [n].
// `bytes` packs that bit array most-significant-bit first, so comparing
// codes bytewise compares the bit arrays.
struct CanonicalForm {
  int n = 0;
  int r = 0;
  std::string bytes;

  std::string to_hex() const;
  static CanonicalForm from_hex(std::string_view hex, int n, int r);

  // Colex ranks of the nonbases of the canonical representative, ascending.
  std::vector<uint64_t> nonbasis_ranks() const;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    if (a.n != b.n) return a.n <=> b.n;
    if (a.r != b.r) return a.r <=> b.r;
    return a.bytes <=> b.bytes;
  }
};

// Result of the minimal-image search on a nonbasis family.
struct CanonicalLabelling {
  // Ascending colex ranks of the relabelled nonbases; this sequence is the
  // lexicographic minimum over all n! relabellings.
  std::vector<uint64_t> ranks;
  // perm[e - 1] = new label of old element e, for one optimal relabelling.
  std::vector<int> perm;
};

// Branch-and-bound minimal image. `nonbases` are r-subsets of [n]; n <= 12.
CanonicalLabelling canonical_labelling(int n, int r,
                                       std::span<const uint64_t> nonbases);

CanonicalForm canonical_form(const BasisMatroid& m);
CanonicalForm canonical_form(const SparsePavingMatroid& m);
CanonicalForm canonical_form_from_ranks(int n, int r,
                                        std::span<const uint64_t> ranks);

bool is_isomorphic(const BasisMatroid& a, const BasisMatroid& b);
bool is_isomorphic(const SparsePavingMatroid& a, const SparsePavingMatroid& b);

// Sparse paving matroid regenerated from a code. Throws InvalidArgument if
// the code's nonbases are not a stable set.
SparsePavingMatroid sparse_paving_from_code(const CanonicalForm& code);

}  // namespace spmat

#endif  // SPMAT_CANONICAL_H_
