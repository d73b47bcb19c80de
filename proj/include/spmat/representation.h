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

#ifndef SPMAT_REPRESENTATION_H_
#define SPMAT_REPRESENTATION_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "spmat/element_set.h"
#include "spmat/matroid.h"

namespace spmat {

// |∩W| <= r - |W| for every subfamily W with |W| >= 2.
bool hall_condition(std::span<const ElementSet> nonbases, int r);

// Row i (1 <= i <= t) vanishes exactly on the i-th nonbasis; rows t+1..r
// have no prescribed zeros.
struct ZeroPattern {
  int r = 0;
  int n = 0;
  std::vector<ElementSet> zero_rows;

  bool is_zero(int row, int element) const {
    return row <= static_cast<int>(zero_rows.size()) &&
           zero_rows[row - 1].contains(element);
  }
};

ZeroPattern build_pattern(std::span<const ElementSet> nonbases, int r, int n);

class GenericMatrix {
 public:
  GenericMatrix(ZeroPattern pattern, std::vector<mpz_class> entries);

  int rows() const { return pattern_.r; }
  int cols() const { return pattern_.n; }
  const ZeroPattern& pattern() const { return pattern_; }
  // 1-based row and element.
  const mpz_class& at(int row, int element) const {
    return entries_[static_cast<size_t>(row - 1) * pattern_.n + element - 1];
  }
  const std::vector<mpz_class>& entries() const { return entries_; }

  // Square submatrix on the columns of s (|s| = rows()), columns ascending.
  std::vector<mpz_class> columns(const ElementSet& s) const;

 private:
  ZeroPattern pattern_;
  std::vector<mpz_class> entries_;
};

// Nonzero entries uniform in [1, 2^bit_width); deterministic in seed.
GenericMatrix instantiate(const ZeroPattern& pattern, uint64_t seed,
                          int bit_width);

// Fraction-free elimination; `m` is size x size row-major.
mpz_class bareiss_determinant(std::vector<mpz_class> m, int size);

// For every r-subset S: det A[S] != 0 iff S is a basis of m.
bool verify_represents(const GenericMatrix& a, const BasisMatroid& m);
// First r-subset where the two sides disagree.
std::optional<ElementSet> find_representation_mismatch(const GenericMatrix& a,
                                                       const BasisMatroid& m);

// Perfect matching between rows and the columns of b over nonzero positions.
bool matching_exists(const ZeroPattern& pattern, const ElementSet& b);

struct RepresentationResult {
  bool hall = false;  // false: no attempt was made
  bool success = false;
  uint64_t seed = 0;  // seed of the successful attempt, else the last tried
  int attempts = 0;
  int bit_width = 0;
  std::optional<GenericMatrix> matrix;
};

// build_pattern + instantiate + verify_represents with seeds seed,
// seed + 1, ... up to `attempts` tries.
RepresentationResult represent(const BasisMatroid& m, uint64_t seed,
                               int bit_width = 64, int attempts = 3);

}  // namespace spmat

#endif  // SPMAT_REPRESENTATION_H_
