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

#include "spmat/representation.h"

#include <bit>
#include <functional>
#include <string>
#include <utility>

#include "bits_internal.h"
#include "spmat/errors.h"
#include "spmat/rng.h"

namespace spmat {

bool hall_condition(std::span<const ElementSet> nonbases, int r) {
  for (const ElementSet& x : nonbases) {
    if (x.size() != r) {
      throw InvalidArgument("nonbasis " + x.to_string() + " has size " +
                            std::to_string(x.size()) + ", expected " +
                            std::to_string(r));
    }
  }
  const int t = static_cast<int>(nonbases.size());
  if (t < 2) return true;
  // The whole family already fails once t > r.
  if (t > r) return false;
  for (uint64_t w = 1; w < (uint64_t{1} << t); ++w) {
    const int size = std::popcount(w);
    if (size < 2) continue;
    uint64_t common = ~uint64_t{0};
    for (uint64_t b = w; b != 0; b &= b - 1) {
      common &= nonbases[std::countr_zero(b)].bits();
    }
    if (std::popcount(common) > r - size) return false;
  }
  return true;
}

ZeroPattern build_pattern(std::span<const ElementSet> nonbases, int r, int n) {
  if (r < 0 || n < r || n > kMaxGroundSet) throw InvalidArgument("invalid (n, r)");
  if (!hall_condition(nonbases, r)) {
    throw InvalidArgument("nonbases violate the Hall condition");
  }
  ZeroPattern pattern{r, n, {}};
  for (const ElementSet& x : nonbases) {
    if (x.bits() & ~ground_mask(n)) throw InvalidArgument("nonbasis exceeds [n]");
    pattern.zero_rows.emplace_back(x.bits(), n);
  }
  return pattern;
}

GenericMatrix::GenericMatrix(ZeroPattern pattern, std::vector<mpz_class> entries)
    : pattern_(std::move(pattern)), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<size_t>(pattern_.r) * pattern_.n) {
    throw InvalidArgument("matrix entry count does not match r x n");
  }
}

std::vector<mpz_class> GenericMatrix::columns(const ElementSet& s) const {
  const std::vector<int> cols = s.elements();
  std::vector<mpz_class> out;
  out.reserve(cols.size() * rows());
  for (int row = 1; row <= rows(); ++row) {
    for (int e : cols) out.push_back(at(row, e));
  }
  return out;
}

GenericMatrix instantiate(const ZeroPattern& pattern, uint64_t seed,
                          int bit_width) {
  if (bit_width < 32) {
    throw InvalidArgument("bit width must be at least 32, got " +
                          std::to_string(bit_width));
  }
  Rng rng(seed);
  auto draw = [&]() {
    mpz_class value;
    do {
      value = 0;
      int remaining = bit_width;
      while (remaining > 0) {
        const int take = remaining >= 64 ? 64 : remaining;
        uint64_t chunk = rng.next();
        if (take < 64) chunk &= (uint64_t{1} << take) - 1;
        value <<= take;
        value += mpz_class(static_cast<unsigned long>(chunk));
        remaining -= take;
      }
    } while (value == 0);
    return value;
  };
  std::vector<mpz_class> entries;
  entries.reserve(static_cast<size_t>(pattern.r) * pattern.n);
  for (int row = 1; row <= pattern.r; ++row) {
    for (int e = 1; e <= pattern.n; ++e) {
      entries.push_back(pattern.is_zero(row, e) ? mpz_class(0) : draw());
    }
  }
  return GenericMatrix(pattern, std::move(entries));
}

mpz_class bareiss_determinant(std::vector<mpz_class> m, int size) {
  if (size == 0) return 1;
  auto at = [&](int i, int j) -> mpz_class& {
    return m[static_cast<size_t>(i) * size + j];
  };
  int sign = 1;
  mpz_class previous = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (at(k, k) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < size; ++i) {
        if (at(i, k) != 0) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) return 0;
      for (int j = 0; j < size; ++j) std::swap(at(k, j), at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        mpz_class v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        at(i, j) = std::move(v);
      }
    }
    previous = at(k, k);
  }
  return sign * at(size - 1, size - 1);
}

std::optional<ElementSet> find_representation_mismatch(const GenericMatrix& a,
                                                       const BasisMatroid& m) {
  if (a.rows() != m.r() || a.cols() != m.n()) {
    throw InvalidArgument("matrix dimensions do not match the matroid");
  }
  std::optional<ElementSet> mismatch;
  internal::for_each_k_subset(m.n(), m.r(), [&](uint64_t s) {
    if (mismatch) return;
    ElementSet cols(s, m.n());
    const bool nonsingular = bareiss_determinant(a.columns(cols), m.r()) != 0;
    if (nonsingular != m.is_basis(s)) mismatch = cols;
  });
  return mismatch;
}

bool verify_represents(const GenericMatrix& a, const BasisMatroid& m) {
  return !find_representation_mismatch(a, m).has_value();
}

bool matching_exists(const ZeroPattern& pattern, const ElementSet& b) {
  if (b.size() != pattern.r) {
    throw InvalidArgument("column set " + b.to_string() + " must have size " +
                          std::to_string(pattern.r));
  }
  const std::vector<int> cols = b.elements();
  const int r = pattern.r;
  std::vector<int> row_of_col(r, -1);
  std::vector<char> visited;
  // Kuhn's augmenting paths from each row.
  std::function<bool(int)> augment = [&](int row) {
    for (int c = 0; c < r; ++c) {
      if (visited[c] || pattern.is_zero(row + 1, cols[c])) continue;
      visited[c] = 1;
      if (row_of_col[c] < 0 || augment(row_of_col[c])) {
        row_of_col[c] = row;
        return true;
      }
    }
    return false;
  };
  for (int row = 0; row < r; ++row) {
    visited.assign(r, 0);
    if (!augment(row)) return false;
  }
  return true;
}

RepresentationResult represent(const BasisMatroid& m, uint64_t seed,
                               int bit_width, int attempts) {
  RepresentationResult result;
  result.bit_width = bit_width;
  result.seed = seed;
  std::vector<ElementSet> nonbases;
  for (uint64_t x : m.nonbasis_bits()) nonbases.emplace_back(x, m.n());
  if (!hall_condition(nonbases, m.r())) return result;
  result.hall = true;
  const ZeroPattern pattern = build_pattern(nonbases, m.r(), m.n());
  for (int i = 0; i < attempts; ++i) {
    result.seed = seed + static_cast<uint64_t>(i);
    result.attempts = i + 1;
    GenericMatrix a = instantiate(pattern, result.seed, bit_width);
    if (verify_represents(a, m)) {
      result.success = true;
      result.matrix = std::move(a);
      return result;
    }
  }
  return result;
}

}  // namespace spmat
