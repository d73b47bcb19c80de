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

#include "spmat/johnson.h"

#include <array>
#include <bit>
#include <string>

#include "spmat/errors.h"

namespace spmat {
namespace {

constexpr uint64_t kOverflow = ~uint64_t{0};

// Pascal's triangle up to 64; entries that overflow are kOverflow.
struct BinomialTable {
  std::array<std::array<uint64_t, 65>, 65> c{};
  constexpr BinomialTable() {
    for (int n = 0; n <= 64; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) {
        uint64_t a = c[n - 1][k - 1];
        uint64_t b = k <= n - 1 ? c[n - 1][k] : 0;
        c[n][k] = (a == kOverflow || b == kOverflow || a > kOverflow - b)
                      ? kOverflow
                      : a + b;
      }
    }
  }
};

constexpr BinomialTable kBinomial;

inline uint64_t choose(int n, int k) {
  return (k < 0 || n < 0 || k > n) ? 0 : kBinomial.c[n][k];
}

void check_rank_params(int n, int r) {
  if (n < 0 || n > kMaxGroundSet || r < 0 || r > n) {
    throw InvalidArgument("invalid (n, r) = (" + std::to_string(n) + ", " +
                          std::to_string(r) + ")");
  }
}

}  // namespace

uint64_t binomial(int n, int k) {
  if (n < 0 || n > 64) {
    throw InvalidArgument("binomial: n = " + std::to_string(n) + " outside [0, 64]");
  }
  uint64_t v = choose(n, k);
  if (v == kOverflow) {
    throw ScaleLimitExceeded("binomial(" + std::to_string(n) + ", " +
                             std::to_string(k) + ") overflows 64 bits");
  }
  return v;
}

uint64_t colex_rank_bits(uint64_t bits) {
  uint64_t rank = 0;
  int i = 1;
  for (uint64_t b = bits; b != 0; b &= b - 1, ++i) {
    rank += choose(std::countr_zero(b), i);
  }
  return rank;
}

uint64_t colex_unrank_bits(uint64_t rank, int r) {
  uint64_t bits = 0;
  int p = 63;
  for (int i = r; i >= 1; --i) {
    // Largest p with C(p, i) <= rank; positions strictly decrease with i.
    while (p >= i && choose(p, i) > rank) --p;
    bits |= uint64_t{1} << p;
    rank -= choose(p, i);
    --p;
  }
  return bits;
}

RSubsetIndex colex_rank(const ElementSet& s, int r) {
  check_rank_params(s.n(), r);
  if (s.size() != r) {
    throw InvalidArgument("colex_rank: " + s.to_string() + " has size " +
                          std::to_string(s.size()) + ", expected " +
                          std::to_string(r));
  }
  return {colex_rank_bits(s.bits()), s.n(), r};
}

ElementSet colex_unrank(uint64_t rank, int n, int r) {
  check_rank_params(n, r);
  uint64_t total = binomial(n, r);
  if (rank >= total) {
    throw InvalidArgument("colex_unrank: index " + std::to_string(rank) +
                          " not below C(" + std::to_string(n) + ", " +
                          std::to_string(r) + ") = " + std::to_string(total));
  }
  return ElementSet(colex_unrank_bits(rank, r), n);
}

ElementSet colex_unrank(const RSubsetIndex& index) {
  return colex_unrank(index.rank, index.n, index.r);
}

bool johnson_adjacent(const ElementSet& x, const ElementSet& y, int r) {
  if (x.size() != r || y.size() != r) {
    throw InvalidArgument("johnson_adjacent: " + x.to_string() + ", " +
                          y.to_string() + " are not both of size " +
                          std::to_string(r));
  }
  return std::popcount(x.bits() & y.bits()) == r - 1;
}

JohnsonParams johnson_params(int n, int r) {
  if (n > kMaxGroundSet || r <= 0 || r >= n) {
    throw InvalidArgument("johnson_params requires 0 < r < n <= 64, got (" +
                          std::to_string(n) + ", " + std::to_string(r) + ")");
  }
  return {n, r, binomial(n, r),
          static_cast<uint64_t>(r) * static_cast<uint64_t>(n - r)};
}

bool is_stable(std::span<const ElementSet> family, int r) {
  for (const ElementSet& x : family) {
    if (x.size() != r) {
      throw InvalidArgument("is_stable: " + x.to_string() + " has size " +
                            std::to_string(x.size()) + ", expected " +
                            std::to_string(r));
    }
  }
  for (size_t i = 0; i < family.size(); ++i) {
    for (size_t j = i + 1; j < family.size(); ++j) {
      if (std::popcount(family[i].bits() & family[j].bits()) == r - 1) {
        return false;
      }
    }
  }
  return true;
}

bool is_stable_bits(std::span<const uint64_t> family, int r) {
  for (size_t i = 0; i < family.size(); ++i) {
    for (size_t j = i + 1; j < family.size(); ++j) {
      if (std::popcount(family[i] & family[j]) == r - 1) return false;
    }
  }
  return true;
}

JohnsonGraph::JohnsonGraph(int n, int r) : n_(n), r_(r) {
  check_rank_params(n, r);
  uint64_t count = binomial(n, r);
  if (count > (uint64_t{1} << 20)) {
    throw ScaleLimitExceeded("J(" + std::to_string(n) + ", " +
                             std::to_string(r) + ") has " +
                             std::to_string(count) + " vertices");
  }
  vertices_.resize(count);
  for (uint64_t i = 0; i < count; ++i) vertices_[i] = colex_unrank_bits(i, r);
  words_ = static_cast<int>((count + 63) / 64);
  adjacency_.assign(count * words_, 0);
  // Neighbours of X: swap one element of X for one outside.
  const uint64_t ground = ground_mask(n);
  for (uint64_t v = 0; v < count; ++v) {
    uint64_t x = vertices_[v];
    for (uint64_t in = x; in != 0; in &= in - 1) {
      uint64_t drop = in & -in;
      for (uint64_t out = ground & ~x; out != 0; out &= out - 1) {
        uint64_t add = out & -out;
        uint64_t u = colex_rank_bits((x ^ drop) | add);
        adjacency_[v * words_ + u / 64] |= uint64_t{1} << (u % 64);
      }
    }
  }
}

}  // namespace spmat
