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

// Slow reference implementations used to check the library. None of these
// call into the code under test except for plain data types.

#ifndef SPMAT_TESTS_ORACLES_H_
#define SPMAT_TESTS_ORACLES_H_

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

// All r-subsets of [n] as ascending element lists, in colex order: compare
// the largest elements first.
inline std::vector<std::vector<int>> colex_subsets(int n, int r) {
  std::vector<std::vector<int>> out;
  for (uint32_t m = 0; m < (1u << n); ++m) {
    if (std::popcount(m) != r) continue;
    std::vector<int> s;
    for (int e = 1; e <= n; ++e) {
      if (m & (1u << (e - 1))) s.push_back(e);
    }
    out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(),
                                        b.rend());
  });
  return out;
}

inline uint64_t mask_of(const std::vector<int>& s) {
  uint64_t m = 0;
  for (int e : s) m |= uint64_t{1} << (e - 1);
  return m;
}

inline std::vector<uint64_t> r_subset_masks(int n, int r) {
  std::vector<uint64_t> out;
  for (const auto& s : colex_subsets(n, r)) out.push_back(mask_of(s));
  return out;
}

inline bool adjacent(uint64_t x, uint64_t y, int r) {
  return std::popcount(x & y) == r - 1;
}

inline bool stable(const std::vector<uint64_t>& h, int r) {
  for (size_t i = 0; i < h.size(); ++i) {
    for (size_t j = i + 1; j < h.size(); ++j) {
      if (adjacent(h[i], h[j], r)) return false;
    }
  }
  return true;
}

// Number of stable sets of J(n, r) by filtering every vertex subset.
inline uint64_t count_stable_sets(int n, int r) {
  const std::vector<uint64_t> v = r_subset_masks(n, r);
  const int big = static_cast<int>(v.size());
  std::vector<uint32_t> nbr(big, 0);
  for (int i = 0; i < big; ++i) {
    for (int j = 0; j < big; ++j) {
      if (adjacent(v[i], v[j], r)) nbr[i] |= 1u << j;
    }
  }
  uint64_t count = 0;
  for (uint32_t s = 0; s < (1u << big); ++s) {
    bool ok = true;
    for (uint32_t t = s; t != 0 && ok; t &= t - 1) {
      if (nbr[std::countr_zero(t)] & s) ok = false;
    }
    count += ok;
  }
  return count;
}

// Rank from a basis list: max |B ∩ S|.
inline int rank_from_bases(const std::vector<uint64_t>& bases, uint64_t s) {
  int best = 0;
  for (uint64_t b : bases) best = std::max(best, std::popcount(b & s));
  return best;
}

inline std::vector<int> rank_table(const std::vector<uint64_t>& bases, int n) {
  std::vector<int> t(size_t{1} << n);
  for (uint64_t s = 0; s < t.size(); ++s) t[s] = rank_from_bases(bases, s);
  return t;
}

inline std::vector<uint64_t> bases_from_nonbases(
    int n, int r, const std::vector<uint64_t>& nonbases) {
  std::vector<uint64_t> out;
  for (uint64_t m : r_subset_masks(n, r)) {
    if (std::find(nonbases.begin(), nonbases.end(), m) == nonbases.end()) {
      out.push_back(m);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Literal Ingleton check over all 16^n quadruples.
inline bool ingleton_literal(const std::vector<int>& rank, int n) {
  const uint64_t full = uint64_t{1} << n;
  for (uint64_t a = 0; a < full; ++a) {
    for (uint64_t b = 0; b < full; ++b) {
      const int base = rank[a] + rank[b] - rank[a | b];
      if (base <= 0) continue;
      for (uint64_t c = 0; c < full; ++c) {
        for (uint64_t d = 0; d < full; ++d) {
          const int lhs = rank[a | b] + rank[a | c] + rank[a | d] +
                          rank[b | c] + rank[b | d];
          const int rhs = rank[a] + rank[b] + rank[a | b | c] +
                          rank[a | b | d] + rank[c | d];
          if (lhs < rhs) return false;
        }
      }
    }
  }
  return true;
}

inline uint64_t apply_perm(uint64_t s, const std::vector<int>& perm) {
  uint64_t out = 0;
  for (size_t e = 0; e < perm.size(); ++e) {
    if (s & (uint64_t{1} << e)) out |= uint64_t{1} << (perm[e] - 1);
  }
  return out;
}

// Is there a permutation of [n] mapping family a onto family b?
inline bool isomorphic_by_search(int n, std::vector<uint64_t> a,
                                 std::vector<uint64_t> b) {
  if (a.size() != b.size()) return false;
  std::sort(b.begin(), b.end());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    std::vector<uint64_t> img;
    for (uint64_t s : a) img.push_back(apply_perm(s, perm));
    std::sort(img.begin(), img.end());
    if (img == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Leibniz expansion.
inline mpz_class leibniz_det(const std::vector<mpz_class>& m, int size) {
  std::vector<int> p(size);
  std::iota(p.begin(), p.end(), 0);
  mpz_class total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < size; ++i) {
      for (int j = i + 1; j < size; ++j) inversions += p[i] > p[j];
    }
    mpz_class term = 1;
    for (int i = 0; i < size; ++i) term *= m[i * size + p[i]];
    if (inversions % 2) {
      total -= term;
    } else {
      total += term;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Every unordered partition of an 8-set into four pairs, by recursion.
inline void pairings(std::vector<int> elems,
                     std::vector<std::array<int, 2>>& acc,
                     const std::function<void(const std::vector<std::array<int, 2>>&)>& f) {
  if (elems.empty()) {
    f(acc);
    return;
  }
  const int first = elems[0];
  for (size_t i = 1; i < elems.size(); ++i) {
    std::vector<int> rest;
    for (size_t j = 1; j < elems.size(); ++j) {
      if (j != i) rest.push_back(elems[j]);
    }
    acc.push_back({first, elems[i]});
    pairings(rest, acc, f);
    acc.pop_back();
  }
}

// b5, b6 by walking every (K, 8-set, pairing) at once.
inline std::array<uint64_t, 2> omega_counts(const std::vector<uint64_t>& h,
                                            int n, int r) {
  std::set<uint64_t> hs(h.begin(), h.end());
  std::array<uint64_t, 2> out{0, 0};
  if (r < 4 || n < r + 4) return out;
  for (uint64_t k = 0; k < (uint64_t{1} << n); ++k) {
    if (std::popcount(k) != r - 4) continue;
    for (uint64_t e8 = 0; e8 < (uint64_t{1} << n); ++e8) {
      if (std::popcount(e8) != 8 || (e8 & k)) continue;
      std::vector<int> elems;
      for (int e = 0; e < n; ++e) {
        if (e8 & (uint64_t{1} << e)) elems.push_back(e);
      }
      std::vector<std::array<int, 2>> acc;
      pairings(elems, acc, [&](const std::vector<std::array<int, 2>>& p) {
        int hits = 0;
        for (int i = 0; i < 4; ++i) {
          for (int j = i + 1; j < 4; ++j) {
            const uint64_t u = k | (uint64_t{1} << p[i][0]) |
                               (uint64_t{1} << p[i][1]) |
                               (uint64_t{1} << p[j][0]) |
                               (uint64_t{1} << p[j][1]);
            hits += hs.count(u);
          }
        }
        if (hits == 5) ++out[0];
        if (hits == 6) ++out[1];
      });
    }
  }
  return out;
}

// Random stable set: shuffle the vertices and add greedily with
// probability 1/2 each. Empty when r is 0 or n.
inline std::vector<uint64_t> random_stable_set(int n, int r, std::mt19937_64& g) {
  if (r == 0 || r == n) return {};
  std::vector<uint64_t> v = r_subset_masks(n, r);
  std::shuffle(v.begin(), v.end(), g);
  const size_t cap = std::uniform_int_distribution<size_t>(0, v.size())(g);
  std::vector<uint64_t> h;
  for (uint64_t x : v) {
    if (h.size() >= cap) break;
    if (g() & 1u) continue;
    bool ok = true;
    for (uint64_t y : h) {
      if (adjacent(x, y, r)) {
        ok = false;
        break;
      }
    }
    if (ok) h.push_back(x);
  }
  std::sort(h.begin(), h.end());
  return h;
}

}  // namespace oracle

#endif  // SPMAT_TESTS_ORACLES_H_
