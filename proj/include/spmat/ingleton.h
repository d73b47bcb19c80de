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

#ifndef SPMAT_INGLETON_H_
#define SPMAT_INGLETON_H_

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "spmat/element_set.h"
#include "spmat/matroid.h"

namespace spmat {

// Rank function tabulated over all 2^n subsets (n <= 20).
class RankTable {
 public:
  explicit RankTable(const BasisMatroid& m);
  explicit RankTable(const SparsePavingMatroid& m);

  int n() const { return n_; }
  int r() const { return r_; }
  int operator()(uint64_t bits) const { return rank_[bits]; }
  int operator()(const ElementSet& s) const { return rank_[s.bits()]; }

  uint64_t closure(uint64_t bits) const;
  bool is_flat(uint64_t bits) const;
  // All flats, ordered by mask.
  std::vector<uint64_t> flats() const;

 private:
  int n_;
  int r_;
  std::vector<uint8_t> rank_;
};

// Both sides of the inequality
//   r(AB)+r(AC)+r(AD)+r(BC)+r(BD) >= r(A)+r(B)+r(ABC)+r(ABD)+r(CD).
struct IngletonQuadruple {
  ElementSet a, b, c, d;
  int lhs = 0;
  int rhs = 0;

  bool violated() const { return lhs < rhs; }
  friend bool operator==(const IngletonQuadruple&,
                         const IngletonQuadruple&) = default;
};

template <typename RankFn>
IngletonQuadruple eval_quadruple(const RankFn& rank, const ElementSet& a,
                                 const ElementSet& b, const ElementSet& c,
                                 const ElementSet& d) {
  IngletonQuadruple q{a, b, c, d, 0, 0};
  q.lhs = rank(a | b) + rank(a | c) + rank(a | d) + rank(b | c) + rank(b | d);
  q.rhs = rank(a) + rank(b) + rank(a | b | c) + rank(a | b | d) + rank(c | d);
  return q;
}

inline constexpr int kMaxExhaustiveIngletonN = 8;

// Exact check over all quadruples. Each argument can be replaced by its
// closure without changing either side, so only quadruples of flats are
// visited; the A<->B and C<->D symmetries halve each pair. Returns the first
// violating quadruple in flat order. Throws ScaleLimitExceeded for n > 8.
std::optional<IngletonQuadruple> ingleton_brute(const RankTable& rank);

// Literal enumeration of all 16^n membership patterns modulo the two
// symmetries; n <= 7. Kept as an oracle for the flat reduction.
std::optional<IngletonQuadruple> ingleton_brute_subsets(const RankTable& rank);

// Random quadruples of subsets; finds violations but cannot certify
// Ingleton-ness. Works for any n through the rank callback.
std::optional<IngletonQuadruple> ingleton_sampled(
    int n, const std::function<int(const ElementSet&)>& rank, uint64_t budget,
    uint64_t seed);

// ({P1, P2, P3, P4}, K): pairwise disjoint, |Pi| = 2, |K| = r - 4. Stored
// with the pairs sorted by mask so equal patterns compare equal.
struct OmegaPattern {
  std::array<uint64_t, 4> pairs{};
  uint64_t core = 0;
  int n = 0;

  static OmegaPattern make(std::array<uint64_t, 4> pairs, uint64_t core, int n);

  ElementSet pair(int i) const { return ElementSet(pairs[i - 1], n); }
  ElementSet k() const { return ElementSet(core, n); }
  // K ∪ Pi ∪ Pj for 1 <= i < j <= 4.
  uint64_t union_bits(int i, int j) const {
    return core | pairs[i - 1] | pairs[j - 1];
  }
  // The six sets U(ω) in the order 12, 13, 14, 23, 24, 34.
  std::array<uint64_t, 6> u_sets() const;

  friend bool operator==(const OmegaPattern&, const OmegaPattern&) = default;
  friend auto operator<=>(const OmegaPattern& a, const OmegaPattern& b) {
    if (auto c = a.core <=> b.core; c != 0) return c;
    return a.pairs <=> b.pairs;
  }
};

// The index pairs {i,j} in u_sets() order.
inline constexpr std::array<std::array<int, 2>, 6> kOmegaIndexPairs{
    {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

// Exactly five sets of U(ω) are circuit-hyperplanes; K ∪ P_i ∪ P_j with
// {i, j} = basis_pair is the basis.
struct ViolationWitness {
  OmegaPattern pattern;
  std::array<int, 2> basis_pair{};

  friend bool operator==(const ViolationWitness&,
                         const ViolationWitness&) = default;
};

// A pattern meeting a vertex family in at least five of its six sets.
struct OmegaHit {
  OmegaPattern pattern;
  int hits = 0;     // 5 or 6
  int missing = -1;  // index into kOmegaIndexPairs when hits == 5
};

// All patterns with >= 5 of U(ω) inside `family` (sorted masks of r-sets),
// found through pairs of members meeting in r - 4 elements. Ascending order.
std::vector<OmegaHit> scan_omega_hits(std::span<const uint64_t> family, int n,
                                      int r);

// Every pattern ω over [n] at rank r, in no particular order.
void for_each_omega(int n, int r,
                    const std::function<void(const OmegaPattern&)>& visit);

std::optional<ViolationWitness> ingleton_fast_sp(const SparsePavingMatroid& m);
std::vector<ViolationWitness> all_violation_witnesses(
    const SparsePavingMatroid& m);

// A = P_a ∪ K, B = P_b ∪ K, C = P_c ∪ K, D = P_d ∪ K with {c, d} the basis
// pair, evaluated in m.
IngletonQuadruple witness_to_quadruple(const SparsePavingMatroid& m,
                                       const ViolationWitness& w);

// Recovers the pattern from the five circuit-hyperplanes of a violating
// quadruple; nullopt if they do not form one.
std::optional<ViolationWitness> witness_from_quadruple(
    const IngletonQuadruple& q);

// (M / K) | (P1 ∪ P2 ∪ P3 ∪ P4), relabelled onto [8].
BasisMatroid minor_witness(const SparsePavingMatroid& m,
                           const ViolationWitness& w);

}  // namespace spmat

#endif  // SPMAT_INGLETON_H_
