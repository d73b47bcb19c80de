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

#include "spmat/ingleton.h"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "bits_internal.h"
#include "spmat/errors.h"
#include "spmat/rng.h"

namespace spmat {
namespace {

constexpr int kMaxRankTableN = 20;

void check_table_scale(int n) {
  if (n > kMaxRankTableN) {
    throw ScaleLimitExceeded("rank tables need n <= " +
                             std::to_string(kMaxRankTableN));
  }
}

}  // namespace

RankTable::RankTable(const BasisMatroid& m) : n_(m.n()), r_(m.r()) {
  check_table_scale(n_);
  const uint64_t size = uint64_t{1} << n_;
  std::vector<uint8_t> independent(size, 0);
  for (uint64_t b : m.basis_bits()) independent[b] = 1;
  for (int i = 0; i < n_; ++i) {
    const uint64_t bit = uint64_t{1} << i;
    for (uint64_t s = 0; s < size; ++s) {
      if ((s & bit) && independent[s]) independent[s ^ bit] = 1;
    }
  }
  rank_.assign(size, 0);
  for (uint64_t s = 1; s < size; ++s) {
    if (independent[s]) {
      rank_[s] = static_cast<uint8_t>(std::popcount(s));
      continue;
    }
    uint8_t best = 0;
    for (uint64_t xs = s; xs != 0; xs &= xs - 1) {
      best = std::max(best, rank_[s & ~(xs & -xs)]);
    }
    rank_[s] = best;
  }
}

RankTable::RankTable(const SparsePavingMatroid& m) : n_(m.n()), r_(m.r()) {
  check_table_scale(n_);
  const uint64_t size = uint64_t{1} << n_;
  rank_.resize(size);
  for (uint64_t s = 0; s < size; ++s) {
    rank_[s] = static_cast<uint8_t>(m.rank_bits(s));
  }
}

uint64_t RankTable::closure(uint64_t bits) const {
  const int base = rank_[bits];
  uint64_t out = bits;
  for (uint64_t xs = ground_mask(n_) & ~bits; xs != 0; xs &= xs - 1) {
    uint64_t e = xs & -xs;
    if (rank_[bits | e] == base) out |= e;
  }
  return out;
}

bool RankTable::is_flat(uint64_t bits) const { return closure(bits) == bits; }

std::vector<uint64_t> RankTable::flats() const {
  std::vector<uint64_t> out;
  const uint64_t size = uint64_t{1} << n_;
  for (uint64_t s = 0; s < size; ++s) {
    if (is_flat(s)) out.push_back(s);
  }
  return out;
}

std::optional<IngletonQuadruple> ingleton_brute(const RankTable& rank) {
  if (rank.n() > kMaxExhaustiveIngletonN) {
    throw ScaleLimitExceeded(
        "exhaustive Ingleton check needs n <= " +
        std::to_string(kMaxExhaustiveIngletonN) + "; use sampled mode");
  }
  const int n = rank.n();
  const std::vector<uint64_t> flats = rank.flats();
  // lhs - rhs = g(C) + g(D) + r(C) + r(D) - r(CD) - delta(A, B) where
  // g(X) = r(AX) + r(BX) - r(ABX) - r(X) and
  // delta = r(A) + r(B) - r(AB). Every term except delta is nonnegative by
  // submodularity, so skew pairs (A, B) and flats with g >= delta are
  // skipped.
  struct Candidate {
    uint64_t set;
    int g;
  };
  std::vector<Candidate> candidates;
  for (size_t ia = 0; ia < flats.size(); ++ia) {
    const uint64_t a = flats[ia];
    for (size_t ib = ia; ib < flats.size(); ++ib) {
      const uint64_t b = flats[ib];
      const uint64_t ab = a | b;
      const int delta = rank(a) + rank(b) - rank(ab);
      if (delta <= 0) continue;
      candidates.clear();
      for (uint64_t c : flats) {
        int g = rank(a | c) + rank(b | c) - rank(ab | c) - rank(c);
        if (g < delta) candidates.push_back({c, g});
      }
      for (size_t ic = 0; ic < candidates.size(); ++ic) {
        const Candidate& c = candidates[ic];
        for (size_t id = ic; id < candidates.size(); ++id) {
          const Candidate& d = candidates[id];
          int slack = c.g + d.g + rank(c.set) + rank(d.set) - rank(c.set | d.set);
          if (slack < delta) {
            return eval_quadruple(rank, ElementSet(a, n), ElementSet(b, n),
                                  ElementSet(c.set, n), ElementSet(d.set, n));
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<IngletonQuadruple> ingleton_brute_subsets(const RankTable& rank) {
  if (rank.n() > 7) {
    throw ScaleLimitExceeded("subset enumeration Ingleton check needs n <= 7");
  }
  const int n = rank.n();
  const uint64_t size = uint64_t{1} << n;
  for (uint64_t a = 0; a < size; ++a) {
    for (uint64_t b = a; b < size; ++b) {
      const int ab = rank(a | b);
      const int base = ab - rank(a) - rank(b);
      for (uint64_t c = 0; c < size; ++c) {
        const int with_c = rank(a | c) + rank(b | c) - rank(a | b | c);
        for (uint64_t d = c; d < size; ++d) {
          int value = base + with_c + rank(a | d) + rank(b | d) -
                      rank(a | b | d) - rank(c | d);
          if (value < 0) {
            return eval_quadruple(rank, ElementSet(a, n), ElementSet(b, n),
                                  ElementSet(c, n), ElementSet(d, n));
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<IngletonQuadruple> ingleton_sampled(
    int n, const std::function<int(const ElementSet&)>& rank, uint64_t budget,
    uint64_t seed) {
  if (n < 0 || n > kMaxGroundSet) throw InvalidArgument("invalid n");
  Rng rng(seed);
  const uint64_t ground = ground_mask(n);
  for (uint64_t i = 0; i < budget; ++i) {
    ElementSet a(rng.next() & ground, n), b(rng.next() & ground, n),
        c(rng.next() & ground, n), d(rng.next() & ground, n);
    IngletonQuadruple q = eval_quadruple(rank, a, b, c, d);
    if (q.violated()) return q;
  }
  return std::nullopt;
}

// Omega patterns

OmegaPattern OmegaPattern::make(std::array<uint64_t, 4> pairs, uint64_t core,
                                int n) {
  uint64_t seen = core;
  for (uint64_t p : pairs) {
    if (std::popcount(p) != 2 || (seen & p)) {
      throw InvalidArgument("pattern parts must be disjoint pairs");
    }
    seen |= p;
  }
  if (seen & ~ground_mask(n)) throw InvalidArgument("pattern exceeds ground set");
  std::sort(pairs.begin(), pairs.end());
  return OmegaPattern{pairs, core, n};
}

std::array<uint64_t, 6> OmegaPattern::u_sets() const {
  std::array<uint64_t, 6> out{};
  for (size_t t = 0; t < kOmegaIndexPairs.size(); ++t) {
    out[t] = union_bits(kOmegaIndexPairs[t][0], kOmegaIndexPairs[t][1]);
  }
  return out;
}

namespace {

// The three ways to split a 4-element mask into two pairs; the pair holding
// the lowest element comes first.
std::array<std::array<uint64_t, 2>, 3> pair_splits(uint64_t four) {
  uint64_t e[4];
  int i = 0;
  for (uint64_t b = four; b != 0; b &= b - 1) e[i++] = b & -b;
  return {{{e[0] | e[1], e[2] | e[3]},
           {e[0] | e[2], e[1] | e[3]},
           {e[0] | e[3], e[1] | e[2]}}};
}

}  // namespace

std::vector<OmegaHit> scan_omega_hits(std::span<const uint64_t> family, int n,
                                      int r) {
  std::vector<OmegaHit> out;
  if (r < 4 || n < r + 4) return out;
  std::vector<uint64_t> sorted(family.begin(), family.end());
  std::sort(sorted.begin(), sorted.end());
  auto member = [&](uint64_t s) { return internal::contains_sorted(sorted, s); };

  std::map<OmegaPattern, OmegaHit> found;
  for (size_t i = 0; i < sorted.size(); ++i) {
    for (size_t j = i + 1; j < sorted.size(); ++j) {
      const uint64_t x = sorted[i];
      const uint64_t y = sorted[j];
      const uint64_t k = x & y;
      if (std::popcount(k) != r - 4) continue;
      for (const auto& xs : pair_splits(x & ~k)) {
        for (const auto& ys : pair_splits(y & ~k)) {
          int cross = 0;
          for (uint64_t p : xs) {
            for (uint64_t q : ys) cross += member(k | p | q);
          }
          if (cross < 3) continue;
          OmegaPattern pattern =
              OmegaPattern::make({xs[0], xs[1], ys[0], ys[1]}, k, n);
          if (found.contains(pattern)) continue;
          OmegaHit hit{pattern, 2 + cross, -1};
          if (hit.hits == 5) {
            auto u = pattern.u_sets();
            for (int t = 0; t < 6; ++t) {
              if (!member(u[t])) hit.missing = t;
            }
          }
          found.emplace(pattern, hit);
        }
      }
    }
  }
  out.reserve(found.size());
  for (auto& [pattern, hit] : found) out.push_back(hit);
  return out;
}

void for_each_omega(int n, int r,
                    const std::function<void(const OmegaPattern&)>& visit) {
  if (r < 4 || n < r + 4) return;
  const uint64_t ground = ground_mask(n);
  std::array<uint64_t, 4> pairs{};
  // Pairs the elements of `rest` (a multiple of two) around its lowest one.
  std::function<void(uint64_t, int, uint64_t)> match = [&](uint64_t rest,
                                                          int depth,
                                                          uint64_t core) {
    if (rest == 0) {
      visit(OmegaPattern::make(pairs, core, n));
      return;
    }
    const uint64_t first = rest & -rest;
    for (uint64_t others = rest & ~first; others != 0; others &= others - 1) {
      const uint64_t second = others & -others;
      pairs[depth] = first | second;
      match(rest & ~(first | second), depth + 1, core);
    }
  };
  internal::for_each_k_subset(n, r - 4, [&](uint64_t core) {
    const int free_count = n - (r - 4);
    // Choose 8 of the elements outside K by index into the free positions.
    std::vector<uint64_t> free_bits;
    for (uint64_t b = ground & ~core; b != 0; b &= b - 1) {
      free_bits.push_back(b & -b);
    }
    internal::for_each_k_subset(free_count, 8, [&](uint64_t choice) {
      uint64_t eight = 0;
      for (uint64_t c = choice; c != 0; c &= c - 1) {
        eight |= free_bits[std::countr_zero(c)];
      }
      match(eight, 0, core);
    });
  });
}

std::vector<ViolationWitness> all_violation_witnesses(
    const SparsePavingMatroid& m) {
  std::vector<ViolationWitness> out;
  for (const OmegaHit& hit : scan_omega_hits(m.hyperplane_bits(), m.n(), m.r())) {
    if (hit.hits != 5) continue;
    out.push_back({hit.pattern, kOmegaIndexPairs[hit.missing]});
  }
  return out;
}

std::optional<ViolationWitness> ingleton_fast_sp(const SparsePavingMatroid& m) {
  if (m.r() < 4 || m.n() < 8) return std::nullopt;
  std::vector<ViolationWitness> all = all_violation_witnesses(m);
  if (all.empty()) return std::nullopt;
  return all.front();
}

IngletonQuadruple witness_to_quadruple(const SparsePavingMatroid& m,
                                       const ViolationWitness& w) {
  const int c = w.basis_pair[0];
  const int d = w.basis_pair[1];
  int rest[2];
  int t = 0;
  for (int i = 1; i <= 4; ++i) {
    if (i != c && i != d) rest[t++] = i;
  }
  const ElementSet k = w.pattern.k();
  auto rank = [&m](const ElementSet& s) { return m.rank(s); };
  return eval_quadruple(rank, w.pattern.pair(rest[0]) | k,
                        w.pattern.pair(rest[1]) | k, w.pattern.pair(c) | k,
                        w.pattern.pair(d) | k);
}

std::optional<ViolationWitness> witness_from_quadruple(
    const IngletonQuadruple& q) {
  const int n = std::max({q.a.n(), q.b.n(), q.c.n(), q.d.n()});
  const uint64_t core = q.a.bits() & q.b.bits() & q.c.bits() & q.d.bits();
  std::array<uint64_t, 4> parts = {q.a.bits() & ~core, q.b.bits() & ~core,
                                   q.c.bits() & ~core, q.d.bits() & ~core};
  uint64_t seen = core;
  for (uint64_t p : parts) {
    if (std::popcount(p) != 2 || (seen & p)) return std::nullopt;
    seen |= p;
  }
  OmegaPattern pattern = OmegaPattern::make(parts, core, n);
  std::array<int, 2> basis_pair{};
  for (int i = 1; i <= 4; ++i) {
    if (pattern.pairs[i - 1] == parts[2]) basis_pair[0] = i;
    if (pattern.pairs[i - 1] == parts[3]) basis_pair[1] = i;
  }
  if (basis_pair[0] > basis_pair[1]) std::swap(basis_pair[0], basis_pair[1]);
  return ViolationWitness{pattern, basis_pair};
}

BasisMatroid minor_witness(const SparsePavingMatroid& m,
                           const ViolationWitness& w) {
  BasisMatroid minor = m.to_basis();
  uint64_t keep = 0;
  for (uint64_t p : w.pattern.pairs) keep |= p;
  // Highest label first so lower labels are unaffected by relabelling.
  for (int e = m.n(); e >= 1; --e) {
    const uint64_t bit = uint64_t{1} << (e - 1);
    if (w.pattern.core & bit) {
      minor = contract_element(minor, e);
    } else if (!(keep & bit)) {
      minor = delete_element(minor, e);
    }
  }
  return minor;
}

}  // namespace spmat
