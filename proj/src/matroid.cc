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

#include "spmat/matroid.h"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

#include "bits_internal.h"
#include "spmat/errors.h"
#include "spmat/johnson.h"

namespace spmat {
namespace {

constexpr uint64_t kMaxEnumeratedSubsets = uint64_t{1} << 22;

void check_nr(int n, int r) {
  if (n < 0 || n > kMaxGroundSet || r < 0 || r > n) {
    throw InvalidArgument("invalid (n, r) = (" + std::to_string(n) + ", " +
                          std::to_string(r) + ")");
  }
}

void check_enumerable(int n, int r) {
  if (n >= 64 || binomial(n, r) > kMaxEnumeratedSubsets) {
    throw ScaleLimitExceeded("too many " + std::to_string(r) + "-subsets of [" +
                             std::to_string(n) + "] to enumerate");
  }
}

std::vector<uint64_t> to_bits(std::span<const ElementSet> sets) {
  std::vector<uint64_t> out;
  out.reserve(sets.size());
  for (const ElementSet& s : sets) out.push_back(s.bits());
  return out;
}

std::vector<ElementSet> to_sets(std::span<const uint64_t> bits, int n) {
  std::vector<ElementSet> out;
  out.reserve(bits.size());
  for (uint64_t b : bits) out.emplace_back(b, n);
  return out;
}

void check_members(std::span<const uint64_t> family, int n, int r,
                   const char* what) {
  for (uint64_t b : family) {
    if (b & ~ground_mask(n)) {
      throw InvalidArgument(std::string(what) + " " + mask_to_hex(b) +
                            " exceeds ground set [" + std::to_string(n) + "]");
    }
    if (std::popcount(b) != r) {
      throw InvalidArgument(std::string(what) + " " +
                            ElementSet(b, n).to_string() + " has size " +
                            std::to_string(std::popcount(b)) + ", expected " +
                            std::to_string(r));
    }
  }
}

}  // namespace

// SparsePavingMatroid

SparsePavingMatroid::SparsePavingMatroid(int n, int r,
                                         std::span<const ElementSet> hyperplanes)
    : SparsePavingMatroid(from_bits(n, r, to_bits(hyperplanes))) {}

SparsePavingMatroid SparsePavingMatroid::from_bits(
    int n, int r, std::span<const uint64_t> hyperplanes) {
  check_nr(n, r);
  check_members(hyperplanes, n, r, "circuit-hyperplane");
  if ((r == 0 || r == n) && !hyperplanes.empty()) {
    throw InvalidArgument("the only " + std::to_string(r) +
                          "-subset cannot be a circuit-hyperplane");
  }
  SparsePavingMatroid m;
  m.n_ = n;
  m.r_ = r;
  m.ch_.assign(hyperplanes.begin(), hyperplanes.end());
  std::sort(m.ch_.begin(), m.ch_.end());
  for (size_t i = 0; i + 1 < m.ch_.size(); ++i) {
    if (m.ch_[i] == m.ch_[i + 1]) {
      throw InvalidArgument("duplicate circuit-hyperplane " +
                            ElementSet(m.ch_[i], n).to_string());
    }
  }
  for (size_t i = 0; i < m.ch_.size(); ++i) {
    for (size_t j = i + 1; j < m.ch_.size(); ++j) {
      if (std::popcount(m.ch_[i] & m.ch_[j]) == r - 1) {
        throw InvalidArgument("not a stable set: " +
                              ElementSet(m.ch_[i], n).to_string() + " and " +
                              ElementSet(m.ch_[j], n).to_string() +
                              " meet in " + std::to_string(r - 1) +
                              " elements");
      }
    }
  }
  return m;
}

SparsePavingMatroid SparsePavingMatroid::uniform(int r, int n) {
  return from_bits(n, r, {});
}

std::vector<ElementSet> SparsePavingMatroid::hyperplanes() const {
  return to_sets(ch_, n_);
}

bool SparsePavingMatroid::is_hyperplane(uint64_t bits) const {
  return internal::contains_sorted(ch_, bits);
}

int SparsePavingMatroid::rank(const ElementSet& s) const {
  return rank_bits(s.bits());
}

int SparsePavingMatroid::rank_bits(uint64_t bits) const {
  int size = std::popcount(bits);
  if (size < r_) return size;
  if (size > r_) return r_;
  return is_hyperplane(bits) ? r_ - 1 : r_;
}

BasisMatroid SparsePavingMatroid::to_basis() const {
  check_enumerable(n_, r_);
  if (ch_.size() >= binomial(n_, r_)) {
    throw InvalidArgument("every " + std::to_string(r_) +
                          "-subset is a circuit-hyperplane; no bases remain");
  }
  std::vector<uint64_t> bases;
  bases.reserve(binomial(n_, r_) - ch_.size());
  internal::for_each_k_subset(n_, r_, [&](uint64_t s) {
    if (!is_hyperplane(s)) bases.push_back(s);
  });
  return BasisMatroid::from_bits_unchecked(n_, r_, std::move(bases));
}

// BasisMatroid

BasisMatroid::BasisMatroid(int n, int r, std::span<const ElementSet> bases)
    : BasisMatroid(from_bits(n, r, to_bits(bases))) {}

BasisMatroid BasisMatroid::from_bits(int n, int r,
                                     std::span<const uint64_t> bases) {
  check_nr(n, r);
  check_members(bases, n, r, "basis");
  std::vector<uint64_t> sorted(bases.begin(), bases.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty()) throw InvalidArgument("a matroid needs at least one basis");
  if (!exchange_check_bits(sorted)) {
    throw InvalidArgument("basis family violates the exchange axiom");
  }
  return from_bits_unchecked(n, r, std::move(sorted));
}

BasisMatroid BasisMatroid::from_bits_unchecked(int n, int r,
                                               std::vector<uint64_t> bases) {
  BasisMatroid m;
  m.n_ = n;
  m.r_ = r;
  m.bases_ = std::move(bases);
  std::sort(m.bases_.begin(), m.bases_.end());
  return m;
}

std::vector<ElementSet> BasisMatroid::bases() const {
  return to_sets(bases_, n_);
}

bool BasisMatroid::is_basis(uint64_t bits) const {
  return internal::contains_sorted(bases_, bits);
}

std::vector<uint64_t> BasisMatroid::nonbasis_bits() const {
  check_enumerable(n_, r_);
  std::vector<uint64_t> out;
  internal::for_each_k_subset(n_, r_, [&](uint64_t s) {
    if (!is_basis(s)) out.push_back(s);
  });
  return out;
}

int BasisMatroid::rank(const ElementSet& s) const { return rank_bits(s.bits()); }

int BasisMatroid::rank_bits(uint64_t bits) const {
  const int cap = std::min(std::popcount(bits), r_);
  int best = 0;
  for (uint64_t b : bases_) {
    best = std::max(best, std::popcount(b & bits));
    if (best == cap) break;
  }
  return best;
}

// Free functions

bool exchange_check_bits(std::span<const uint64_t> bases) {
  if (bases.empty()) throw InvalidArgument("exchange_check: empty family");
  const int r = std::popcount(bases.front());
  for (uint64_t b : bases) {
    if (std::popcount(b) != r) {
      throw InvalidArgument("exchange_check: mixed cardinalities");
    }
  }
  std::unordered_set<uint64_t> members(bases.begin(), bases.end());
  for (uint64_t b1 : bases) {
    for (uint64_t b2 : bases) {
      for (uint64_t xs = b1 & ~b2; xs != 0; xs &= xs - 1) {
        uint64_t x = xs & -xs;
        bool found = false;
        for (uint64_t ys = b2 & ~b1; ys != 0 && !found; ys &= ys - 1) {
          uint64_t y = ys & -ys;
          found = members.contains((b1 ^ x) | y);
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

bool exchange_check(std::span<const ElementSet> bases) {
  return exchange_check_bits(to_bits(bases));
}

BasisMatroid dual(const BasisMatroid& m) {
  const uint64_t ground = ground_mask(m.n());
  std::vector<uint64_t> out;
  out.reserve(m.basis_bits().size());
  for (uint64_t b : m.basis_bits()) out.push_back(ground & ~b);
  return BasisMatroid::from_bits_unchecked(m.n(), m.n() - m.r(), std::move(out));
}

BasisMatroid delete_element(const BasisMatroid& m, int e) {
  if (m.n() == 0) throw InvalidArgument("cannot delete from an empty ground set");
  if (e < 1 || e > m.n()) {
    throw InvalidArgument("element " + std::to_string(e) + " not in [" +
                          std::to_string(m.n()) + "]");
  }
  const uint64_t bit = uint64_t{1} << (e - 1);
  std::vector<uint64_t> avoiding;
  for (uint64_t b : m.basis_bits()) {
    if (!(b & bit)) avoiding.push_back(internal::squeeze_out(b, e));
  }
  if (!avoiding.empty()) {
    return BasisMatroid::from_bits_unchecked(m.n() - 1, m.r(),
                                             std::move(avoiding));
  }
  // e is a coloop.
  std::vector<uint64_t> out;
  out.reserve(m.basis_bits().size());
  for (uint64_t b : m.basis_bits()) {
    out.push_back(internal::squeeze_out(b & ~bit, e));
  }
  return BasisMatroid::from_bits_unchecked(m.n() - 1, m.r() - 1, std::move(out));
}

BasisMatroid contract_element(const BasisMatroid& m, int e) {
  return dual(delete_element(dual(m), e));
}

SparsePavingMatroid relax(const SparsePavingMatroid& m, const ElementSet& x) {
  if (!m.is_hyperplane(x.bits())) {
    throw InvalidArgument(x.to_string() + " is not a circuit-hyperplane");
  }
  std::vector<uint64_t> rest;
  for (uint64_t h : m.hyperplane_bits()) {
    if (h != x.bits()) rest.push_back(h);
  }
  return SparsePavingMatroid::from_bits(m.n(), m.r(), rest);
}

bool is_paving(const BasisMatroid& m) {
  if (m.r() == 0) return true;
  // Independence is inherited by subsets, so it suffices that every
  // (r-1)-subset lies in a basis.
  std::unordered_set<uint64_t> covered;
  for (uint64_t b : m.basis_bits()) {
    for (uint64_t xs = b; xs != 0; xs &= xs - 1) covered.insert(b & ~(xs & -xs));
  }
  return covered.size() == binomial(m.n(), m.r() - 1);
}

bool is_sparse_paving(const BasisMatroid& m) {
  return is_paving(m) && is_paving(dual(m));
}

SparsePavingMatroid to_sparse_paving(const BasisMatroid& m) {
  if (!is_sparse_paving(m)) throw InvalidArgument("matroid is not sparse paving");
  return SparsePavingMatroid::from_bits(m.n(), m.r(), m.nonbasis_bits());
}

uint64_t permute_bits(uint64_t bits, std::span<const int> perm) {
  uint64_t out = 0;
  for (uint64_t b = bits; b != 0; b &= b - 1) {
    out |= uint64_t{1} << (perm[std::countr_zero(b)] - 1);
  }
  return out;
}

namespace {

void check_perm(std::span<const int> perm, int n) {
  if (static_cast<int>(perm.size()) != n) {
    throw InvalidArgument("permutation has the wrong length");
  }
  uint64_t seen = 0;
  for (int p : perm) {
    if (p < 1 || p > n || (seen >> (p - 1)) & 1u) {
      throw InvalidArgument("not a permutation of [" + std::to_string(n) + "]");
    }
    seen |= uint64_t{1} << (p - 1);
  }
}

}  // namespace

SparsePavingMatroid permute(const SparsePavingMatroid& m,
                            std::span<const int> perm) {
  check_perm(perm, m.n());
  std::vector<uint64_t> out;
  for (uint64_t h : m.hyperplane_bits()) out.push_back(permute_bits(h, perm));
  return SparsePavingMatroid::from_bits(m.n(), m.r(), out);
}

BasisMatroid permute(const BasisMatroid& m, std::span<const int> perm) {
  check_perm(perm, m.n());
  std::vector<uint64_t> out;
  for (uint64_t b : m.basis_bits()) out.push_back(permute_bits(b, perm));
  return BasisMatroid::from_bits_unchecked(m.n(), m.r(), std::move(out));
}

}  // namespace spmat
