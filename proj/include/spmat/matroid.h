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

#ifndef SPMAT_MATROID_H_
#define SPMAT_MATROID_H_

#include <cstdint>
#include <span>
#include <vector>

#include "spmat/element_set.h"

namespace spmat {

class BasisMatroid;

// A sparse paving matroid of rank r on [n], stored by its circuit-hyperplanes
// (equivalently, its nonbases). Members are kept sorted by mask.
class SparsePavingMatroid {
 public:
  // Validates sizes and stability. On failure the InvalidArgument message
  // names the offending set or pair.
  SparsePavingMatroid(int n, int r, std::span<const ElementSet> hyperplanes);
  static SparsePavingMatroid from_bits(int n, int r,
                                       std::span<const uint64_t> hyperplanes);
  static SparsePavingMatroid uniform(int r, int n);

  int n() const { return n_; }
  int r() const { return r_; }
  std::span<const uint64_t> hyperplane_bits() const { return ch_; }
  std::vector<ElementSet> hyperplanes() const;
  int hyperplane_count() const { return static_cast<int>(ch_.size()); }
  bool is_hyperplane(uint64_t bits) const;

  int rank(const ElementSet& s) const;
  int rank_bits(uint64_t bits) const;

  BasisMatroid to_basis() const;

  friend bool operator==(const SparsePavingMatroid&,
                         const SparsePavingMatroid&) = default;

 private:
  SparsePavingMatroid() = default;

  int n_ = 0;
  int r_ = 0;
  std::vector<uint64_t> ch_;
};

// A matroid given by its family of bases. Loops and coloops need no special
// handling. Members are kept sorted by mask.
class BasisMatroid {
 public:
  // Validates cardinalities and the basis-exchange axiom.
  BasisMatroid(int n, int r, std::span<const ElementSet> bases);
  static BasisMatroid from_bits(int n, int r, std::span<const uint64_t> bases);
  // Skips the exchange check; the caller guarantees a valid basis family.
  static BasisMatroid from_bits_unchecked(int n, int r,
                                          std::vector<uint64_t> bases);

  int n() const { return n_; }
  int r() const { return r_; }
  std::span<const uint64_t> basis_bits() const { return bases_; }
  std::vector<ElementSet> bases() const;
  int basis_count() const { return static_cast<int>(bases_.size()); }
  bool is_basis(uint64_t bits) const;

  // All r-subsets that are not bases, sorted by mask.
  std::vector<uint64_t> nonbasis_bits() const;

  // max over bases B of |B ∩ S|.
  int rank(const ElementSet& s) const;
  int rank_bits(uint64_t bits) const;

  friend bool operator==(const BasisMatroid&, const BasisMatroid&) = default;

 private:
  BasisMatroid() = default;

  int n_ = 0;
  int r_ = 0;
  std::vector<uint64_t> bases_;
};

// Basis-exchange axiom on an arbitrary family. Throws on an empty family or
// mixed cardinalities.
bool exchange_check(std::span<const ElementSet> bases);
bool exchange_check_bits(std::span<const uint64_t> bases);

BasisMatroid dual(const BasisMatroid& m);

// Single-element minors; the remaining elements are relabelled onto [n - 1]
// preserving order. Deleting a coloop lowers the rank.
BasisMatroid delete_element(const BasisMatroid& m, int e);
BasisMatroid contract_element(const BasisMatroid& m, int e);

SparsePavingMatroid relax(const SparsePavingMatroid& m, const ElementSet& x);

bool is_paving(const BasisMatroid& m);
bool is_sparse_paving(const BasisMatroid& m);

// Throws InvalidArgument unless is_sparse_paving(m).
SparsePavingMatroid to_sparse_paving(const BasisMatroid& m);

// Image of the matroid under the relabelling e -> perm[e - 1].
SparsePavingMatroid permute(const SparsePavingMatroid& m,
                            std::span<const int> perm);
BasisMatroid permute(const BasisMatroid& m, std::span<const int> perm);

// Image of a single mask under e -> perm[e - 1].
uint64_t permute_bits(uint64_t bits, std::span<const int> perm);

}  // namespace spmat

#endif  // SPMAT_MATROID_H_
