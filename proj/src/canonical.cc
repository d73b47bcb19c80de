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

#include "spmat/canonical.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <string>

#include "bits_internal.h"
#include "spmat/errors.h"
#include "spmat/johnson.h"

namespace spmat {
namespace {

// Minimal-image search. New labels 1..n are handed out in increasing order;
// once labels 1..k are placed, the relabelled nonbases inside [k] are
// exactly those with colex rank below C(k, r), so each level appends one
// block to the ascending rank list and the comparison with the incumbent
// is decided block by block.
class MinimalImageSearch {
 public:
  MinimalImageSearch(int n, int r, std::span<const uint64_t> nonbases)
      : n_(n), r_(r), family_(nonbases.begin(), nonbases.end()) {
    std::sort(family_.begin(), family_.end());
    containing_.resize(n_);
    for (size_t i = 0; i < family_.size(); ++i) {
      for (uint64_t b = family_[i]; b != 0; b &= b - 1) {
        containing_[std::countr_zero(b)].push_back(static_cast<int>(i));
      }
    }
    compute_twins();
    label_.assign(n_, 0);
    best_blocks_.resize(n_ + 1);
    scratch_.resize(n_ + 1);
    for (auto& b : best_blocks_) b.reserve(family_.size());
    for (auto& b : scratch_) b.reserve(family_.size());
  }

  CanonicalLabelling run() {
    descend(1, false);
    CanonicalLabelling out;
    for (int k = 1; k <= n_; ++k) {
      out.ranks.insert(out.ranks.end(), best_blocks_[k].begin(),
                       best_blocks_[k].end());
    }
    out.perm = best_label_;
    return out;
  }

 private:
  // x ~ y iff the transposition (x y) maps the family onto itself. This is
  // an equivalence relation; only the first unplaced member of a class
  // needs to be tried at any node.
  void compute_twins() {
    twin_rep_.resize(n_);
    for (int x = 0; x < n_; ++x) twin_rep_[x] = x;
    std::vector<int> perm(n_);
    for (int x = 0; x < n_; ++x) {
      if (twin_rep_[x] != x) continue;
      for (int y = x + 1; y < n_; ++y) {
        if (twin_rep_[y] != y) continue;
        for (int e = 0; e < n_; ++e) perm[e] = e + 1;
        std::swap(perm[x], perm[y]);
        bool fixed = true;
        for (uint64_t s : family_) {
          if (!internal::contains_sorted(family_, permute_bits(s, perm))) {
            fixed = false;
            break;
          }
        }
        if (fixed) twin_rep_[y] = x;
      }
    }
  }

  // -1: a is a better prefix than b, 0: equal, +1: worse.
  static int compare_blocks(const std::vector<uint64_t>& a,
                            const std::vector<uint64_t>& b) {
    const size_t m = std::min(a.size(), b.size());
    for (size_t i = 0; i < m; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    if (a.size() == b.size()) return 0;
    // The shorter side continues with a rank >= C(k, r), larger than the
    // extra entry of the longer side.
    return a.size() > b.size() ? -1 : 1;
  }

  bool inside_some_member(uint64_t placed) const {
    for (uint64_t s : family_) {
      if ((placed & ~s) == 0) return true;
    }
    return false;
  }

  // `improved`: the current path has defined or beaten the incumbent.
  void descend(int level, bool improved) {
    if (level > n_) {
      if (improved || best_label_.empty()) best_label_ = label_;
      return;
    }
    uint64_t tried_classes = 0;
    for (int x = 0; x < n_; ++x) {
      const uint64_t bit = uint64_t{1} << x;
      if (placed_ & bit) continue;
      const uint64_t cls = uint64_t{1} << twin_rep_[x];
      if (tried_classes & cls) continue;
      tried_classes |= cls;

      const uint64_t placed = placed_ | bit;
      // The optimum places a member on labels 1..r whenever one exists.
      if (level < r_ && !family_.empty() && !inside_some_member(placed)) {
        continue;
      }

      label_[x] = level;
      std::vector<uint64_t>& block = scratch_[level];
      block.clear();
      for (int idx : containing_[x]) {
        uint64_t s = family_[idx];
        if ((s & ~placed) == 0) {
          uint64_t image = 0;
          for (uint64_t b = s; b != 0; b &= b - 1) {
            image |= uint64_t{1} << (label_[std::countr_zero(b)] - 1);
          }
          block.push_back(colex_rank_bits(image));
        }
      }
      std::sort(block.begin(), block.end());

      bool child_improved = improved;
      if (defined_ < level) {
        best_blocks_[level] = block;
        defined_ = level;
        child_improved = true;
      } else {
        int cmp = compare_blocks(block, best_blocks_[level]);
        if (cmp > 0) {
          label_[x] = 0;
          continue;
        }
        if (cmp < 0) {
          best_blocks_[level] = block;
          defined_ = level;
          child_improved = true;
        }
      }

      placed_ = placed;
      descend(level + 1, child_improved);
      placed_ &= ~bit;
      label_[x] = 0;
      // Once a path has defined deeper levels, siblings compare against it.
      improved = false;
    }
  }

  int n_;
  int r_;
  std::vector<uint64_t> family_;
  std::vector<std::vector<int>> containing_;
  std::vector<int> twin_rep_;

  std::vector<int> label_;
  uint64_t placed_ = 0;

  std::vector<std::vector<uint64_t>> best_blocks_;
  std::vector<std::vector<uint64_t>> scratch_;
  int defined_ = 0;
  std::vector<int> best_label_;
};

void check_canonical_scale(int n) {
  if (n > kMaxCanonicalN) {
    throw ScaleLimitExceeded("canonical forms need n <= " +
                             std::to_string(kMaxCanonicalN) + ", got " +
                             std::to_string(n));
  }
}

}  // namespace

CanonicalLabelling canonical_labelling(int n, int r,
                                       std::span<const uint64_t> nonbases) {
  check_canonical_scale(n);
  if (r < 0 || r > n) throw InvalidArgument("invalid rank");
  return MinimalImageSearch(n, r, nonbases).run();
}

CanonicalForm canonical_form_from_ranks(int n, int r,
                                        std::span<const uint64_t> ranks) {
  const uint64_t total = binomial(n, r);
  CanonicalForm code;
  code.n = n;
  code.r = r;
  code.bytes.assign((total + 7) / 8, '\0');
  for (uint64_t i = 0; i < total; ++i) {
    code.bytes[i / 8] = static_cast<char>(
        static_cast<unsigned char>(code.bytes[i / 8]) | (0x80u >> (i % 8)));
  }
  for (uint64_t rank : ranks) {
    if (rank >= total) throw InvalidArgument("rank out of range");
    code.bytes[rank / 8] = static_cast<char>(
        static_cast<unsigned char>(code.bytes[rank / 8]) & ~(0x80u >> (rank % 8)));
  }
  return code;
}

CanonicalForm canonical_form(const BasisMatroid& m) {
  check_canonical_scale(m.n());
  std::vector<uint64_t> nonbases = m.nonbasis_bits();
  return canonical_form_from_ranks(
      m.n(), m.r(), canonical_labelling(m.n(), m.r(), nonbases).ranks);
}

CanonicalForm canonical_form(const SparsePavingMatroid& m) {
  check_canonical_scale(m.n());
  return canonical_form_from_ranks(
      m.n(), m.r(),
      canonical_labelling(m.n(), m.r(), m.hyperplane_bits()).ranks);
}

bool is_isomorphic(const BasisMatroid& a, const BasisMatroid& b) {
  if (a.n() != b.n() || a.r() != b.r() || a.basis_count() != b.basis_count()) {
    return false;
  }
  return canonical_form(a) == canonical_form(b);
}

bool is_isomorphic(const SparsePavingMatroid& a, const SparsePavingMatroid& b) {
  if (a.n() != b.n() || a.r() != b.r() ||
      a.hyperplane_count() != b.hyperplane_count()) {
    return false;
  }
  return canonical_form(a) == canonical_form(b);
}

std::string CanonicalForm::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (char ch : bytes) {
    auto c = static_cast<unsigned char>(ch);
    out += kDigits[c >> 4];
    out += kDigits[c & 0xf];
  }
  return out;
}

CanonicalForm CanonicalForm::from_hex(std::string_view hex, int n, int r) {
  if (n < 0 || n > kMaxCanonicalN || r < 0 || r > n) {
    throw ParseError("invalid (n, r) for a canonical code", 0);
  }
  const uint64_t total = binomial(n, r);
  const size_t want = 2 * ((total + 7) / 8);
  if (hex.size() != want) {
    throw ParseError("canonical code has " + std::to_string(hex.size()) +
                         " hex digits, expected " + std::to_string(want),
                     0);
  }
  CanonicalForm code;
  code.n = n;
  code.r = r;
  for (size_t i = 0; i < hex.size(); i += 2) {
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(hex.data() + i, hex.data() + i + 2, value, 16);
    if (ec != std::errc() || ptr != hex.data() + i + 2) {
      throw ParseError("bad hex digits in canonical code", 0);
    }
    code.bytes += static_cast<char>(value);
  }
  const unsigned tail_bits = total % 8;
  if (tail_bits != 0) {
    unsigned pad = 0xffu >> tail_bits;
    if (static_cast<unsigned char>(code.bytes.back()) & pad) {
      throw ParseError("canonical code has nonzero padding", 0);
    }
  }
  return code;
}

std::vector<uint64_t> CanonicalForm::nonbasis_ranks() const {
  const uint64_t total = binomial(n, r);
  std::vector<uint64_t> out;
  for (uint64_t i = 0; i < total; ++i) {
    if (!(static_cast<unsigned char>(bytes[i / 8]) & (0x80u >> (i % 8)))) {
      out.push_back(i);
    }
  }
  return out;
}

SparsePavingMatroid sparse_paving_from_code(const CanonicalForm& code) {
  std::vector<uint64_t> masks;
  for (uint64_t rank : code.nonbasis_ranks()) {
    masks.push_back(colex_unrank_bits(rank, code.r));
  }
  return SparsePavingMatroid::from_bits(code.n, code.r, masks);
}

}  // namespace spmat
