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

#ifndef SPMAT_ELEMENT_SET_H_
#define SPMAT_ELEMENT_SET_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace spmat {

inline constexpr int kMaxGroundSet = 64;

// A subset of the ground set [n] = {1, ..., n}, n <= 64. Element i is stored
// in bit i - 1.
class ElementSet {
 public:
  constexpr ElementSet() = default;

  // Throws InvalidArgument if n is out of range or bits beyond n are set.
  ElementSet(uint64_t bits, int n);
  ElementSet(std::initializer_list<int> elements, int n);

  static ElementSet from_elements(const std::vector<int>& elements, int n);
  static ElementSet full(int n);

  // Parses "{1,2,5}" or a lowercase/uppercase hex mask such as "33".
  static ElementSet parse(std::string_view text, int n);
  static ElementSet parse_hex(std::string_view text, int n);

  constexpr uint64_t bits() const { return bits_; }
  constexpr int n() const { return n_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const {
    return e >= 1 && e <= n_ && ((bits_ >> (e - 1)) & 1u);
  }
  constexpr bool is_subset_of(const ElementSet& other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  std::vector<int> elements() const;
  ElementSet complement() const;

  ElementSet with(int e) const;
  ElementSet without(int e) const;

  // "{1,2,5,6}"
  std::string to_string() const;
  // Lowercase hex of the mask without prefix, "0" for the empty set.
  std::string to_hex() const;

  friend ElementSet operator|(const ElementSet& a, const ElementSet& b) {
    return ElementSet(a.bits_ | b.bits_, a.n_ > b.n_ ? a.n_ : b.n_, 0);
  }
  friend ElementSet operator&(const ElementSet& a, const ElementSet& b) {
    return ElementSet(a.bits_ & b.bits_, a.n_ > b.n_ ? a.n_ : b.n_, 0);
  }
  friend ElementSet operator-(const ElementSet& a, const ElementSet& b) {
    return ElementSet(a.bits_ & ~b.bits_, a.n_, 0);
  }
  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.bits_ == b.bits_;
  }
  friend std::strong_ordering operator<=>(const ElementSet& a,
                                          const ElementSet& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  // Unchecked.
  constexpr ElementSet(uint64_t bits, int n, int) : bits_(bits), n_(n) {}

  uint64_t bits_ = 0;
  int n_ = 0;
};

// Mask with the low n bits set.
constexpr uint64_t ground_mask(int n) {
  return n >= 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
}

std::string mask_to_hex(uint64_t bits);

}  // namespace spmat

#endif  // SPMAT_ELEMENT_SET_H_
