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

#include "spmat/element_set.h"

#include <charconv>
#include <string>

#include "spmat/errors.h"

namespace spmat {
namespace {

void check_n(int n) {
  if (n < 0 || n > kMaxGroundSet) {
    throw InvalidArgument("ground set size " + std::to_string(n) +
                          " outside [0, 64]");
  }
}

}  // namespace

ElementSet::ElementSet(uint64_t bits, int n) : bits_(bits), n_(n) {
  check_n(n);
  if (bits & ~ground_mask(n)) {
    throw InvalidArgument("mask " + mask_to_hex(bits) + " exceeds ground set [" +
                          std::to_string(n) + "]");
  }
}

ElementSet::ElementSet(std::initializer_list<int> elements, int n)
    : ElementSet(from_elements(std::vector<int>(elements), n)) {}

ElementSet ElementSet::from_elements(const std::vector<int>& elements, int n) {
  check_n(n);
  uint64_t bits = 0;
  for (int e : elements) {
    if (e < 1 || e > n) {
      throw InvalidArgument("element " + std::to_string(e) + " not in [" +
                            std::to_string(n) + "]");
    }
    bits |= uint64_t{1} << (e - 1);
  }
  return ElementSet(bits, n, 0);
}

ElementSet ElementSet::full(int n) {
  check_n(n);
  return ElementSet(ground_mask(n), n, 0);
}

ElementSet ElementSet::parse_hex(std::string_view text, int n) {
  if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
  if (text.empty() || text.size() > 16) {
    throw ParseError("bad hex mask '" + std::string(text) + "'", 0);
  }
  uint64_t bits = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   bits, 16);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("bad hex mask '" + std::string(text) + "'", 0);
  }
  if (bits & ~ground_mask(n)) {
    throw ParseError("mask " + std::string(text) + " exceeds ground set [" +
                         std::to_string(n) + "]",
                     0);
  }
  return ElementSet(bits, n, 0);
}

ElementSet ElementSet::parse(std::string_view text, int n) {
  if (!text.starts_with('{')) return parse_hex(text, n);
  if (!text.ends_with('}')) {
    throw ParseError("unterminated set '" + std::string(text) + "'", 0);
  }
  text = text.substr(1, text.size() - 2);
  std::vector<int> elements;
  while (!text.empty()) {
    size_t comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int e = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), e);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw ParseError("bad element '" + std::string(item) + "'", 0);
    }
    elements.push_back(e);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  try {
    return from_elements(elements, n);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), 0);
  }
}

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

ElementSet ElementSet::complement() const {
  return ElementSet(ground_mask(n_) & ~bits_, n_, 0);
}

ElementSet ElementSet::with(int e) const {
  if (e < 1 || e > n_) {
    throw InvalidArgument("element " + std::to_string(e) + " not in [" +
                          std::to_string(n_) + "]");
  }
  return ElementSet(bits_ | (uint64_t{1} << (e - 1)), n_, 0);
}

ElementSet ElementSet::without(int e) const {
  if (e < 1 || e > n_) return *this;
  return ElementSet(bits_ & ~(uint64_t{1} << (e - 1)), n_, 0);
}

std::string ElementSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

std::string ElementSet::to_hex() const { return mask_to_hex(bits_); }

std::string mask_to_hex(uint64_t bits) {
  char buf[17];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), bits, 16);
  return std::string(buf, ptr);
}

}  // namespace spmat
