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

#include "spmat/constructions.h"

#include <bit>
#include <charconv>
#include <string>

#include "bits_internal.h"
#include "spmat/errors.h"
#include "spmat/johnson.h"

namespace spmat {
namespace {

int color_bits(uint64_t bits, int n) {
  int sum = 0;
  for (uint64_t b = bits; b != 0; b &= b - 1) sum += std::countr_zero(b) + 1;
  return sum % n;
}

void check_gs_params(int n, int r) {
  if (r <= 0 || r >= n || n >= kMaxGroundSet) {
    throw InvalidArgument("Graham-Sloane construction needs 0 < r < n < 64, got (" +
                          std::to_string(n) + ", " + std::to_string(r) + ")");
  }
  if (binomial(n, r) > (uint64_t{1} << 24)) {
    throw ScaleLimitExceeded("C(n, r) too large to enumerate colour classes");
  }
}

int parse_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidArgument("bad integer '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

int gs_color(const ElementSet& x, int n) {
  if (n <= 0) throw InvalidArgument("gs_color needs n > 0");
  if (x.bits() & ~ground_mask(n)) throw InvalidArgument("set exceeds [n]");
  return color_bits(x.bits(), n);
}

GsColoring gs_coloring(int n, int r) {
  check_gs_params(n, r);
  GsColoring out{n, r, std::vector<uint64_t>(n, 0)};
  internal::for_each_k_subset(n, r,
                              [&](uint64_t s) { ++out.class_sizes[color_bits(s, n)]; });
  return out;
}

SparsePavingMatroid gs_matroid(int n, int r, int gamma) {
  check_gs_params(n, r);
  if (gamma < 0 || gamma >= n) {
    throw InvalidArgument("colour " + std::to_string(gamma) + " not in Z_" +
                          std::to_string(n));
  }
  std::vector<uint64_t> cls;
  internal::for_each_k_subset(n, r, [&](uint64_t s) {
    if (color_bits(s, n) == gamma) cls.push_back(s);
  });
  return SparsePavingMatroid::from_bits(n, r, cls);
}

std::pair<int, SparsePavingMatroid> gs_best(int n, int r) {
  GsColoring coloring = gs_coloring(n, r);
  int best = 0;
  for (int g = 1; g < n; ++g) {
    if (coloring.class_sizes[g] > coloring.class_sizes[best]) best = g;
  }
  return {best, gs_matroid(n, r, best)};
}

SparsePavingMatroid vamos() {
  const int n = 8;
  std::vector<ElementSet> ch = {
      ElementSet({1, 2, 3, 4}, n), ElementSet({1, 2, 5, 6}, n),
      ElementSet({1, 2, 7, 8}, n), ElementSet({3, 4, 5, 6}, n),
      ElementSet({3, 4, 7, 8}, n)};
  return SparsePavingMatroid(n, 4, ch);
}

BasisMatroid u02_plus_u11() {
  std::vector<ElementSet> bases = {ElementSet({3}, 3)};
  return BasisMatroid(3, 1, bases);
}

BasisMatroid u22_plus_u01() {
  std::vector<ElementSet> bases = {ElementSet({1, 2}, 3)};
  return BasisMatroid(3, 2, bases);
}

NamedMatroid named(std::string_view name) {
  if (name == "vamos") return vamos();
  if (name == "u02_plus_u11") return u02_plus_u11();
  if (name == "u22_plus_u01") return u22_plus_u01();
  if (name.starts_with("uniform:")) {
    std::string_view args = name.substr(8);
    size_t comma = args.find(',');
    if (comma == std::string_view::npos) {
      throw InvalidArgument("expected uniform:<r>,<n>");
    }
    int r = parse_int(args.substr(0, comma));
    int n = parse_int(args.substr(comma + 1));
    if (n < 0 || n > kMaxGroundSet || r < 0 || r > n) {
      throw InvalidArgument("uniform matroid needs 0 <= r <= n <= 64");
    }
    return SparsePavingMatroid::uniform(r, n);
  }
  throw InvalidArgument("unknown matroid name '" + std::string(name) + "'");
}

BasisMatroid as_basis(const NamedMatroid& m) {
  if (const auto* sp = std::get_if<SparsePavingMatroid>(&m)) return sp->to_basis();
  return std::get<BasisMatroid>(m);
}

}  // namespace spmat
