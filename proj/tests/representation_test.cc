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

#include <algorithm>
#include <bit>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.h"
#include "spmat/constructions.h"
#include "spmat/errors.h"
#include "spmat/johnson.h"
#include "spmat/matroid.h"
#include "spmat/representation.h"

using spmat::ElementSet;
using spmat::SparsePavingMatroid;

namespace {

std::vector<ElementSet> sets(int n, std::vector<std::vector<int>> lists) {
  std::vector<ElementSet> out;
  for (const auto& l : lists) out.push_back(ElementSet::from_elements(l, n));
  return out;
}

std::vector<ElementSet> as_sets(int n, const std::vector<uint64_t>& masks) {
  std::vector<ElementSet> out;
  for (uint64_t x : masks) out.emplace_back(x, n);
  return out;
}

}  // namespace

TEST_CASE("hall condition") {
  std::vector<ElementSet> none;
  CHECK(spmat::hall_condition(none, 4));
  CHECK(spmat::hall_condition(sets(8, {{1, 2, 3, 4}}), 4));
  CHECK(spmat::hall_condition(sets(8, {{1, 2, 3, 4}, {1, 2, 5, 6}}), 4));
  CHECK_FALSE(spmat::hall_condition(sets(8, {{1, 2, 3, 4}, {1, 2, 5, 6}, {1, 2, 7, 8}}), 4));
  CHECK_FALSE(spmat::hall_condition(as_sets(8, {0xf, 0x33, 0x3c, 0xc3, 0xcc}), 4));
  CHECK_THROWS_AS(spmat::hall_condition(sets(8, {{1, 2, 3}}), 4), spmat::InvalidArgument);
}

TEST_CASE("hall condition matches a subset oracle") {
  std::mt19937_64 g(2);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 6 + static_cast<int>(g() % 4);
    const int r = 2 + static_cast<int>(g() % (n - 3));
    auto h = oracle::random_stable_set(n, r, g);
    if (h.size() > 6) h.resize(6);
    bool want = true;
    for (uint32_t w = 0; w < (1u << h.size()); ++w) {
      if (std::popcount(w) < 2) continue;
      uint64_t inter = ~uint64_t{0};
      for (size_t i = 0; i < h.size(); ++i) {
        if (w & (1u << i)) inter &= h[i];
      }
      if (std::popcount(inter) > r - std::popcount(w)) want = false;
    }
    CHECK(spmat::hall_condition(as_sets(n, h), r) == want);
  }
}

TEST_CASE("zero pattern") {
  std::vector<ElementSet> none;
  auto p = spmat::build_pattern(none, 3, 6);
  CHECK(p.zero_rows.empty());
  for (int row = 1; row <= 3; ++row) {
    for (int e = 1; e <= 6; ++e) CHECK_FALSE(p.is_zero(row, e));
  }
  p = spmat::build_pattern(sets(6, {{1, 2, 3}}), 3, 6);
  CHECK(p.is_zero(1, 1));
  CHECK(p.is_zero(1, 3));
  CHECK_FALSE(p.is_zero(1, 4));
  CHECK_FALSE(p.is_zero(2, 1));
  p = spmat::build_pattern(sets(8, {{1, 2, 3, 4}, {5, 6, 7, 8}}), 4, 8);
  int zeros[5] = {0, 0, 0, 0, 0};
  for (int row = 1; row <= 4; ++row) {
    for (int e = 1; e <= 8; ++e) zeros[row] += p.is_zero(row, e);
  }
  CHECK(zeros[1] == 4);
  CHECK(zeros[2] == 4);
  CHECK(zeros[3] == 0);
  CHECK(zeros[4] == 0);
  CHECK_THROWS_AS(spmat::build_pattern(sets(8, {{1, 2, 3, 4}, {1, 2, 5, 6}, {1, 2, 7, 8}}), 4, 8),
                  spmat::InvalidArgument);
}

TEST_CASE("instantiation") {
  const auto p = spmat::build_pattern(sets(8, {{1, 2, 3, 4}, {1, 2, 5, 6}}), 4, 8);
  const auto a = spmat::instantiate(p, 5, 64);
  const auto b = spmat::instantiate(p, 5, 64);
  const auto c = spmat::instantiate(p, 6, 64);
  CHECK(a.entries() == b.entries());
  CHECK(a.entries() != c.entries());
  const mpz_class limit = mpz_class(1) << 64;
  for (int row = 1; row <= 4; ++row) {
    for (int e = 1; e <= 8; ++e) {
      CHECK((a.at(row, e) == 0) == p.is_zero(row, e));
      CHECK((c.at(row, e) == 0) == p.is_zero(row, e));
      CHECK(a.at(row, e) < limit);
      CHECK(a.at(row, e) >= 0);
    }
  }
  const auto wide = spmat::instantiate(p, 5, 200);
  bool big = false;
  for (const auto& x : wide.entries()) big = big || x > limit;
  CHECK(big);
  CHECK_THROWS_AS(spmat::instantiate(p, 5, 31), spmat::InvalidArgument);
}

TEST_CASE("fraction-free determinant matches the Leibniz expansion") {
  std::mt19937_64 g(12);
  for (int size = 1; size <= 6; ++size) {
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<mpz_class> m(size * size);
      for (auto& x : m) {
        x = static_cast<long>(g() % 21) - 10;
        if (g() % 4 == 0) x = 0;
      }
      if (trial % 5 == 0 && size > 1) {
        // Force a repeated row.
        for (int j = 0; j < size; ++j) m[size + j] = m[j];
      }
      CHECK(spmat::bareiss_determinant(m, size) == oracle::leibniz_det(m, size));
    }
  }
  // Large entries.
  std::vector<mpz_class> m(16);
  for (auto& x : m) {
    x = mpz_class(static_cast<unsigned long>(g()));
    x *= static_cast<unsigned long>(g());
  }
  CHECK(spmat::bareiss_determinant(m, 4) == oracle::leibniz_det(m, 4));
  CHECK(spmat::bareiss_determinant({}, 0) == 1);
}

TEST_CASE("verification") {
  const auto u = SparsePavingMatroid::uniform(3, 6).to_basis();
  std::vector<ElementSet> none;
  const auto p = spmat::build_pattern(none, 3, 6);
  bool ok = false;
  for (uint64_t seed = 1; seed <= 3 && !ok; ++seed) {
    ok = spmat::verify_represents(spmat::instantiate(p, seed, 64), u);
  }
  CHECK(ok);

  const auto m = SparsePavingMatroid::from_bits(6, 3, std::vector<uint64_t>{0x7, 0x38}).to_basis();
  const auto pm = spmat::build_pattern(as_sets(6, {0x7, 0x38}), 3, 6);
  const auto a = spmat::instantiate(pm, 3, 64);
  CHECK(spmat::bareiss_determinant(a.columns(ElementSet(0x7, 6)), 3) == 0);
  CHECK(spmat::bareiss_determinant(a.columns(ElementSet(0x38, 6)), 3) == 0);
  CHECK(spmat::verify_represents(a, m));
  // The same matrix does not represent U(3,6).
  CHECK_FALSE(spmat::verify_represents(a, u));
  const auto bad = spmat::find_representation_mismatch(a, u);
  REQUIRE(bad.has_value());
  CHECK((bad->bits() == 0x7 || bad->bits() == 0x38));
}

TEST_CASE("verification ignores column order and row scaling") {
  const auto h = as_sets(7, {0x7, 0x70});
  const auto m = SparsePavingMatroid::from_bits(7, 3, std::vector<uint64_t>{0x7, 0x70}).to_basis();
  const auto a = spmat::instantiate(spmat::build_pattern(h, 3, 7), 9, 64);
  REQUIRE(spmat::verify_represents(a, m));
  for (uint64_t s : oracle::r_subset_masks(7, 3)) {
    auto cols = a.columns(ElementSet(s, 7));
    const bool nonzero = spmat::bareiss_determinant(cols, 3) != 0;
    // Swap two columns.
    for (int row = 0; row < 3; ++row) std::swap(cols[row * 3], cols[row * 3 + 2]);
    CHECK((spmat::bareiss_determinant(cols, 3) != 0) == nonzero);
    // Scale a row.
    for (int j = 0; j < 3; ++j) cols[3 + j] *= -7;
    CHECK((spmat::bareiss_determinant(cols, 3) != 0) == nonzero);
  }
}

TEST_CASE("matchings") {
  std::vector<ElementSet> none;
  const auto free = spmat::build_pattern(none, 3, 6);
  CHECK(spmat::matching_exists(free, ElementSet({1, 2, 3}, 6)));
  const auto one = spmat::build_pattern(sets(6, {{1, 2, 3}}), 3, 6);
  CHECK_FALSE(spmat::matching_exists(one, ElementSet({1, 2, 3}, 6)));
  CHECK(spmat::matching_exists(one, ElementSet({1, 2, 4}, 6)));
}

TEST_CASE("matchings exist for every basis under the hall condition") {
  std::mt19937_64 g(77);
  int tested = 0;
  while (tested < 40) {
    const int n = 6 + static_cast<int>(g() % 4);
    const int r = 2 + static_cast<int>(g() % (n - 3));
    const auto h = oracle::random_stable_set(n, r, g);
    const auto hs = as_sets(n, h);
    if (!spmat::hall_condition(hs, r)) continue;
    ++tested;
    const auto p = spmat::build_pattern(hs, r, n);
    for (uint64_t s : oracle::r_subset_masks(n, r)) {
      const bool nonbasis = std::find(h.begin(), h.end(), s) != h.end();
      CHECK(spmat::matching_exists(p, ElementSet(s, n)) == !nonbasis);
    }
  }
}

TEST_CASE("represent") {
  const auto m = SparsePavingMatroid::from_bits(8, 4, std::vector<uint64_t>{0xf, 0x33}).to_basis();
  const auto res = spmat::represent(m, 7);
  CHECK(res.hall);
  CHECK(res.success);
  CHECK(res.bit_width == 64);
  REQUIRE(res.matrix.has_value());
  CHECK(spmat::verify_represents(*res.matrix, m));

  const auto v = spmat::represent(spmat::vamos().to_basis(), 7);
  CHECK_FALSE(v.hall);
  CHECK_FALSE(v.success);
  CHECK(v.attempts == 0);
  CHECK_FALSE(v.matrix.has_value());
}
