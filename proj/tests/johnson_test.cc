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

#include <vector>

#include "doctest.h"
#include "oracles.h"
#include "spmat/element_set.h"
#include "spmat/errors.h"
#include "spmat/johnson.h"

using spmat::ElementSet;

TEST_CASE("element set text forms") {
  ElementSet s({1, 2, 5, 6}, 8);
  CHECK(s.to_string() == "{1,2,5,6}");
  CHECK(s.to_hex() == "33");
  CHECK(ElementSet::parse("{1,2,5,6}", 8) == s);
  CHECK(ElementSet::parse("33", 8) == s);
  CHECK(ElementSet::parse("{}", 8).empty());
  CHECK(ElementSet(0, 8).to_hex() == "0");
  CHECK(s.size() == 4);
  CHECK(s.contains(5));
  CHECK_FALSE(s.contains(3));
  CHECK(s.complement() == ElementSet({3, 4, 7, 8}, 8));
  CHECK_THROWS_AS(ElementSet(0x100, 8), spmat::InvalidArgument);
  CHECK_THROWS_AS(ElementSet({9}, 8), spmat::InvalidArgument);
  CHECK_THROWS(ElementSet::parse("{1,x}", 8));
  CHECK_THROWS(ElementSet::parse("zz", 8));
}

TEST_CASE("colex rank examples") {
  CHECK(spmat::colex_rank(ElementSet({1, 2, 3}, 5), 3).rank == 0);
  CHECK(spmat::colex_rank(ElementSet({3, 4, 5}, 5), 3).rank == 9);
  CHECK(spmat::colex_rank(ElementSet({1, 2, 4}, 5), 3).rank == 1);
  CHECK(spmat::colex_unrank(0, 5, 3) == ElementSet({1, 2, 3}, 5));
  CHECK(spmat::colex_unrank(9, 5, 3) == ElementSet({3, 4, 5}, 5));
  CHECK(spmat::colex_unrank(1, 5, 3) == ElementSet({1, 2, 4}, 5));
  CHECK_THROWS_AS(spmat::colex_rank(ElementSet({1, 2}, 5), 3),
                  spmat::InvalidArgument);
  CHECK_THROWS_AS(spmat::colex_unrank(10, 5, 3), spmat::InvalidArgument);
}

TEST_CASE("colex order matches the sorted enumeration") {
  for (int n = 1; n <= 10; ++n) {
    for (int r = 0; r <= n; ++r) {
      const auto subsets = oracle::colex_subsets(n, r);
      REQUIRE(subsets.size() == spmat::binomial(n, r));
      for (size_t i = 0; i < subsets.size(); ++i) {
        const ElementSet s = ElementSet::from_elements(subsets[i], n);
        CHECK(spmat::colex_rank(s, r).rank == i);
        CHECK(spmat::colex_unrank(i, n, r) == s);
      }
    }
  }
}

TEST_CASE("colex round trip up to n = 12") {
  for (int n = 1; n <= 12; ++n) {
    for (int r = 1; r <= n; ++r) {
      const uint64_t total = spmat::binomial(n, r);
      for (uint64_t i = 0; i < total; ++i) {
        REQUIRE(spmat::colex_rank(spmat::colex_unrank(i, n, r), r).rank == i);
      }
    }
  }
}

TEST_CASE("binomial range") {
  CHECK(spmat::binomial(64, 32) == 1832624140942590534ull);
  CHECK(spmat::binomial(5, 7) == 0);
  CHECK_THROWS_AS(spmat::binomial(70, 35), spmat::InvalidArgument);
}

TEST_CASE("adjacency and params") {
  CHECK(spmat::johnson_adjacent(ElementSet({1, 2, 3}, 6), ElementSet({1, 2, 4}, 6), 3));
  CHECK_FALSE(spmat::johnson_adjacent(ElementSet({1, 2, 3}, 6), ElementSet({1, 2, 3}, 6), 3));
  CHECK_FALSE(spmat::johnson_adjacent(ElementSet({1, 2, 3, 4}, 8),
                                      ElementSet({1, 2, 5, 6}, 8), 4));
  CHECK_THROWS_AS(spmat::johnson_adjacent(ElementSet({1, 2}, 6),
                                          ElementSet({1, 2, 4}, 6), 3),
                  spmat::InvalidArgument);

  auto p = spmat::johnson_params(8, 4);
  CHECK(p.vertices == 70);
  CHECK(p.valency == 16);
  p = spmat::johnson_params(12, 6);
  CHECK(p.vertices == 924);
  CHECK(p.valency == 36);
  p = spmat::johnson_params(9, 1);
  CHECK(p.vertices == 9);
  CHECK(p.valency == 8);
  CHECK_THROWS_AS(spmat::johnson_params(5, 0), spmat::InvalidArgument);
  CHECK_THROWS_AS(spmat::johnson_params(5, 5), spmat::InvalidArgument);
}

TEST_CASE("stability") {
  const int n = 8;
  std::vector<ElementSet> empty;
  CHECK(spmat::is_stable(empty, 4));
  std::vector<ElementSet> ok = {ElementSet({1, 2, 3, 4}, n), ElementSet({1, 2, 5, 6}, n)};
  CHECK(spmat::is_stable(ok, 4));
  std::vector<ElementSet> bad = {ElementSet({1, 2, 3, 4}, n), ElementSet({1, 2, 3, 5}, n)};
  CHECK_FALSE(spmat::is_stable(bad, 4));
  std::vector<ElementSet> mixed = {ElementSet({1, 2, 3, 4}, n), ElementSet({1, 2}, n)};
  CHECK_THROWS_AS(spmat::is_stable(mixed, 4), spmat::InvalidArgument);
}

TEST_CASE("johnson graph is regular, symmetric and irreflexive") {
  for (int n = 2; n <= 10; ++n) {
    for (int r = 1; r < n; ++r) {
      spmat::JohnsonGraph g(n, r);
      const auto masks = oracle::r_subset_masks(n, r);
      REQUIRE(g.vertex_count() == static_cast<int>(masks.size()));
      for (int u = 0; u < g.vertex_count(); ++u) {
        REQUIRE(g.vertex(u) == masks[u]);
        int degree = 0;
        for (uint64_t w : g.neighbours(u)) degree += std::popcount(w);
        REQUIRE(degree == r * (n - r));
        REQUIRE_FALSE(g.adjacent(u, u));
      }
      if (n <= 8) {
        for (int u = 0; u < g.vertex_count(); ++u) {
          for (int v = 0; v < g.vertex_count(); ++v) {
            REQUIRE(g.adjacent(u, v) == g.adjacent(v, u));
            REQUIRE(g.adjacent(u, v) == oracle::adjacent(masks[u], masks[v], r));
          }
        }
      }
    }
  }
}
