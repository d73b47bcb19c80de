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
#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "oracles.h"
#include "spmat/constructions.h"
#include "spmat/errors.h"
#include "spmat/ingleton.h"
#include "spmat/johnson.h"
#include "spmat/matroid.h"
#include "spmat/randomized.h"
#include "spmat/rng.h"

namespace {

std::vector<uint64_t> ranks_to_masks(const std::vector<uint64_t>& ranks, int r) {
  std::vector<uint64_t> out;
  for (uint64_t x : ranks) out.push_back(spmat::colex_unrank_bits(x, r));
  return out;
}

uint64_t oracle_edges(const std::vector<uint64_t>& h, int r) {
  uint64_t e = 0;
  for (size_t i = 0; i < h.size(); ++i) {
    for (size_t j = i + 1; j < h.size(); ++j) e += oracle::adjacent(h[i], h[j], r);
  }
  return e;
}

}  // namespace

TEST_CASE("f") {
  CHECK(spmat::f_of(0) == 1.0);
  CHECK(spmat::f_of(0.95) == doctest::Approx(1 - 0.475 - 0.81450625 / 64).epsilon(1e-12));
  CHECK(spmat::f_of(0.95) == doctest::Approx(0.5122733).epsilon(1e-6));
  CHECK(0.486 / 0.95 < spmat::f_of(0.95));
}

TEST_CASE("parameters") {
  auto p = spmat::make_params(12, 6, 0.95, 0.486);
  CHECK(p.vertices == 924);
  CHECK(p.valency == 36);
  CHECK(p.k == 24);
  CHECK(p.alpha == doctest::Approx((0.486 / 0.95 + spmat::f_of(0.95)) / 2));
  CHECK(p.epsilon == doctest::Approx(spmat::f_of(0.95) - p.alpha));
  CHECK(p.gamma / p.c < p.alpha);
  CHECK(p.alpha < spmat::f_of(p.c));
  p = spmat::make_params(8, 4, 0.95, 0.486);
  CHECK(p.k == 4);
  CHECK_THROWS_AS(spmat::make_params(8, 4, 2.0, 2.0 * spmat::f_of(2.0)), spmat::InvalidArgument);
  CHECK_THROWS_AS(spmat::make_params(8, 4, 0.95, 0.6), spmat::InvalidArgument);
}

TEST_CASE("rng is reproducible") {
  spmat::Rng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const uint64_t x = a.next();
    CHECK(x == b.next());
    differs = differs || x != c.next();
  }
  CHECK(differs);
  for (int i = 0; i < 1000; ++i) {
    CHECK(a.below(7) < 7);
    const double u = a.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("sampling") {
  auto p = spmat::make_params(8, 4, 0.95, 0.486);
  const auto h = spmat::sample_h(p, 3);
  CHECK(h.size() == p.k);
  CHECK(std::is_sorted(h.begin(), h.end()));
  CHECK(std::adjacent_find(h.begin(), h.end()) == h.end());
  CHECK(spmat::sample_h(p, 3) == h);

  p.k = p.vertices;
  std::vector<uint64_t> all(p.vertices);
  for (uint64_t i = 0; i < p.vertices; ++i) all[i] = i;
  CHECK(spmat::sample_h(p, 1) == all);
  p.k = 0;
  CHECK(spmat::sample_h(p, 1).empty());
  p.k = p.vertices + 1;
  CHECK_THROWS_AS(spmat::sample_h(p, 1), spmat::InvalidArgument);
}

TEST_CASE("inclusion frequencies are binomial") {
  auto p = spmat::make_params(8, 4, 0.95, 0.486);
  p.k = 10;
  const int seeds = 10000;
  std::vector<int> hits(p.vertices, 0);
  for (int s = 0; s < seeds; ++s) {
    for (uint64_t v : spmat::sample_h(p, s)) ++hits[v];
  }
  const double q = static_cast<double>(p.k) / static_cast<double>(p.vertices);
  const double mean = seeds * q;
  const double sd = std::sqrt(seeds * q * (1 - q));
  int outside = 0;
  for (int h : hits) outside += std::abs(h - mean) > 3 * sd;
  // 70 vertices; a 3-sigma excursion has probability about 0.27% each.
  CHECK(outside <= 2);
  for (int h : hits) CHECK(std::abs(h - mean) <= 4.5 * sd);
}

TEST_CASE("edge counts") {
  const auto v8 = spmat::vamos();
  const std::vector<uint64_t> stable(v8.hyperplane_bits().begin(), v8.hyperplane_bits().end());
  CHECK(spmat::count_edges(stable, 4) == 0);
  CHECK(spmat::count_edges(std::vector<uint64_t>{0xf, 0x17}, 4) == 1);
  // Five 4-sets sharing {1,2,3}.
  std::vector<uint64_t> clique;
  for (int e = 4; e <= 8; ++e) clique.push_back(0x7 | (uint64_t{1} << (e - 1)));
  CHECK(spmat::count_edges(clique, 4) == 10);

  auto p = spmat::make_params(10, 5, 0.95, 0.486);
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const auto h = ranks_to_masks(spmat::sample_h(p, seed), 5);
    CHECK(spmat::count_edges(h, 5) == oracle_edges(h, 5));
  }
}

TEST_CASE("omega hit counts") {
  const auto v8 = spmat::vamos();
  std::vector<uint64_t> h(v8.hyperplane_bits().begin(), v8.hyperplane_bits().end());
  CHECK(spmat::count_omega_hits(h, 8, 4) == spmat::OmegaCounts{1, 0});
  h.push_back(0xf0);
  CHECK(spmat::count_omega_hits(h, 8, 4) == spmat::OmegaCounts{0, 1});
}

TEST_CASE("omega counts match direct enumeration") {
  for (auto [n, r] : {std::pair{8, 4}, {9, 5}}) {
    auto p = spmat::make_params(n, r, 0.95, 0.486);
    for (uint64_t seed = 0; seed < 100; ++seed) {
      // Denser samples than k so that patterns actually occur.
      p.k = 12 + seed % 20;
      const auto h = ranks_to_masks(spmat::sample_h(p, seed), r);
      const auto want = oracle::omega_counts(h, n, r);
      const auto got = spmat::count_omega_hits(h, n, r);
      REQUIRE(got.b5 == want[0]);
      REQUIRE(got.b6 == want[1]);
      REQUIRE(spmat::count_omega_hits_direct(h, n, r) == got);
    }
  }
}

TEST_CASE("pruning") {
  const auto v8 = spmat::vamos();
  std::vector<uint64_t> clean = {0xf, 0xf0};
  CHECK(spmat::prune_to_good(clean, 8, 4) == clean);

  std::vector<uint64_t> six(v8.hyperplane_bits().begin(), v8.hyperplane_bits().end());
  six.push_back(0xf0);
  // Isolated extra vertices at n = 10.
  std::vector<uint64_t> h = six;
  h.push_back((0x3c0 & ~uint64_t{0x40}) | 0x1);  // {1,8,9,10}
  std::sort(h.begin(), h.end());
  const auto w = spmat::prune_to_good(h, 10, 4);
  CHECK(w.size() + 2 >= h.size());
  CHECK(spmat::count_edges(w, 4) == 0);
  CHECK(spmat::count_omega_hits(w, 10, 4) == spmat::OmegaCounts{0, 0});
  CHECK(std::includes(h.begin(), h.end(), w.begin(), w.end()));
}

TEST_CASE("pruned sets are good and meet the bound") {
  for (auto [n, r] : {std::pair{8, 4}, {10, 5}, {12, 6}}) {
    auto p = spmat::make_params(n, r, 0.95, 0.486);
    p.k = std::min<uint64_t>(p.vertices / 3, 3 * p.k);
    for (uint64_t seed = 0; seed < 25; ++seed) {
      const auto h = ranks_to_masks(spmat::sample_h(p, seed), r);
      const auto e = spmat::count_edges(h, r);
      const auto b = spmat::count_omega_hits(h, n, r);
      auto sorted = h;
      std::sort(sorted.begin(), sorted.end());
      const auto w = spmat::prune_to_good(sorted, n, r);
      CHECK(w.size() + e + b.b5 + 2 * b.b6 >= h.size());
      CHECK(oracle_edges(w, r) == 0);
      CHECK(spmat::count_omega_hits(w, n, r) == spmat::OmegaCounts{0, 0});
      const auto m = spmat::SparsePavingMatroid::from_bits(n, r, w);
      CHECK_FALSE(spmat::ingleton_fast_sp(m));
    }
  }
}

TEST_CASE("trials") {
  const auto p = spmat::make_params(12, 6, 0.95, 0.486);
  const auto a = spmat::run_trials(p, 20, 100, 1);
  const auto b = spmat::run_trials(p, 20, 100, 3);
  REQUIRE(a.trials.size() == 20);
  for (size_t i = 0; i < a.trials.size(); ++i) {
    CHECK(a.trials[i].seed == 100 + i);
    CHECK(a.trials[i].e_h == b.trials[i].e_h);
    CHECK(a.trials[i].w == b.trials[i].w);
    CHECK(a.trials[i].good);
    CHECK(a.trials[i].ingleton_sp);
  }
  CHECK(a.mean_e == b.mean_e);
  CHECK(a.bound_e == doctest::Approx(0.95 * 24 / 2));
  CHECK(a.bound_b5 == doctest::Approx(std::pow(0.95, 4) * 24 / 64));
  CHECK(a.exponent_bits == doctest::Approx(0.486 * std::log2(36.0) / 36 * 924));
  CHECK(a.exponent_bits == doctest::Approx(64.49).epsilon(1e-3));
  CHECK(a.all_good);
  CHECK(a.pruning_bound_holds);
  const auto single = spmat::run_trial(p, 105);
  CHECK(single.e_h == a.trials[5].e_h);
  CHECK(single.w == a.trials[5].w);
  CHECK_THROWS_AS(spmat::run_trials(p, 0, 1), spmat::InvalidArgument);
}
