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

#ifndef SPMAT_RANDOMIZED_H_
#define SPMAT_RANDOMIZED_H_

#include <cstdint>
#include <span>
#include <vector>

#include "spmat/rng.h"

namespace spmat {

// 1 - x/2 - x^4/64
double f_of(double x);

struct CountingParams {
  int n = 0;
  int r = 0;
  double c = 0;
  double gamma = 0;
  double alpha = 0;
  double epsilon = 0;
  uint64_t vertices = 0;  // N
  uint64_t valency = 0;   // d
  uint64_t k = 0;         // floor(c N / d)
};

// alpha is the midpoint of (gamma / c, f(c)). Requires 0 < gamma < c f(c).
CountingParams make_params(int n, int r, double c, double gamma);

// Uniform k-subset of [0, N) as ascending colex ranks.
std::vector<uint64_t> sample_h(const CountingParams& params, uint64_t seed);

// Unordered pairs of members meeting in r - 1 elements.
uint64_t count_edges(std::span<const uint64_t> family, int r);

struct OmegaCounts {
  uint64_t b5 = 0;
  uint64_t b6 = 0;
  friend bool operator==(const OmegaCounts&, const OmegaCounts&) = default;
};

// Patterns meeting the family in exactly five / six sets (opposite-pair scan).
OmegaCounts count_omega_hits(std::span<const uint64_t> family, int n, int r);
// The same counts by visiting every pattern; small n only.
OmegaCounts count_omega_hits_direct(std::span<const uint64_t> family, int n,
                                    int r);

// Greedy removal until no edges and no 5- or 6-hit patterns remain. Each
// removal lowers e + b5 + 2 b6 by at least one.
std::vector<uint64_t> prune_to_good(std::span<const uint64_t> family, int n,
                                    int r);

struct SampleStats {
  uint64_t seed = 0;
  uint64_t e_h = 0;
  uint64_t b5 = 0;
  uint64_t b6 = 0;
  uint64_t w_size = 0;
  bool good = false;           // W rechecked: no edges, no 5/6 patterns
  bool ingleton_sp = false;    // W accepted by the sparse paving constructor
                               // and the fast checker
  std::vector<uint64_t> w;     // pruned family as masks
};

struct TrialSummary {
  CountingParams params;
  std::vector<SampleStats> trials;
  double mean_e = 0, var_e = 0;
  double mean_b5 = 0, var_b5 = 0;
  double mean_b6 = 0, var_b6 = 0;
  double mean_w = 0;
  double bound_e = 0;   // c k / 2
  double bound_b5 = 0;  // c^4 k / 64
  double threshold = 0; // (1 - alpha) k
  double fraction_below_threshold = 0;
  double exponent_bits = 0;  // gamma log2(d) / d * N
  // log2 of C(N, k) / C(N, floor((1 - alpha) k)), without the (1 - o(1))
  // factor.
  double log2_nu = 0;
  bool all_good = true;
  bool pruning_bound_holds = true;

  // mean <= bound + 3 sd / sqrt(trials)
  bool e_within_bound() const;
  bool b5_within_bound() const;
};

double log2_binomial(double n, double k);

SampleStats run_trial(const CountingParams& params, uint64_t seed);
TrialSummary run_trials(const CountingParams& params, int trials,
                        uint64_t seed0, int jobs = 1);

}  // namespace spmat

#endif  // SPMAT_RANDOMIZED_H_
