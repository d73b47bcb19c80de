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

#include "spmat/randomized.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <unordered_map>

#include "bits_internal.h"
#include "parallel_internal.h"
#include "spmat/errors.h"
#include "spmat/ingleton.h"
#include "spmat/johnson.h"
#include "spmat/matroid.h"

namespace spmat {

double f_of(double x) { return 1.0 - 0.5 * x - std::pow(x, 4) / 64.0; }

CountingParams make_params(int n, int r, double c, double gamma) {
  const JohnsonParams jp = johnson_params(n, r);
  if (!(c > 0)) throw InvalidArgument("c must be positive");
  const double fc = f_of(c);
  if (!(gamma > 0) || !(gamma < c * fc)) {
    throw InvalidArgument("need 0 < gamma < c f(c) = " + std::to_string(c * fc) +
                          ", got gamma = " + std::to_string(gamma));
  }
  CountingParams p;
  p.n = n;
  p.r = r;
  p.c = c;
  p.gamma = gamma;
  p.alpha = (gamma / c + fc) / 2.0;
  p.epsilon = fc - p.alpha;
  p.vertices = jp.vertices;
  p.valency = jp.valency;
  p.k = static_cast<uint64_t>(
      std::floor(c * static_cast<double>(jp.vertices) / static_cast<double>(jp.valency)));
  if (p.k > p.vertices) throw InvalidArgument("k exceeds the number of vertices");
  return p;
}

std::vector<uint64_t> sample_h(const CountingParams& params, uint64_t seed) {
  if (params.k > params.vertices) throw InvalidArgument("k exceeds N");
  Rng rng(seed);
  // Partial Fisher-Yates over [0, N) with the permuted prefix kept sparse.
  std::unordered_map<uint64_t, uint64_t> moved;
  auto at = [&](uint64_t i) {
    auto it = moved.find(i);
    return it == moved.end() ? i : it->second;
  };
  std::vector<uint64_t> out;
  out.reserve(params.k);
  for (uint64_t i = 0; i < params.k; ++i) {
    const uint64_t j = i + rng.below(params.vertices - i);
    const uint64_t vi = at(i);
    const uint64_t vj = at(j);
    moved[j] = vi;
    moved[i] = vj;
    out.push_back(vj);
  }
  std::sort(out.begin(), out.end());
  return out;
}

uint64_t count_edges(std::span<const uint64_t> family, int r) {
  uint64_t edges = 0;
  for (size_t i = 0; i < family.size(); ++i) {
    for (size_t j = i + 1; j < family.size(); ++j) {
      edges += std::popcount(family[i] & family[j]) == r - 1;
    }
  }
  return edges;
}

OmegaCounts count_omega_hits(std::span<const uint64_t> family, int n, int r) {
  OmegaCounts out;
  for (const OmegaHit& hit : scan_omega_hits(family, n, r)) {
    if (hit.hits == 5) ++out.b5;
    if (hit.hits == 6) ++out.b6;
  }
  return out;
}

OmegaCounts count_omega_hits_direct(std::span<const uint64_t> family, int n,
                                    int r) {
  std::vector<uint64_t> sorted(family.begin(), family.end());
  std::sort(sorted.begin(), sorted.end());
  OmegaCounts out;
  for_each_omega(n, r, [&](const OmegaPattern& omega) {
    int hits = 0;
    for (uint64_t u : omega.u_sets()) hits += internal::contains_sorted(sorted, u);
    if (hits == 5) ++out.b5;
    if (hits == 6) ++out.b6;
  });
  return out;
}

std::vector<uint64_t> prune_to_good(std::span<const uint64_t> family, int n,
                                    int r) {
  std::vector<uint64_t> w(family.begin(), family.end());
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  while (true) {
    // Involvement of each member in edges and in 5/6-hit patterns.
    std::vector<int> load(w.size(), 0);
    bool dirty = false;
    for (size_t i = 0; i < w.size(); ++i) {
      for (size_t j = i + 1; j < w.size(); ++j) {
        if (std::popcount(w[i] & w[j]) == r - 1) {
          ++load[i];
          ++load[j];
          dirty = true;
        }
      }
    }
    for (const OmegaHit& hit : scan_omega_hits(w, n, r)) {
      dirty = true;
      for (uint64_t u : hit.pattern.u_sets()) {
        auto it = std::lower_bound(w.begin(), w.end(), u);
        if (it != w.end() && *it == u) ++load[it - w.begin()];
      }
    }
    if (!dirty) return w;
    // Most involved member; the first one on ties.
    size_t victim = 0;
    for (size_t i = 1; i < w.size(); ++i) {
      if (load[i] > load[victim]) victim = i;
    }
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(victim));
  }
}

SampleStats run_trial(const CountingParams& params, uint64_t seed) {
  SampleStats s;
  s.seed = seed;
  std::vector<uint64_t> h;
  for (uint64_t rank : sample_h(params, seed)) {
    h.push_back(colex_unrank_bits(rank, params.r));
  }
  std::sort(h.begin(), h.end());
  s.e_h = count_edges(h, params.r);
  const OmegaCounts b = count_omega_hits(h, params.n, params.r);
  s.b5 = b.b5;
  s.b6 = b.b6;
  s.w = prune_to_good(h, params.n, params.r);
  s.w_size = s.w.size();
  s.good = count_edges(s.w, params.r) == 0 &&
           count_omega_hits(s.w, params.n, params.r) == OmegaCounts{};
  try {
    SparsePavingMatroid m = SparsePavingMatroid::from_bits(params.n, params.r, s.w);
    s.ingleton_sp = !ingleton_fast_sp(m).has_value();
  } catch (const InvalidArgument&) {
    s.ingleton_sp = false;
  }
  return s;
}

namespace {

void mean_var(const std::vector<double>& xs, double& mean, double& var) {
  mean = 0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  var = 0;
  if (xs.size() < 2) return;
  for (double x : xs) var += (x - mean) * (x - mean);
  var /= static_cast<double>(xs.size() - 1);
}

}  // namespace

bool TrialSummary::e_within_bound() const {
  return mean_e <= bound_e + 3.0 * std::sqrt(var_e / static_cast<double>(trials.size()));
}

bool TrialSummary::b5_within_bound() const {
  return mean_b5 <= bound_b5 + 3.0 * std::sqrt(var_b5 / static_cast<double>(trials.size()));
}

double log2_binomial(double n, double k) {
  return (std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1)) /
         std::log(2.0);
}

TrialSummary run_trials(const CountingParams& params, int trials,
                        uint64_t seed0, int jobs) {
  if (trials < 1) throw InvalidArgument("need at least one trial");
  TrialSummary out;
  out.params = params;
  out.trials.resize(trials);
  internal::run_jobs(static_cast<size_t>(trials), jobs, [&](size_t i) {
    out.trials[i] = run_trial(params, seed0 + i);
  });

  const double k = static_cast<double>(params.k);
  out.bound_e = params.c * k / 2.0;
  out.bound_b5 = std::pow(params.c, 4) * k / 64.0;
  out.threshold = (1.0 - params.alpha) * k;
  const double d = static_cast<double>(params.valency);
  out.exponent_bits =
      params.gamma * std::log2(d) / d * static_cast<double>(params.vertices);

  const double n_vertices = static_cast<double>(params.vertices);
  out.log2_nu = log2_binomial(n_vertices, k) -
                log2_binomial(n_vertices, std::floor(out.threshold));

  std::vector<double> e, b5, b6, w;
  int below = 0;
  for (const SampleStats& s : out.trials) {
    e.push_back(static_cast<double>(s.e_h));
    b5.push_back(static_cast<double>(s.b5));
    b6.push_back(static_cast<double>(s.b6));
    w.push_back(static_cast<double>(s.w_size));
    const double loss = static_cast<double>(s.e_h + s.b5 + 2 * s.b6);
    if (loss <= out.threshold) ++below;
    out.all_good = out.all_good && s.good && s.ingleton_sp;
    out.pruning_bound_holds = out.pruning_bound_holds &&
                              s.w_size + s.e_h + s.b5 + 2 * s.b6 >= params.k;
  }
  double unused = 0;
  mean_var(e, out.mean_e, out.var_e);
  mean_var(b5, out.mean_b5, out.var_b5);
  mean_var(b6, out.mean_b6, out.var_b6);
  mean_var(w, out.mean_w, unused);
  out.fraction_below_threshold = static_cast<double>(below) / trials;
  return out;
}

}  // namespace spmat
