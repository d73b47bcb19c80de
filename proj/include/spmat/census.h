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

#ifndef SPMAT_CENSUS_H_
#define SPMAT_CENSUS_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spmat/canonical.h"
#include "spmat/ingleton.h"
#include "spmat/matroid.h"

namespace spmat {

inline constexpr uint64_t kMaxCensusVertices = uint64_t{1} << 16;
inline constexpr int kMaxCensusN = 9;
inline constexpr int kCensusFormatVersion = 1;

// Visits every stable set of J(n, r) once, members as masks in colex order.
// Sets larger than max_size (when >= 0) are not visited. Requires 0 < r < n
// and C(n, r) <= 2^16. Returns the number of sets visited.
uint64_t enumerate_stable_sets(
    int n, int r, const std::function<void(std::span<const uint64_t>)>& visit,
    int max_size = -1);

struct CensusRecord {
  int n = 0;
  int r = 0;
  CanonicalForm code;
  int h_size = 0;
  std::optional<bool> ingleton;
  std::optional<ViolationWitness> witness;
  uint64_t provenance = 0;  // generation-order index of first discovery

  SparsePavingMatroid matroid() const { return sparse_paving_from_code(code); }
  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

enum class CensusStrategy {
  // Canonicalise every stable set containing the colex-least vertex.
  kCanonicalDedup,
  // Extend canonical representatives one vertex at a time.
  kOrderly,
};

// One record per isomorphism class of rank-r sparse paving matroids on [n],
// sorted by canonical code. n <= 9. The result does not depend on `jobs`.
std::vector<CensusRecord> enumerate_iso_classes(
    int n, int r, CensusStrategy strategy = CensusStrategy::kOrderly,
    int jobs = 1);

struct Classification {
  int ingleton_count = 0;
  int non_ingleton_count = 0;
  std::vector<CensusRecord> records;
};

// Runs the fast checker on each record and stores witnesses.
Classification classify_records(std::vector<CensusRecord> records);
Classification classify_ingleton(int n, int r, int jobs = 1);

// Some five-of-six pattern in H, with every other circuit-hyperplane
// relaxed, is isomorphic to V8. Requires n = 8, r = 4.
bool vamos_reachable(const SparsePavingMatroid& m);

// Ingleton (exact check over all quadruples) and sparse paving.
bool is_ingleton_sparse_paving(const BasisMatroid& m);

struct ExcludedMinorEntry {
  std::string name;
  bool outside_class = false;  // not an Ingleton sparse paving matroid
  int minors_checked = 0;
  bool minors_inside = false;  // every single-element minor is inside
  std::vector<std::string> failures;

  bool minimal() const { return outside_class && minors_inside; }
};

struct ExcludedMinorReport {
  std::vector<ExcludedMinorEntry> entries;
  bool named_pair_dual = false;
  int minimal_count = 0;
  int failure_count = 0;
};

ExcludedMinorReport verify_excluded_minors(int jobs = 1);
// Same, reusing an (8, 4) classification.
ExcludedMinorReport verify_excluded_minors(const Classification& eight_four);

// Line-delimited JSON: a header line, then one record per line.
void census_write(std::span<const CensusRecord> records, std::ostream& out);
void census_write(std::span<const CensusRecord> records,
                  const std::string& path);
std::vector<CensusRecord> census_read(std::istream& in);
std::vector<CensusRecord> census_read(const std::string& path);

}  // namespace spmat

#endif  // SPMAT_CENSUS_H_
