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

#include "spmat/census.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <string>

#include "parallel_internal.h"
#include "spmat/constructions.h"
#include "spmat/errors.h"
#include "spmat/johnson.h"
#include "spmat/json_io.h"

namespace spmat {
namespace {

void check_census_params(int n, int r) {
  if (r <= 0 || r >= n || n > kMaxGroundSet) {
    throw InvalidArgument("census needs 0 < r < n, got (" + std::to_string(n) +
                          ", " + std::to_string(r) + ")");
  }
  if (binomial(n, r) > kMaxCensusVertices) {
    throw ScaleLimitExceeded("J(" + std::to_string(n) + ", " +
                             std::to_string(r) + ") has more than 2^16 vertices");
  }
}

// Depth-first walk over stable sets that extend `members` by vertices >=
// start avoiding `blocked`. Members are visited in colex order.
class StableSetWalker {
 public:
  using Visit = std::function<void(std::span<const uint64_t>)>;

  StableSetWalker(const JohnsonGraph& graph, int max_size, const Visit& visit)
      : graph_(graph), max_size_(max_size), visit_(visit) {}

  uint64_t walk(int start, std::vector<uint64_t> blocked,
                std::vector<uint64_t>& members) {
    uint64_t count = 1;
    visit_(members);
    if (max_size_ >= 0 && static_cast<int>(members.size()) >= max_size_) {
      return count;
    }
    const int words = graph_.words();
    const int total = graph_.vertex_count();
    for (int v = start; v < total; ++v) {
      if ((blocked[v / 64] >> (v % 64)) & 1u) continue;
      std::vector<uint64_t> next = blocked;
      auto row = graph_.neighbours(v);
      for (int w = 0; w < words; ++w) next[w] |= row[w];
      members.push_back(graph_.vertex(v));
      count += walk(v + 1, std::move(next), members);
      members.pop_back();
    }
    return count;
  }

 private:
  const JohnsonGraph& graph_;
  int max_size_;
  const Visit& visit_;
};

using RankList = std::vector<uint64_t>;

std::vector<uint64_t> blocked_by(const JohnsonGraph& g,
                                 std::span<const int> chosen) {
  std::vector<uint64_t> blocked(g.words(), 0);
  for (int v : chosen) {
    auto row = g.neighbours(v);
    for (int w = 0; w < g.words(); ++w) blocked[w] |= row[w];
    blocked[v / 64] |= uint64_t{1} << (v % 64);
  }
  return blocked;
}

CensusRecord make_record(int n, int r, const RankList& ranks,
                         uint64_t provenance) {
  CensusRecord rec;
  rec.n = n;
  rec.r = r;
  rec.code = canonical_form_from_ranks(n, r, ranks);
  rec.h_size = static_cast<int>(ranks.size());
  rec.provenance = provenance;
  return rec;
}

std::vector<CensusRecord> sorted_records(int n, int r,
                                         const std::map<RankList, uint64_t>& classes) {
  std::vector<CensusRecord> out;
  out.reserve(classes.size());
  for (const auto& [ranks, provenance] : classes) {
    out.push_back(make_record(n, r, ranks, provenance));
  }
  std::sort(out.begin(), out.end(),
            [](const CensusRecord& a, const CensusRecord& b) { return a.code < b.code; });
  return out;
}

// Every nonempty stable set is isomorphic to one containing vertex 0 (the
// colex-least r-set), so the stream is: the empty set, {0}, then one
// subtree per second vertex.
std::vector<CensusRecord> census_by_dedup(int n, int r, int jobs) {
  const JohnsonGraph graph(n, r);
  std::vector<int> seconds;
  for (int v = 1; v < graph.vertex_count(); ++v) {
    if (!graph.adjacent(0, v)) seconds.push_back(v);
  }
  struct JobResult {
    std::map<RankList, uint64_t> first_seen;
    uint64_t visited = 0;
  };
  std::vector<JobResult> results(seconds.size() + 1);

  auto canonical = [&](std::span<const uint64_t> members) {
    return canonical_labelling(n, r, members).ranks;
  };

  internal::run_jobs(results.size(), jobs, [&](size_t j) {
    JobResult& res = results[j];
    if (j == 0) {
      // Empty set and {0}.
      res.first_seen.emplace(RankList{}, 0);
      std::vector<uint64_t> single = {graph.vertex(0)};
      res.first_seen.emplace(canonical(single), 1);
      res.visited = 2;
      return;
    }
    const int second = seconds[j - 1];
    std::vector<int> chosen = {0, second};
    uint64_t local = 0;
    StableSetWalker::Visit visit = [&](std::span<const uint64_t> members) {
      res.first_seen.emplace(canonical(members), local++);
    };
    StableSetWalker walker(graph, -1, visit);
    std::vector<uint64_t> members = {graph.vertex(0), graph.vertex(second)};
    res.visited = walker.walk(second + 1, blocked_by(graph, chosen), members);
  });

  std::map<RankList, uint64_t> classes;
  uint64_t offset = 0;
  for (const JobResult& res : results) {
    for (const auto& [ranks, local] : res.first_seen) {
      auto [it, inserted] = classes.emplace(ranks, offset + local);
      if (!inserted) it->second = std::min(it->second, offset + local);
    }
    offset += res.visited;
  }
  return sorted_records(n, r, classes);
}

// Level k+1 classes are the canonical images of one-vertex extensions of
// the level-k representatives.
std::vector<CensusRecord> census_orderly(int n, int r, int jobs) {
  const JohnsonGraph graph(n, r);
  std::map<RankList, uint64_t> classes;
  uint64_t discovered = 0;
  std::vector<RankList> level = {RankList{}};
  classes.emplace(RankList{}, discovered++);
  while (!level.empty()) {
    std::vector<std::vector<RankList>> extensions(level.size());
    internal::run_jobs(level.size(), jobs, [&](size_t i) {
      const RankList& rep = level[i];
      std::vector<int> chosen(rep.begin(), rep.end());
      std::vector<uint64_t> blocked = blocked_by(graph, chosen);
      std::vector<uint64_t> members;
      for (uint64_t rank : rep) members.push_back(graph.vertex(static_cast<int>(rank)));
      std::map<RankList, bool> local;
      for (int v = 0; v < graph.vertex_count(); ++v) {
        if ((blocked[v / 64] >> (v % 64)) & 1u) continue;
        members.push_back(graph.vertex(v));
        RankList image = canonical_labelling(n, r, members).ranks;
        members.pop_back();
        if (local.emplace(image, true).second) extensions[i].push_back(std::move(image));
      }
    });
    std::vector<RankList> next;
    for (auto& ext : extensions) {
      for (auto& image : ext) {
        if (classes.emplace(image, discovered).second) {
          ++discovered;
          next.push_back(std::move(image));
        }
      }
    }
    level = std::move(next);
  }
  return sorted_records(n, r, classes);
}

}  // namespace

uint64_t enumerate_stable_sets(
    int n, int r, const std::function<void(std::span<const uint64_t>)>& visit,
    int max_size) {
  check_census_params(n, r);
  const JohnsonGraph graph(n, r);
  StableSetWalker walker(graph, max_size, visit);
  std::vector<uint64_t> members;
  return walker.walk(0, std::vector<uint64_t>(graph.words(), 0), members);
}

std::vector<CensusRecord> enumerate_iso_classes(int n, int r,
                                                CensusStrategy strategy,
                                                int jobs) {
  check_census_params(n, r);
  if (n > kMaxCensusN) {
    throw ScaleLimitExceeded("census needs n <= " + std::to_string(kMaxCensusN));
  }
  return strategy == CensusStrategy::kOrderly ? census_orderly(n, r, jobs)
                                              : census_by_dedup(n, r, jobs);
}

Classification classify_records(std::vector<CensusRecord> records) {
  Classification out;
  for (CensusRecord& rec : records) {
    std::optional<ViolationWitness> w = ingleton_fast_sp(rec.matroid());
    rec.ingleton = !w.has_value();
    rec.witness = w;
    if (w) {
      ++out.non_ingleton_count;
    } else {
      ++out.ingleton_count;
    }
  }
  out.records = std::move(records);
  return out;
}

Classification classify_ingleton(int n, int r, int jobs) {
  return classify_records(
      enumerate_iso_classes(n, r, CensusStrategy::kOrderly, jobs));
}

bool vamos_reachable(const SparsePavingMatroid& m) {
  if (m.n() != 8 || m.r() != 4) {
    throw InvalidArgument("vamos_reachable needs n = 8, r = 4");
  }
  static const CanonicalForm kVamos = canonical_form(vamos());
  for (const ViolationWitness& w : all_violation_witnesses(m)) {
    std::vector<uint64_t> five;
    auto u = w.pattern.u_sets();
    for (size_t t = 0; t < u.size(); ++t) {
      if (kOmegaIndexPairs[t] != w.basis_pair) five.push_back(u[t]);
    }
    if (canonical_form(SparsePavingMatroid::from_bits(8, 4, five)) == kVamos) {
      return true;
    }
  }
  return false;
}

bool is_ingleton_sparse_paving(const BasisMatroid& m) {
  if (!is_sparse_paving(m)) return false;
  if (m.n() <= kMaxExhaustiveIngletonN) return !ingleton_brute(RankTable(m));
  return !ingleton_fast_sp(to_sparse_paving(m));
}

namespace {

ExcludedMinorEntry check_excluded_minor(const std::string& name,
                                        const BasisMatroid& m) {
  ExcludedMinorEntry entry;
  entry.name = name;
  entry.outside_class = !is_ingleton_sparse_paving(m);
  if (!entry.outside_class) entry.failures.push_back("inside the class");
  entry.minors_inside = true;
  for (int e = 1; e <= m.n(); ++e) {
    const std::pair<const char*, BasisMatroid> minors[] = {
        {"delete", delete_element(m, e)}, {"contract", contract_element(m, e)}};
    for (const auto& [op, minor] : minors) {
      ++entry.minors_checked;
      if (!is_ingleton_sparse_paving(minor)) {
        entry.minors_inside = false;
        entry.failures.push_back(std::string(op) + " " + std::to_string(e) +
                                 " leaves the class");
      }
    }
  }
  return entry;
}

}  // namespace

ExcludedMinorReport verify_excluded_minors(const Classification& eight_four) {
  ExcludedMinorReport report;
  for (const CensusRecord& rec : eight_four.records) {
    if (rec.n != 8 || rec.r != 4) {
      throw InvalidArgument("expected an (8, 4) classification");
    }
    if (rec.ingleton.value_or(true)) continue;
    report.entries.push_back(
        check_excluded_minor("sp8_4:" + rec.code.to_hex(), rec.matroid().to_basis()));
  }
  report.entries.push_back(check_excluded_minor("u02_plus_u11", u02_plus_u11()));
  report.entries.push_back(check_excluded_minor("u22_plus_u01", u22_plus_u01()));
  report.named_pair_dual = is_isomorphic(dual(u02_plus_u11()), u22_plus_u01());
  for (const ExcludedMinorEntry& e : report.entries) {
    if (e.minimal()) {
      ++report.minimal_count;
    } else {
      ++report.failure_count;
    }
  }
  if (!report.named_pair_dual) ++report.failure_count;
  return report;
}

ExcludedMinorReport verify_excluded_minors(int jobs) {
  return verify_excluded_minors(classify_ingleton(8, 4, jobs));
}

void census_write(std::span<const CensusRecord> records, std::ostream& out) {
  std::vector<const CensusRecord*> order;
  for (const CensusRecord& rec : records) order.push_back(&rec);
  std::stable_sort(order.begin(), order.end(),
                   [](const CensusRecord* a, const CensusRecord* b) {
                     return a->code < b->code;
                   });
  Json header;
  header["format"] = "spmat-census";
  header["version"] = kCensusFormatVersion;
  out << header.dump() << '\n';
  for (const CensusRecord* rec : order) out << to_json(*rec).dump() << '\n';
}

void census_write(std::span<const CensusRecord> records,
                  const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  census_write(records, out);
  if (!out) throw Error("write to " + path + " failed");
}

std::vector<CensusRecord> census_read(std::istream& in) {
  std::vector<CensusRecord> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), line_no);
    }
    if (line_no == 1) {
      if (!j.is_object() || j.value("format", "") != "spmat-census" ||
          j.value("version", -1) != kCensusFormatVersion) {
        throw ParseError("missing or unsupported census header", line_no);
      }
      continue;
    }
    try {
      out.push_back(census_record_from_json(j));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    } catch (const Error& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (line_no == 0) throw ParseError("empty census file (no header)", 1);
  return out;
}

std::vector<CensusRecord> census_read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return census_read(in);
}

}  // namespace spmat
