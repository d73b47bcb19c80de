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

// spmat: command-line front end for the sparse paving matroid toolkit.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spmat/census.h"
#include "spmat/constructions.h"
#include "spmat/errors.h"
#include "spmat/ingleton.h"
#include "spmat/johnson.h"
#include "spmat/json_io.h"
#include "spmat/matroid.h"
#include "spmat/randomized.h"
#include "spmat/representation.h"

namespace {

using spmat::Json;

enum ExitCode { kOk = 0, kAssertion = 1, kUsage = 2, kScale = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  uint64_t seed = 1;
  int jobs = 1;
  std::string out;
  std::string format = "json";
};

struct MatroidSource {
  std::string named;
  std::vector<int> gs;
  std::string file;
};

struct CheckOptions {
  MatroidSource source;
  bool brute = false;
  uint64_t sampled = 0;
};

struct CensusOptions {
  int n = 0;
  int r = 0;
  bool classify = false;
  bool verify_forty = false;
  std::string strategy = "orderly";
};

struct ConstructOptions {
  std::string named;
  std::vector<int> gs;
  std::vector<int> gs_best;
  std::vector<int> gs_coloring;
};

struct SampleOptions {
  int n = 12;
  int r = 6;
  double c = 0.95;
  double gamma = 0.486;
  int trials = 200;
  std::string emit_dir;
};

struct RepresentOptions {
  MatroidSource source;
  int bit_width = 64;
  int attempts = 3;
};

struct WitnessOptions {
  MatroidSource source;
  bool all = false;
};

int default_jobs() {
  const char* env = std::getenv("SPMAT_JOBS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 1024) {
    throw UsageError("SPMAT_JOBS must be a positive integer");
  }
  return static_cast<int>(v);
}

void add_source_options(CLI::App* cmd, MatroidSource& src) {
  auto* named = cmd->add_option("--named", src.named,
                                "named matroid: vamos, uniform:r,n, "
                                "u02_plus_u11, u22_plus_u01");
  auto* gs = cmd->add_option("--gs", src.gs, "Graham-Sloane matroid n,r,gamma")
                 ->delimiter(',')
                 ->expected(3);
  auto* file = cmd->add_option("--matroid", src.file,
                               "matroid JSON file (first record is used)");
  named->excludes(gs)->excludes(file);
  gs->excludes(file);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
  if (!out) throw spmat::Error("write failed: " + path);
}

// Accepts a single JSON object or JSON lines; header lines are skipped.
spmat::NamedMatroid read_matroid_file(const std::string& path) {
  const std::string text = read_file(path);
  if (Json::accept(text)) return spmat::matroid_from_string(text);
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::exception& e) {
      throw spmat::ParseError(std::string("invalid JSON: ") + e.what(), lineno);
    }
    if (j.is_object() && j.contains("format")) continue;
    try {
      return spmat::matroid_from_json(j);
    } catch (const spmat::ParseError& e) {
      throw spmat::ParseError(e.what(), lineno);
    }
  }
  throw spmat::ParseError("no matroid record in " + path, 0);
}

spmat::NamedMatroid load_matroid(const MatroidSource& src, std::string& label) {
  if (!src.named.empty()) {
    label = src.named;
    return spmat::named(src.named);
  }
  if (!src.gs.empty()) {
    label = "gs:" + std::to_string(src.gs[0]) + "," + std::to_string(src.gs[1]) +
            "," + std::to_string(src.gs[2]);
    return spmat::gs_matroid(src.gs[0], src.gs[1], src.gs[2]);
  }
  if (!src.file.empty()) {
    label = src.file;
    return read_matroid_file(src.file);
  }
  throw UsageError("one of --named, --gs or --matroid is required");
}

// Sparse paving view of a matroid, if it has one.
std::optional<spmat::SparsePavingMatroid> sparse_paving_view(
    const spmat::NamedMatroid& m) {
  if (const auto* sp = std::get_if<spmat::SparsePavingMatroid>(&m)) return *sp;
  const auto& bm = std::get<spmat::BasisMatroid>(m);
  if (!spmat::is_sparse_paving(bm)) return std::nullopt;
  return spmat::to_sparse_paving(bm);
}

void require_json_format(const CommonOptions& common, const char* cmd) {
  if (common.format != "json") {
    throw UsageError(std::string("--format csv is not available for ") + cmd);
  }
}

// Records named checks and folds them into the exit code.
class Checks {
 public:
  void add(const std::string& name, bool ok) {
    json_[name] = ok;
    ok_ = ok_ && ok;
  }
  bool ok() const { return ok_; }
  const Json& json() const { return json_; }

 private:
  Json json_ = Json::object();
  bool ok_ = true;
};

void emit(const CommonOptions& common, const Json& j, bool mirror_to_out) {
  const std::string line = j.dump() + "\n";
  std::cout << line;
  if (mirror_to_out && !common.out.empty()) write_file(common.out, line);
}

Json witness_block(const spmat::SparsePavingMatroid& m,
                   const spmat::ViolationWitness& w) {
  Json j = Json::object();
  j["witness"] = spmat::to_json(w);
  j["quadruple"] = spmat::to_json(spmat::witness_to_quadruple(m, w));
  const spmat::BasisMatroid minor = spmat::minor_witness(m, w);
  if (spmat::is_sparse_paving(minor)) {
    j["minor"] = spmat::to_json(spmat::to_sparse_paving(minor));
  } else {
    j["minor"] = spmat::to_json(minor);
  }
  return j;
}

int cmd_check(const CommonOptions& common, const CheckOptions& opt) {
  require_json_format(common, "check");
  std::string label;
  const spmat::NamedMatroid m = load_matroid(opt.source, label);
  const spmat::BasisMatroid bm = spmat::as_basis(m);
  const auto sp = sparse_paving_view(m);
  const int n = bm.n();

  Json out = Json::object();
  out["input"] = label;
  out["n"] = n;
  out["r"] = bm.r();
  out["sparse_paving"] = sp.has_value();
  Checks checks;

  std::optional<bool> verdict;
  if (sp) {
    out["h_size"] = sp->hyperplane_count();
    const auto w = spmat::ingleton_fast_sp(*sp);
    verdict = !w.has_value();
    out["method"] = "fast";
    out["ingleton"] = *verdict;
    if (w) {
      out.update(witness_block(*sp, *w));
      checks.add("witness_violates",
                 spmat::witness_to_quadruple(*sp, *w).violated());
    }
  }

  const bool exhaustive_needed = opt.brute || !sp;
  if (exhaustive_needed) {
    if (n <= spmat::kMaxExhaustiveIngletonN) {
      const auto q = spmat::ingleton_brute(spmat::RankTable(bm));
      Json brute = Json::object();
      brute["ingleton"] = !q.has_value();
      brute["quadruple"] = q ? spmat::to_json(*q) : Json(nullptr);
      out["brute"] = brute;
      if (verdict) {
        checks.add("fast_agrees_with_brute", *verdict == !q.has_value());
      } else {
        verdict = !q.has_value();
        out["method"] = "brute";
        out["ingleton"] = *verdict;
      }
    } else if (opt.sampled > 0) {
      const auto rank = [&bm](const spmat::ElementSet& s) { return bm.rank(s); };
      const auto q = spmat::ingleton_sampled(n, rank, opt.sampled, common.seed);
      Json sampled = Json::object();
      sampled["budget"] = opt.sampled;
      sampled["seed"] = common.seed;
      sampled["violation_found"] = q.has_value();
      sampled["quadruple"] = q ? spmat::to_json(*q) : Json(nullptr);
      out["sampled"] = sampled;
      if (verdict) {
        checks.add("sampled_consistent", !(*verdict && q.has_value()));
      } else {
        out["method"] = "sampled";
        out["ingleton"] = q ? Json(false) : Json(nullptr);
      }
    } else {
      throw spmat::ScaleLimitExceeded(
          "exhaustive Ingleton check needs n <= " +
          std::to_string(spmat::kMaxExhaustiveIngletonN) +
          "; pass --sampled <budget>");
    }
  }
  out["checks"] = checks.json();
  emit(common, out, true);
  return checks.ok() ? kOk : kAssertion;
}

int cmd_census(const CommonOptions& common, const CensusOptions& opt) {
  if (common.format != "json" && common.format != "csv") {
    throw UsageError("--format must be json or csv");
  }
  spmat::CensusStrategy strategy;
  if (opt.strategy == "orderly") {
    strategy = spmat::CensusStrategy::kOrderly;
  } else if (opt.strategy == "dedup") {
    strategy = spmat::CensusStrategy::kCanonicalDedup;
  } else {
    throw UsageError("--strategy must be orderly or dedup");
  }
  if (opt.verify_forty && !(opt.n == 8 && opt.r == 4)) {
    throw UsageError("--verify-theorem-forty needs --n 8 --r 4");
  }
  const bool classify = opt.classify || opt.verify_forty;

  std::vector<spmat::CensusRecord> records =
      spmat::enumerate_iso_classes(opt.n, opt.r, strategy, common.jobs);

  Json summary = Json::object();
  summary["n"] = opt.n;
  summary["r"] = opt.r;
  summary["strategy"] = opt.strategy;
  summary["classes"] = records.size();
  Checks checks;

  std::optional<spmat::Classification> cls;
  if (classify) {
    cls = spmat::classify_records(std::move(records));
    records = cls->records;
    summary["ingleton_classes"] = cls->ingleton_count;
    summary["non_ingleton_classes"] = cls->non_ingleton_count;
    if (opt.r <= 3 || opt.n - opt.r <= 3) {
      checks.add("no_violations_below_rank_four", cls->non_ingleton_count == 0);
    }
    if (opt.n == 8 && opt.r == 4) {
      int reachable = 0;
      for (const auto& rec : records) {
        if (rec.ingleton == false && spmat::vamos_reachable(rec.matroid())) {
          ++reachable;
        }
      }
      summary["vamos_reachable"] = reachable;
      checks.add("non_ingleton_classes_is_39", cls->non_ingleton_count == 39);
      checks.add("all_vamos_reachable", reachable == cls->non_ingleton_count);
    }
  }

  if (opt.verify_forty) {
    const spmat::ExcludedMinorReport report = spmat::verify_excluded_minors(*cls);
    Json em = Json::object();
    em["candidates"] = report.entries.size();
    em["minimal"] = report.minimal_count;
    em["failures"] = report.failure_count;
    em["named_pair_dual"] = report.named_pair_dual;
    Json failures = Json::array();
    for (const auto& e : report.entries) {
      for (const auto& f : e.failures) failures.push_back(e.name + ": " + f);
    }
    em["failure_details"] = failures;
    summary["excluded_minors"] = em;
    checks.add("excluded_minors_41", report.minimal_count == 41 &&
                                         report.failure_count == 0 &&
                                         report.entries.size() == 41);
    checks.add("named_pair_dual", report.named_pair_dual);
  }

  if (!common.out.empty()) {
    std::ostringstream buf;
    spmat::census_write(records, buf);
    write_file(common.out, buf.str());
    summary["out"] = common.out;
    summary["fnv1a"] = spmat::fnv1a_hex(buf.str());
  }
  summary["checks"] = checks.json();
  summary["ok"] = checks.ok();

  if (common.format == "csv") {
    std::cout << "code,h_size,ingleton,provenance\n";
    for (const auto& rec : records) {
      std::cout << rec.code.to_hex() << ',' << rec.h_size << ','
                << (rec.ingleton ? (*rec.ingleton ? "true" : "false") : "")
                << ',' << rec.provenance << '\n';
    }
  } else {
    std::cout << summary.dump() << '\n';
  }
  return checks.ok() ? kOk : kAssertion;
}

Json coloring_json(int n, int r, Checks& checks) {
  const spmat::GsColoring col = spmat::gs_coloring(n, r);
  const spmat::JohnsonGraph graph(n, r);
  bool proper = true;
  for (int u = 0; u < graph.vertex_count() && proper; ++u) {
    const spmat::ElementSet x(graph.vertex(u), n);
    for (int v = u + 1; v < graph.vertex_count(); ++v) {
      if (graph.adjacent(u, v) &&
          spmat::gs_color(x, n) ==
              spmat::gs_color(spmat::ElementSet(graph.vertex(v), n), n)) {
        proper = false;
        break;
      }
    }
  }
  uint64_t largest = 0;
  for (uint64_t s : col.class_sizes) largest = std::max(largest, s);
  Json j = Json::object();
  j["n"] = n;
  j["r"] = r;
  j["class_sizes"] = col.class_sizes;
  j["proper"] = proper;
  checks.add("coloring_proper", proper);
  checks.add("largest_class_at_least_average",
             largest * static_cast<uint64_t>(n) >= spmat::binomial(n, r));
  return j;
}

int cmd_construct(const CommonOptions& common, const ConstructOptions& opt) {
  require_json_format(common, "construct");
  Json out = Json::object();
  Checks checks;
  std::optional<spmat::NamedMatroid> m;
  if (!opt.named.empty()) {
    out["construction"] = opt.named;
    m = spmat::named(opt.named);
  } else if (!opt.gs.empty()) {
    out["construction"] = "gs";
    out["gamma"] = opt.gs[2];
    m = spmat::gs_matroid(opt.gs[0], opt.gs[1], opt.gs[2]);
    out["class_sizes"] = spmat::gs_coloring(opt.gs[0], opt.gs[1]).class_sizes;
  } else if (!opt.gs_best.empty()) {
    auto [gamma, best] = spmat::gs_best(opt.gs_best[0], opt.gs_best[1]);
    out["construction"] = "gs_best";
    out["gamma"] = gamma;
    out["class_sizes"] =
        spmat::gs_coloring(opt.gs_best[0], opt.gs_best[1]).class_sizes;
    checks.add("at_least_binomial_over_n",
               static_cast<uint64_t>(best.hyperplane_count()) *
                       static_cast<uint64_t>(best.n()) >=
                   spmat::binomial(best.n(), best.r()));
    m = std::move(best);
  } else if (!opt.gs_coloring.empty()) {
    out["construction"] = "gs_coloring";
    out["coloring"] = coloring_json(opt.gs_coloring[0], opt.gs_coloring[1], checks);
  } else {
    throw UsageError(
        "one of --named, --gs, --gs-best or --gs-coloring is required");
  }

  if (m) {
    const Json mj = spmat::to_json(*m);
    out["n"] = mj["n"];
    out["r"] = mj["r"];
    if (const auto* sp = std::get_if<spmat::SparsePavingMatroid>(&*m)) {
      out["h_size"] = sp->hyperplane_count();
      if (!opt.gs.empty() || !opt.gs_best.empty()) {
        checks.add("gs_is_ingleton", !spmat::ingleton_fast_sp(*sp).has_value());
      }
    }
    out["matroid"] = mj;
    if (!common.out.empty()) {
      write_file(common.out, mj.dump() + "\n");
      out["out"] = common.out;
    }
  }
  out["checks"] = checks.json();
  std::cout << out.dump() << '\n';
  return checks.ok() ? kOk : kAssertion;
}

int cmd_sample(const CommonOptions& common, const SampleOptions& opt) {
  if (common.format != "json" && common.format != "csv") {
    throw UsageError("--format must be json or csv");
  }
  const spmat::CountingParams p =
      spmat::make_params(opt.n, opt.r, opt.c, opt.gamma);
  const spmat::TrialSummary s =
      spmat::run_trials(p, opt.trials, common.seed, common.jobs);

  if (!opt.emit_dir.empty()) {
    std::filesystem::create_directories(opt.emit_dir);
    for (const spmat::SampleStats& t : s.trials) {
      const auto m = spmat::SparsePavingMatroid::from_bits(p.n, p.r, t.w);
      const auto path = std::filesystem::path(opt.emit_dir) /
                        ("trial_" + std::to_string(t.seed) + ".json");
      write_file(path.string(), spmat::to_json(m).dump() + "\n");
    }
  }

  Checks checks;
  checks.add("all_pruned_sets_good", s.all_good);
  checks.add("pruning_bound_holds", s.pruning_bound_holds);

  if (common.format == "csv") {
    std::cout << "seed,e_h,b5,b6,w_size,good,ingleton_sp\n";
    for (const spmat::SampleStats& t : s.trials) {
      std::cout << t.seed << ',' << t.e_h << ',' << t.b5 << ',' << t.b6 << ','
                << t.w_size << ',' << (t.good ? "true" : "false") << ','
                << (t.ingleton_sp ? "true" : "false") << '\n';
    }
    return checks.ok() ? kOk : kAssertion;
  }

  Json params = Json::object();
  params["n"] = p.n;
  params["r"] = p.r;
  params["c"] = p.c;
  params["gamma"] = p.gamma;
  params["alpha"] = p.alpha;
  params["epsilon"] = p.epsilon;
  params["N"] = p.vertices;
  params["d"] = p.valency;
  params["k"] = p.k;

  Json stats = Json::object();
  stats["mean_e"] = s.mean_e;
  stats["var_e"] = s.var_e;
  stats["mean_b5"] = s.mean_b5;
  stats["var_b5"] = s.var_b5;
  stats["mean_b6"] = s.mean_b6;
  stats["var_b6"] = s.var_b6;
  stats["mean_w"] = s.mean_w;
  stats["fraction_below_threshold"] = s.fraction_below_threshold;

  Json bounds = Json::object();
  bounds["e"] = s.bound_e;
  bounds["b5"] = s.bound_b5;
  bounds["threshold"] = s.threshold;
  bounds["e_within_bound"] = s.e_within_bound();
  bounds["b5_within_bound"] = s.b5_within_bound();

  Json out = Json::object();
  out["params"] = params;
  out["trials"] = opt.trials;
  out["seed"] = common.seed;
  out["stats"] = stats;
  out["bounds"] = bounds;
  out["exponent_bits"] = s.exponent_bits;
  out["log2_nu"] = s.log2_nu;
  out["checks"] = checks.json();
  emit(common, out, true);
  return checks.ok() ? kOk : kAssertion;
}

int cmd_represent(const CommonOptions& common, const RepresentOptions& opt) {
  require_json_format(common, "represent");
  std::string label;
  const spmat::BasisMatroid bm = spmat::as_basis(load_matroid(opt.source, label));
  const spmat::RepresentationResult res =
      spmat::represent(bm, common.seed, opt.bit_width, opt.attempts);
  Json out = Json::object();
  out["input"] = label;
  out["n"] = bm.n();
  out["r"] = bm.r();
  out["matroid_hash"] = spmat::fnv1a_hex(spmat::to_json(bm).dump());
  out["hall"] = res.hall;
  out["success"] = res.success;
  out["seed"] = res.seed;
  out["attempts"] = res.attempts;
  out["bit_width"] = res.bit_width;
  out["matrix"] = res.matrix ? spmat::to_json(*res.matrix) : Json(nullptr);
  emit(common, out, true);
  return (!res.hall || res.success) ? kOk : kAssertion;
}

int cmd_witness(const CommonOptions& common, const WitnessOptions& opt) {
  require_json_format(common, "witness");
  std::string label;
  const spmat::NamedMatroid m = load_matroid(opt.source, label);
  const auto sp = sparse_paving_view(m);
  if (!sp) throw spmat::InvalidArgument("witness needs a sparse paving matroid");

  std::vector<spmat::ViolationWitness> found;
  if (opt.all) {
    found = spmat::all_violation_witnesses(*sp);
  } else if (auto w = spmat::ingleton_fast_sp(*sp)) {
    found.push_back(*w);
  }

  Checks checks;
  Json list = Json::array();
  for (const auto& w : found) {
    const spmat::IngletonQuadruple q = spmat::witness_to_quadruple(*sp, w);
    const spmat::BasisMatroid minor = spmat::minor_witness(*sp, w);
    Json block = witness_block(*sp, w);
    list.push_back(block);
    checks.add("quadruples_violate", q.violated());
    checks.add("minors_non_ingleton",
               minor.n() == 8 && minor.r() == 4 &&
                   spmat::ingleton_brute(spmat::RankTable(minor)).has_value());
  }
  Json out = Json::object();
  out["input"] = label;
  out["n"] = sp->n();
  out["r"] = sp->r();
  out["ingleton"] = found.empty();
  out["witness_count"] = found.size();
  out["witnesses"] = list;
  out["checks"] = checks.json();
  emit(common, out, true);
  return checks.ok() ? kOk : kAssertion;
}

// Top-level options plus those of the chosen subcommand, in the TOML form
// accepted by --config.
void print_banner(const CLI::App& app) {
  const std::string prefix = app.get_subcommands().front()->get_name() + ".";
  std::istringstream in(app.config_to_str(true, false));
  std::string line;
  std::cerr << "# effective config\n";
  while (std::getline(in, line)) {
    const size_t eq = line.find('=');
    const std::string key = line.substr(0, eq);
    if (key.find('.') == std::string::npos || key.rfind(prefix, 0) == 0) {
      std::cerr << line << '\n';
    }
  }
  std::cerr.flush();
}

int run(int argc, char** argv) {
  CLI::App app{"Sparse paving matroids: census, Ingleton checks, constructions"};
  app.set_version_flag("--version",
                       "spmat census format " +
                           std::to_string(spmat::kCensusFormatVersion));
  app.set_config("--config", "", "read options from a TOML file");
  app.require_subcommand(1);
  app.fallthrough();

  CommonOptions common;
  common.jobs = default_jobs();
  app.add_option("--seed", common.seed, "random seed")->capture_default_str();
  app.add_option("--jobs", common.jobs, "worker threads (default $SPMAT_JOBS or 1)")
      ->check(CLI::Range(1, 1024))
      ->capture_default_str();
  app.add_option("--out", common.out, "output file");
  app.add_option("--format", common.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Ingleton verdict for one matroid");
  add_source_options(check_cmd, check.source);
  check_cmd->add_flag("--brute", check.brute, "cross-check exhaustively");
  check_cmd->add_option("--sampled", check.sampled,
                        "random quadruple budget when n > 8");

  CensusOptions census;
  auto* census_cmd = app.add_subcommand("census", "isomorph-free census at (n, r)");
  census_cmd->add_option("--n", census.n)->required();
  census_cmd->add_option("--r", census.r)->required();
  census_cmd->add_flag("--classify", census.classify, "run the Ingleton check");
  census_cmd->add_flag("--verify-theorem-forty", census.verify_forty,
                       "check the 41 excluded minors (needs n=8, r=4)");
  census_cmd->add_option("--strategy", census.strategy, "orderly or dedup")
      ->check(CLI::IsMember({"orderly", "dedup"}))
      ->capture_default_str();

  ConstructOptions construct;
  auto* construct_cmd =
      app.add_subcommand("construct", "build a named or Graham-Sloane matroid");
  construct_cmd->add_option("--named", construct.named, "named matroid");
  construct_cmd->add_option("--gs", construct.gs, "n,r,gamma")
      ->delimiter(',')
      ->expected(3);
  construct_cmd->add_option("--gs-best", construct.gs_best, "n,r")
      ->delimiter(',')
      ->expected(2);
  construct_cmd->add_option("--gs-coloring", construct.gs_coloring, "n,r")
      ->delimiter(',')
      ->expected(2);
  construct_cmd->require_option(1);

  SampleOptions sample;
  auto* sample_cmd = app.add_subcommand("sample", "random k-subsets of J(n, r)");
  sample_cmd->add_option("--n", sample.n)->capture_default_str();
  sample_cmd->add_option("--r", sample.r)->capture_default_str();
  sample_cmd->add_option("--c", sample.c)->capture_default_str();
  sample_cmd->add_option("--gamma", sample.gamma)->capture_default_str();
  sample_cmd->add_option("--trials", sample.trials)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sample_cmd->add_option("--emit-matroids", sample.emit_dir,
                         "directory for per-trial matroid files");

  RepresentOptions represent;
  auto* represent_cmd =
      app.add_subcommand("represent", "integer matrix for a Hall-condition matroid");
  add_source_options(represent_cmd, represent.source);
  represent_cmd->add_option("--bit-width", represent.bit_width)
      ->capture_default_str();
  represent_cmd->add_option("--attempts", represent.attempts)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  WitnessOptions witness;
  auto* witness_cmd =
      app.add_subcommand("witness", "violation witnesses and their minors");
  add_source_options(witness_cmd, witness.source);
  witness_cmd->add_flag("--all", witness.all, "list every witness");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  print_banner(app);

  if (*check_cmd) return cmd_check(common, check);
  if (*census_cmd) return cmd_census(common, census);
  if (*construct_cmd) return cmd_construct(common, construct);
  if (*sample_cmd) return cmd_sample(common, sample);
  if (*represent_cmd) return cmd_represent(common, represent);
  return cmd_witness(common, witness);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const spmat::ScaleLimitExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kScale;
  } catch (const spmat::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const spmat::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kAssertion;
  }
}
