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

#include "spmat/json_io.h"

#include <cstdio>
#include <string>

#include "spmat/errors.h"
#include "spmat/johnson.h"

namespace spmat {
namespace {

Json hex_array(std::span<const uint64_t> masks) {
  Json out = Json::array();
  for (uint64_t m : masks) out.push_back(mask_to_hex(m));
  return out;
}

std::vector<uint64_t> parse_hex_array(const Json& j, int n, const char* field) {
  if (!j.is_array()) throw ParseError(std::string(field) + " must be an array", 0);
  std::vector<uint64_t> out;
  for (const Json& item : j) {
    if (!item.is_string()) {
      throw ParseError(std::string(field) + " entries must be hex strings", 0);
    }
    out.push_back(ElementSet::parse_hex(item.get<std::string>(), n).bits());
  }
  return out;
}

int get_int(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
    throw ParseError(std::string("missing integer field '") + key + "'", 0);
  }
  return j.at(key).get<int>();
}

}  // namespace

Json to_json(const SparsePavingMatroid& m) {
  Json j;
  j["n"] = m.n();
  j["r"] = m.r();
  j["ch"] = hex_array(m.hyperplane_bits());
  return j;
}

Json to_json(const BasisMatroid& m) {
  Json j;
  j["n"] = m.n();
  j["r"] = m.r();
  j["bases"] = hex_array(m.basis_bits());
  return j;
}

Json to_json(const NamedMatroid& m) {
  return std::visit([](const auto& x) { return to_json(x); }, m);
}

Json to_json(const ViolationWitness& w) {
  Json j;
  j["K"] = mask_to_hex(w.pattern.core);
  j["P"] = hex_array(w.pattern.pairs);
  j["basis_pair"] = {w.basis_pair[0], w.basis_pair[1]};
  return j;
}

Json to_json(const IngletonQuadruple& q) {
  Json j;
  j["A"] = q.a.to_hex();
  j["B"] = q.b.to_hex();
  j["C"] = q.c.to_hex();
  j["D"] = q.d.to_hex();
  j["lhs"] = q.lhs;
  j["rhs"] = q.rhs;
  j["violated"] = q.violated();
  return j;
}

Json to_json(const GenericMatrix& a) {
  Json j;
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  Json entries = Json::array();
  for (const mpz_class& v : a.entries()) entries.push_back(v.get_str());
  j["entries"] = std::move(entries);
  Json pattern = Json::array();
  for (const ElementSet& z : a.pattern().zero_rows) pattern.push_back(z.to_hex());
  j["pattern"] = std::move(pattern);
  return j;
}

Json to_json(const CensusRecord& rec) {
  Json j;
  j["n"] = rec.n;
  j["r"] = rec.r;
  j["code"] = rec.code.to_hex();
  j["h_size"] = rec.h_size;
  std::vector<uint64_t> ch;
  for (uint64_t rank : rec.code.nonbasis_ranks()) {
    ch.push_back(colex_unrank_bits(rank, rec.r));
  }
  j["ch"] = hex_array(ch);
  j["ingleton"] = rec.ingleton ? Json(*rec.ingleton) : Json(nullptr);
  j["witness"] = rec.witness ? to_json(*rec.witness) : Json(nullptr);
  j["provenance"] = rec.provenance;
  return j;
}

NamedMatroid matroid_from_json(const Json& j) {
  const int n = get_int(j, "n");
  const int r = get_int(j, "r");
  if (n < 0 || n > kMaxGroundSet || r < 0 || r > n) {
    throw ParseError("invalid (n, r)", 0);
  }
  try {
    if (j.contains("ch")) {
      return SparsePavingMatroid::from_bits(n, r, parse_hex_array(j.at("ch"), n, "ch"));
    }
    if (j.contains("bases")) {
      return BasisMatroid::from_bits(n, r, parse_hex_array(j.at("bases"), n, "bases"));
    }
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("invalid matroid: ") + e.what(), 0);
  }
  throw ParseError("matroid record needs 'ch' or 'bases'", 0);
}

NamedMatroid matroid_from_string(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
  return matroid_from_json(j);
}

ViolationWitness witness_from_json(const Json& j, int n) {
  if (!j.is_object() || !j.contains("K") || !j.contains("P") ||
      !j.contains("basis_pair")) {
    throw ParseError("witness needs K, P and basis_pair", 0);
  }
  if (!j.at("K").is_string()) throw ParseError("K must be a hex string", 0);
  std::vector<uint64_t> pairs = parse_hex_array(j.at("P"), n, "P");
  if (pairs.size() != 4) throw ParseError("P must hold four pairs", 0);
  const Json& bp = j.at("basis_pair");
  if (!bp.is_array() || bp.size() != 2 || !bp[0].is_number_integer() ||
      !bp[1].is_number_integer()) {
    throw ParseError("basis_pair must be two integers", 0);
  }
  ViolationWitness w;
  try {
    w.pattern = OmegaPattern::make({pairs[0], pairs[1], pairs[2], pairs[3]},
                                   ElementSet::parse_hex(j.at("K").get<std::string>(), n).bits(),
                                   n);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), 0);
  }
  w.basis_pair = {bp[0].get<int>(), bp[1].get<int>()};
  if (w.basis_pair[0] < 1 || w.basis_pair[0] >= w.basis_pair[1] ||
      w.basis_pair[1] > 4) {
    throw ParseError("basis_pair must satisfy 1 <= i < j <= 4", 0);
  }
  return w;
}

CensusRecord census_record_from_json(const Json& j) {
  CensusRecord rec;
  rec.n = get_int(j, "n");
  rec.r = get_int(j, "r");
  if (!j.contains("code") || !j.at("code").is_string()) {
    throw ParseError("missing code", 0);
  }
  rec.code = CanonicalForm::from_hex(j.at("code").get<std::string>(), rec.n, rec.r);
  rec.h_size = get_int(j, "h_size");
  if (!j.contains("ch")) throw ParseError("missing ch", 0);
  std::vector<uint64_t> ch = parse_hex_array(j.at("ch"), rec.n, "ch");
  std::vector<uint64_t> expected;
  for (uint64_t rank : rec.code.nonbasis_ranks()) {
    expected.push_back(colex_unrank_bits(rank, rec.r));
  }
  if (ch != expected || static_cast<int>(ch.size()) != rec.h_size) {
    throw ParseError("ch and h_size disagree with code", 0);
  }
  if (!j.contains("ingleton") || !j.contains("witness") || !j.contains("provenance")) {
    throw ParseError("record needs ingleton, witness and provenance", 0);
  }
  const Json& ing = j.at("ingleton");
  if (ing.is_boolean()) {
    rec.ingleton = ing.get<bool>();
  } else if (!ing.is_null()) {
    throw ParseError("ingleton must be boolean or null", 0);
  }
  if (!j.at("witness").is_null()) rec.witness = witness_from_json(j.at("witness"), rec.n);
  if (!j.at("provenance").is_number_unsigned() &&
      !j.at("provenance").is_number_integer()) {
    throw ParseError("provenance must be an integer", 0);
  }
  rec.provenance = j.at("provenance").get<uint64_t>();
  return rec;
}

std::string fnv1a_hex(std::string_view bytes) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace spmat
