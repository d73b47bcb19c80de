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
#include <string>
#include <variant>

#include "doctest.h"
#include "spmat/census.h"
#include "spmat/constructions.h"
#include "spmat/element_set.h"
#include "spmat/errors.h"
#include "spmat/ingleton.h"
#include "spmat/json_io.h"

TEST_CASE("element set text") {
  const auto s = spmat::ElementSet::parse("{1,2,5,6}", 8);
  CHECK(s.bits() == 0x33);
  CHECK(s.to_hex() == "33");
  CHECK(s.to_string() == "{1,2,5,6}");
  CHECK(spmat::ElementSet::parse("33", 8) == s);
  CHECK(spmat::ElementSet::parse_hex("C0", 8).bits() == 0xc0);
  CHECK(spmat::ElementSet(0, 8).to_hex() == "0");
  CHECK(spmat::mask_to_hex(0xf0) == "f0");
  CHECK_THROWS(spmat::ElementSet::parse_hex("100", 8));
  CHECK_THROWS(spmat::ElementSet::parse_hex("xyz", 8));
}

TEST_CASE("fnv1a") {
  CHECK(spmat::fnv1a_hex("") == "cbf29ce484222325");
  CHECK(spmat::fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(spmat::fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("matroid round trips") {
  const auto v8 = spmat::vamos();
  const auto j = spmat::to_json(v8);
  CHECK(j["n"] == 8);
  CHECK(j["r"] == 4);
  CHECK(j["ch"].size() == 5);
  const auto back = spmat::matroid_from_json(j);
  REQUIRE(std::holds_alternative<spmat::SparsePavingMatroid>(back));
  CHECK(std::get<spmat::SparsePavingMatroid>(back) == v8);
  CHECK(spmat::matroid_from_string(j.dump()) == back);

  const auto bm = spmat::as_basis(spmat::named("u22_plus_u01"));
  const auto jb = spmat::to_json(bm);
  CHECK(jb.dump() == R"({"n":3,"r":2,"bases":["3"]})");
  const auto bb = spmat::matroid_from_json(jb);
  REQUIRE(std::holds_alternative<spmat::BasisMatroid>(bb));
  CHECK(std::get<spmat::BasisMatroid>(bb) == bm);
}

TEST_CASE("matroid parse errors") {
  CHECK_THROWS_AS(spmat::matroid_from_string("{"), spmat::ParseError);
  CHECK_THROWS_AS(spmat::matroid_from_string(R"({"n":8})"), spmat::ParseError);
  CHECK_THROWS_AS(spmat::matroid_from_string(R"({"n":8,"r":9,"ch":[]})"),
                  spmat::ParseError);
  // Adjacent circuit-hyperplanes.
  CHECK_THROWS_AS(spmat::matroid_from_string(R"({"n":8,"r":4,"ch":["f","17"]})"),
                  spmat::ParseError);
  // Wrong size.
  CHECK_THROWS_AS(spmat::matroid_from_string(R"({"n":8,"r":4,"ch":["7"]})"),
                  spmat::ParseError);
  CHECK_THROWS_AS(spmat::matroid_from_string(R"({"n":3,"r":2})"),
                  spmat::ParseError);
}

TEST_CASE("witness round trip") {
  const auto v8 = spmat::vamos();
  const auto w = spmat::ingleton_fast_sp(v8);
  REQUIRE(w);
  const auto j = spmat::to_json(*w);
  CHECK(j.dump() == R"({"K":"0","P":["3","c","30","c0"],"basis_pair":[3,4]})");
  CHECK(spmat::witness_from_json(j, 8) == *w);
  const auto q = spmat::witness_to_quadruple(v8, *w);
  const auto jq = spmat::to_json(q);
  CHECK(jq["lhs"] == 15);
  CHECK(jq["rhs"] == 16);
}

TEST_CASE("census record round trip") {
  const auto cls = spmat::enumerate_iso_classes(6, 3);
  for (const auto& rec : cls) {
    const auto j = spmat::to_json(rec);
    CHECK(spmat::census_record_from_json(j) == rec);
    CHECK(spmat::census_record_from_json(spmat::Json::parse(j.dump())) == rec);
  }
  auto it = std::find_if(cls.begin(), cls.end(),
                         [](const auto& rec) { return rec.h_size > 0; });
  REQUIRE(it != cls.end());
  auto j = spmat::to_json(*it);
  j["ch"].push_back("7");
  CHECK_THROWS_AS(spmat::census_record_from_json(j), spmat::ParseError);
}
