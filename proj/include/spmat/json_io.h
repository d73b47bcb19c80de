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

#ifndef SPMAT_JSON_IO_H_
#define SPMAT_JSON_IO_H_

#include <string>
#include <string_view>

#include <json.hpp>

#include "spmat/census.h"
#include "spmat/constructions.h"
#include "spmat/ingleton.h"
#include "spmat/matroid.h"
#include "spmat/representation.h"

namespace spmat {

using Json = nlohmann::ordered_json;

// {"n":8,"r":4,"ch":["f",...]}
Json to_json(const SparsePavingMatroid& m);
// {"n":3,"r":1,"bases":["4"]}
Json to_json(const BasisMatroid& m);
Json to_json(const NamedMatroid& m);
// {"K":"0","P":["3","c","30","c0"],"basis_pair":[3,4]}
Json to_json(const ViolationWitness& w);
// {"A":"3","B":"c","C":"30","D":"c0","lhs":15,"rhs":16}
Json to_json(const IngletonQuadruple& q);
// {"rows":r,"cols":n,"entries":["...",...],"pattern":["<hex>",...]}
Json to_json(const GenericMatrix& a);
Json to_json(const CensusRecord& rec);

// Accepts either matroid record; "ch" yields a sparse paving matroid.
// Throws ParseError.
NamedMatroid matroid_from_json(const Json& j);
NamedMatroid matroid_from_string(std::string_view text);
ViolationWitness witness_from_json(const Json& j, int n);
CensusRecord census_record_from_json(const Json& j);

// 64-bit FNV-1a, hex.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace spmat

#endif  // SPMAT_JSON_IO_H_
