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

#ifndef SPMAT_CONSTRUCTIONS_H_
#define SPMAT_CONSTRUCTIONS_H_

#include <cstdint>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "spmat/element_set.h"
#include "spmat/matroid.h"

namespace spmat {

// Sum of the elements of x modulo n.
int gs_color(const ElementSet& x, int n);

struct GsColoring {
  int n = 0;
  int r = 0;
  std::vector<uint64_t> class_sizes;  // indexed by colour
};

GsColoring gs_coloring(int n, int r);

// Sparse paving matroid whose circuit-hyperplanes are the colour class γ.
SparsePavingMatroid gs_matroid(int n, int r, int gamma);

// Largest colour class, smallest γ on ties.
std::pair<int, SparsePavingMatroid> gs_best(int n, int r);

// Pairs {1,2},{3,4},{5,6},{7,8}; every pair union except {5,6,7,8} is a
// circuit-hyperplane.
SparsePavingMatroid vamos();
BasisMatroid u02_plus_u11();  // loops 1, 2; coloop 3
BasisMatroid u22_plus_u01();  // free pair 1, 2; loop 3

using NamedMatroid = std::variant<SparsePavingMatroid, BasisMatroid>;

// "vamos", "uniform:<r>,<n>", "u02_plus_u11", "u22_plus_u01".
NamedMatroid named(std::string_view name);

BasisMatroid as_basis(const NamedMatroid& m);

}  // namespace spmat

#endif  // SPMAT_CONSTRUCTIONS_H_
