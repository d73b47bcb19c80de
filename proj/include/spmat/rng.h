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

#ifndef SPMAT_RNG_H_
#define SPMAT_RNG_H_

#include <cstdint>

namespace spmat {

// xoshiro256** seeded through splitmix64. The bounded draw is implemented
// here rather than with <random> distributions so that streams are identical
// across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t next();
  // Uniform in [0, bound); bound > 0.
  uint64_t below(uint64_t bound);
  // Uniform in [0, 1).
  double uniform01();

 private:
  uint64_t state_[4];
};

}  // namespace spmat

#endif  // SPMAT_RNG_H_
