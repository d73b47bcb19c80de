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

#ifndef SPMAT_SRC_PARALLEL_INTERNAL_H_
#define SPMAT_SRC_PARALLEL_INTERNAL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace spmat::internal {

// Runs job(i) for every i in [0, count) on up to `jobs` threads. Jobs write
// to disjoint, index-addressed slots; callers merge in index order. The
// first exception thrown by any job is rethrown after all threads join.
inline void run_jobs(size_t count, int jobs,
                     const std::function<void(size_t)>& job) {
  const int workers =
      static_cast<int>(std::max<size_t>(1, std::min<size_t>(jobs < 1 ? 1 : jobs, count)));
  if (workers == 1) {
    for (size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (size_t i = next++; i < count; i = next++) {
        try {
          job(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace spmat::internal

#endif  // SPMAT_SRC_PARALLEL_INTERNAL_H_
