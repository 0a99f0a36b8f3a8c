// Copyright 2026 The chandist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace chandist::detail {

/// Runs fn(i) for i in [0, count) on up to `threads` workers and returns the
/// results in index order, so merging is independent of scheduling.
template <typename Result>
std::vector<Result> run_restarts(int count, int threads,
                                 const std::function<Result(int)>& fn) {
  std::vector<Result> out(count);
  const int workers = std::max(1, std::min(threads, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      for (int i = t; i < count; i += workers) {
        try {
          out[i] = fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

/// Index of the largest value; ties go to the lowest index.
template <typename Result, typename Key>
int best_index(const std::vector<Result>& results, Key key) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(results.size()); ++i) {
    if (key(results[i]) > key(results[best])) best = i;
  }
  return best;
}

}  // namespace chandist::detail
