// Copyright 2026 The platobell Authors
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

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace platobell::detail {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

/**
 * Splits [0, n) into contiguous chunks and runs fn(begin, end, worker) on
 * up to `threads` workers. Runs inline when one worker suffices.
 */
inline void parallel_for(size_t n, int threads,
                         const std::function<void(size_t, size_t, int)>& fn) {
  const int t = std::max(1, std::min<int>(resolve_threads(threads),
                                          static_cast<int>(std::max<size_t>(n, 1))));
  if (t == 1) {
    fn(0, n, 0);
    return;
  }
  std::vector<std::thread> pool;
  const size_t chunk = (n + t - 1) / t;
  for (int w = 0; w < t; ++w) {
    const size_t b = std::min(n, w * chunk), e = std::min(n, b + chunk);
    pool.emplace_back([&fn, b, e, w] { fn(b, e, w); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace platobell::detail
