// Copyright 2026 The robsel Authors
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

#ifndef ROBSEL_PARALLEL_HPP
#define ROBSEL_PARALLEL_HPP

#include <cstddef>
#include <thread>
#include <vector>

namespace robsel {

/// Runs fn(begin, end) over a block partition of [0, count) on up to
/// hardware_concurrency threads. fn must be safe to run concurrently on
/// disjoint ranges. Reductions stay deterministic as long as they combine by
/// a thread-count-independent key (e.g. cell ordinal).
template <class Fn>
void parallel_blocks(std::size_t count, Fn fn) {
  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (workers > 8) workers = 8;
  if (count < 64 || workers <= 1) {
    fn(std::size_t{0}, count);
    return;
  }
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < workers; ++t) {
    const std::size_t begin = t * chunk;
    if (begin >= count) break;
    const std::size_t end = begin + chunk < count ? begin + chunk : count;
    threads.emplace_back([&, begin, end] { fn(begin, end); });
  }
  for (auto& th : threads) th.join();
}

}  // namespace robsel

#endif  // ROBSEL_PARALLEL_HPP
