// Copyright 2026 The lpnc Authors
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

#ifndef LPNC_PARALLEL_H_
#define LPNC_PARALLEL_H_

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace lpnc {

/// Splits [0, n) into contiguous chunks, runs `body(begin, end)` for each on
/// its own thread and returns the per-chunk results in chunk order.
/// threads == 0 picks the hardware concurrency.
template <typename Body>
auto parallel_chunks(std::uint64_t n, unsigned threads, Body body) {
  using Result = decltype(body(std::uint64_t{0}, std::uint64_t{0}));
  if (threads == 0) {
    threads = std::max(1U, std::thread::hardware_concurrency());
  }
  const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, n));
  std::vector<Result> results(chunks);
  if (chunks == 1) {
    results[0] = body(0, n);
    return results;
  }
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  for (std::uint64_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = n * c / chunks;
    const std::uint64_t end = n * (c + 1) / chunks;
    pool.emplace_back([&results, &body, c, begin, end] { results[c] = body(begin, end); });
  }
  for (auto& t : pool) {
    t.join();
  }
  return results;
}

}  // namespace lpnc

#endif  // LPNC_PARALLEL_H_
