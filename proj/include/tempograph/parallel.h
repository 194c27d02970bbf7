// Copyright 2026 The Tempograph Authors.
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

#ifndef TEMPOGRAPH_PARALLEL_H_
#define TEMPOGRAPH_PARALLEL_H_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tempograph {

// Returns a usable worker count: values < 1 mean "all hardware threads".
inline int EffectiveThreads(int requested) {
  if (requested >= 1) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Splits [0, n) into at most `threads` contiguous chunks and calls
// fn(chunk_index, begin, end) for each, one chunk per thread. Chunk
// boundaries depend only on n and the chunk count, so callers that write
// per-chunk results and concatenate them in chunk order get output that is
// independent of scheduling. The first exception thrown by a worker is
// rethrown on the calling thread.
template <typename Fn>
void ParallelChunks(size_t n, int threads, Fn &&fn) {
  size_t chunks = std::min<size_t>(std::max(1, threads), std::max<size_t>(n, 1));
  if (chunks <= 1) {
    fn(size_t{0}, size_t{0}, n);
    return;
  }
  std::vector<std::thread> workers;
  std::exception_ptr error;
  std::mutex error_mu;
  for (size_t c = 0; c < chunks; ++c) {
    size_t begin = n * c / chunks;
    size_t end = n * (c + 1) / chunks;
    workers.emplace_back([&, c, begin, end] {
      try {
        fn(c, begin, end);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto &w : workers) w.join();
  if (error) std::rethrow_exception(error);
}

// Number of chunks ParallelChunks will use for (n, threads).
inline size_t ChunkCount(size_t n, int threads) {
  return std::min<size_t>(std::max(1, threads), std::max<size_t>(n, 1));
}

}  // namespace tempograph

#endif  // TEMPOGRAPH_PARALLEL_H_
