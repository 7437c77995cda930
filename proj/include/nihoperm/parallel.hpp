// Copyright 2026 The nihoperm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <type_traits>
#include <vector>

namespace nihoperm {

/// Splits [0, n) into `parallelism` contiguous chunks, runs fn(begin, end)
/// on each (on its own thread when parallelism > 1) and returns the results
/// in chunk order, so merges are independent of scheduling.
template <class Fn>
auto MapChunks(std::uint64_t n, unsigned parallelism, Fn&& fn) {
  using Result = std::invoke_result_t<Fn&, std::uint64_t, std::uint64_t>;
  const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(parallelism, n));
  std::vector<Result> results;
  results.reserve(chunks);
  auto bound = [&](std::uint64_t c) { return n * c / chunks; };
  if (chunks == 1) {
    results.push_back(fn(std::uint64_t{0}, n));
    return results;
  }
  std::vector<std::future<Result>> futures;
  futures.reserve(chunks);
  for (std::uint64_t c = 0; c < chunks; ++c) {
    futures.push_back(std::async(std::launch::async, [&fn, lo = bound(c), hi = bound(c + 1)] { return fn(lo, hi); }));
  }
  for (auto& f : futures) results.push_back(f.get());
  return results;
}

}  // namespace nihoperm
