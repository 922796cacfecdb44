// Copyright 2026 The qhorn Authors
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
#include <atomic>
#include <exception>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace qhorn {

/// out[k] = f(items[k]), spread over `jobs` threads. Output order matches
/// input order regardless of scheduling. The first exception thrown by any
/// worker is rethrown after all workers stop.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, unsigned jobs, F&& f) {
  using R = std::decay_t<std::invoke_result_t<F&, const T&>>;
  std::vector<R> out;
  out.reserve(items.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(items.size())));
  if (workers <= 1) {
    for (const auto& item : items) out.push_back(f(item));
    return out;
  }
  // Separate objects per slot, so vector<bool> packing cannot race.
  std::vector<std::optional<R>> slots(items.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::atomic_flag error_set = ATOMIC_FLAG_INIT;
  auto work = [&] {
    while (!failed.load()) {
      const std::size_t k = next.fetch_add(1);
      if (k >= items.size()) return;
      try {
        slots[k] = f(items[k]);
      } catch (...) {
        if (!error_set.test_and_set()) error = std::current_exception();
        failed = true;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

}  // namespace qhorn
