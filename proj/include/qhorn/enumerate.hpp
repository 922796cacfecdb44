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

#include <span>
#include <vector>

#include "qhorn/schubert.hpp"

namespace qhorn {

/// Calls f(tuple) for every s-tuple of size-r subsets of [n], in
/// lexicographic order (first slot most significant).
template <class F>
void for_each_tuple(int n, int r, int s, F&& f) {
  const auto pool = all_subsets(n, r);
  if (pool.empty() || s <= 0) return;
  std::vector<std::size_t> idx(static_cast<std::size_t>(s), 0);
  std::vector<SchubertSubset> tuple(static_cast<std::size_t>(s), pool[0]);
  while (true) {
    for (int j = 0; j < s; ++j) tuple[j] = pool[idx[j]];
    f(std::span<const SchubertSubset>(tuple));
    int j = s - 1;
    while (j >= 0 && ++idx[j] == pool.size()) idx[j--] = 0;
    if (j < 0) break;
  }
}

/// Calls f(tuple) for every s-tuple of size-r subsets of [n] whose codims
/// sum to `target`, in lexicographic order.
template <class F>
void for_each_tuple_with_codim(int n, int r, int s, long target, F&& f) {
  const auto pool = all_subsets(n, r);
  if (pool.empty() || s <= 0) return;
  std::vector<int> codims;
  for (const auto& I : pool) codims.push_back(codim(I));
  const long box = static_cast<long>(r) * (n - r);
  std::vector<SchubertSubset> tuple(static_cast<std::size_t>(s), pool[0]);
  auto rec = [&](auto&& self, int j, long remaining) -> void {
    if (j == s) {
      if (remaining == 0) f(std::span<const SchubertSubset>(tuple));
      return;
    }
    const long slots_after = s - j - 1;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      const long left = remaining - codims[k];
      if (left < 0 || left > slots_after * box) continue;
      tuple[j] = pool[k];
      self(self, j + 1, left);
    }
  };
  rec(rec, 0, target);
}

}  // namespace qhorn
