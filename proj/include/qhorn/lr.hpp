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

// Littlewood-Richardson coefficients and Schur-basis products.
//
// Two independent enumerations of LR tableaux live here:
//   * lr_coefficient fills a fixed skew shape nu/lambda cell by cell in
//     reverse reading order, checking the lattice condition as it goes;
//   * schur_multiply grows lambda by one horizontal strip per letter of mu
//     and reads off nu at the end.
// They agree by definition of the LR rule, and the test suite checks that.

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "qhorn/arith.hpp"
#include "qhorn/memo.hpp"
#include "qhorn/schubert.hpp"

namespace qhorn {

/// Finite map Partition -> positive coefficient.
using SchurExpansion = std::map<Partition, Int>;

namespace detail {

class SkewFiller {
 public:
  SkewFiller(const Partition& lambda, const Partition& mu, const Partition& nu)
      : lambda_(lambda), mu_(mu), nu_(nu), counts_(static_cast<std::size_t>(mu.length()) + 1, 0) {
    for (int i = 0; i < nu.length(); ++i)
      for (int j = nu[i] - 1; j >= lambda[i]; --j) cells_.push_back({i, j});
    grid_.resize(static_cast<std::size_t>(nu.length()));
    for (int i = 0; i < nu.length(); ++i) grid_[i].assign(static_cast<std::size_t>(nu[i]), 0);
  }

  Int count() { return fill(0); }

 private:
  struct Cell {
    int row, col;
  };

  Int fill(std::size_t idx) {
    if (idx == cells_.size()) return 1;
    const auto [i, j] = cells_[idx];
    int upper = mu_.length();
    // Row weakly increasing: bounded by the entry to the right, if skew.
    if (j + 1 < nu_[i]) upper = std::min(upper, grid_[i][j + 1]);
    int lower = 1;
    // Column strictly increasing: exceed the entry above, if skew.
    if (i > 0 && j >= lambda_[i - 1]) lower = grid_[i - 1][j] + 1;
    Int total = 0;
    for (int v = lower; v <= upper; ++v) {
      if (counts_[v] >= mu_[v - 1]) continue;
      if (v > 1 && counts_[v] + 1 > counts_[v - 1]) continue;
      ++counts_[v];
      grid_[i][j] = v;
      total = checked_add(total, fill(idx + 1));
      grid_[i][j] = 0;
      --counts_[v];
    }
    return total;
  }

  const Partition& lambda_;
  const Partition& mu_;
  const Partition& nu_;
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> grid_;
  std::vector<int> counts_;
};

class StripGrower {
 public:
  StripGrower(const Partition& lambda, const Partition& mu, int max_rows)
      : mu_(mu), max_rows_(max_rows), shape_(static_cast<std::size_t>(max_rows), 0) {
    for (int i = 0; i < lambda.length(); ++i) shape_[i] = lambda[i];
  }

  SchurExpansion run() {
    std::vector<int> none(static_cast<std::size_t>(max_rows_), 0);
    place_letter(1, none);
    return std::move(out_);
  }

 private:
  // prev[i] = number of (k-1)'s placed in row i.
  void place_letter(int k, const std::vector<int>& prev) {
    if (k > mu_.length()) {
      Int& slot = out_[Partition(shape_)];
      slot = checked_add(slot, 1);
      return;
    }
    std::vector<int> base = shape_;
    std::vector<int> placed(static_cast<std::size_t>(max_rows_), 0);
    place_row(k, 0, mu_[k - 1], 0, 0, base, prev, placed);
  }

  void place_row(int k, int row, int remaining, int cum_here, int cum_prev, const std::vector<int>& base,
                 const std::vector<int>& prev, std::vector<int>& placed) {
    if (remaining == 0) {
      place_letter(k + 1, placed);
      return;
    }
    if (row >= max_rows_) return;
    int cap = remaining;
    if (row > 0) cap = std::min(cap, base[row - 1] - base[row]);
    if (k > 1) {
      // Lattice: #k in rows <= row must not exceed #(k-1) in rows < row.
      cap = std::min(cap, cum_prev - cum_here);
    }
    const int next_cum_prev = cum_prev + prev[row];
    for (int x = cap; x >= 0; --x) {
      shape_[row] = base[row] + x;
      placed[row] = x;
      place_row(k, row + 1, remaining - x, cum_here + x, next_cum_prev, base, prev, placed);
    }
    shape_[row] = base[row];
    placed[row] = 0;
  }

  const Partition& mu_;
  int max_rows_;
  std::vector<int> shape_;
  SchurExpansion out_;
};

inline Memo<std::tuple<Partition, Partition, Partition>, Int>& lr_memo() {
  static Memo<std::tuple<Partition, Partition, Partition>, Int> memo;
  return memo;
}

inline Memo<std::tuple<Partition, Partition, int>, SchurExpansion>& schur_memo() {
  static Memo<std::tuple<Partition, Partition, int>, SchurExpansion> memo;
  return memo;
}

}  // namespace detail

/// c^nu_{lambda, mu}: number of LR skew tableaux of shape nu/lambda and content mu.
inline Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.size() != lambda.size() + mu.size()) return 0;
  if (!nu.contains(lambda) || !nu.contains(mu)) return 0;
  return detail::lr_memo().get_or_compute({lambda, mu, nu},
                                          [&] { return detail::SkewFiller(lambda, mu, nu).count(); });
}

/// s_lambda * s_mu in the Schur basis. With `rows`, terms with more rows are
/// dropped (they vanish among symmetric functions in `rows` variables).
inline SchurExpansion schur_multiply(const Partition& lambda, const Partition& mu,
                                     std::optional<int> rows = std::nullopt) {
  const int max_rows = rows ? *rows : lambda.length() + mu.length();
  if (max_rows < 0) throw DomainError("row bound must be nonnegative");
  if (lambda.length() > max_rows || mu.length() > max_rows) return {};
  return detail::schur_memo().get_or_compute({lambda, mu, max_rows},
                                             [&] { return detail::StripGrower(lambda, mu, max_rows).run(); });
}

}  // namespace qhorn
