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

// Small quantum cohomology of Gr(r,n).
//
// Products are computed by rim-hook reduction: multiply Schur functions
// in r variables classically, then strip n-rim hooks from every partition
// poking out of the r x (n-r) box. Each removed hook contributes one power
// of q and the sign (-1)^(r - height). On the beta-number abacus with r
// beads, removing a hook moves one bead down by n; height - 1 is the number
// of beads jumped over.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qhorn/arith.hpp"
#include "qhorn/lr.hpp"
#include "qhorn/memo.hpp"
#include "qhorn/schubert.hpp"

namespace qhorn {

/// Finitely supported integer combination of q^d sigma_lambda in QH*(Gr(r,n)).
class QuantumElement {
 public:
  using Key = std::pair<Int, Partition>;  // (d, lambda)

  QuantumElement() = default;
  QuantumElement(int r, int n) : r_(r), n_(n) {
    if (r < 0 || r > n) throw DomainError("need 0 <= r <= n");
  }

  static QuantumElement schubert(int r, int n, const Partition& lambda, Int d = 0) {
    QuantumElement e(r, n);
    e.add(d, lambda, 1);
    return e;
  }

  int r() const { return r_; }
  int n() const { return n_; }

  void add(Int d, const Partition& lambda, Int coeff) {
    if (coeff == 0) return;
    if (d < 0) throw DomainError("negative q-degree");
    if (!lambda.fits_in_box(r_, n_ - r_)) throw DomainError("partition does not fit in the box");
    auto [it, inserted] = terms_.try_emplace(Key{d, lambda}, 0);
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  }

  Int coefficient(Int d, const Partition& lambda) const {
    auto it = terms_.find(Key{d, lambda});
    return it == terms_.end() ? 0 : it->second;
  }

  /// Ordered by d ascending, then partition lexicographic.
  const std::map<Key, Int>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Smallest q-degree carrying a nonzero term.
  std::optional<Int> lowest_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.first;
  }

  bool operator==(const QuantumElement&) const = default;

 private:
  int r_ = 0;
  int n_ = 0;
  std::map<Key, Int> terms_;
};

/// Result of stripping n-rim hooks off a partition with at most r rows.
struct RimHookReduction {
  int sign = 1;
  Int degree = 0;
  Partition core;
};

/// Rim-hook reduction of s_nu into QH*(Gr(r,n)); nullopt when s_nu maps to 0.
inline std::optional<RimHookReduction> reduce_rim_hooks(const Partition& nu, int r, int n) {
  if (nu.length() > r) return std::nullopt;
  std::vector<int> beads(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) beads[i] = nu[i] + r - 1 - i;
  int jumped = 0;
  Int hooks = 0;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int& b : beads) {
      const int target = b - n;
      if (target < 0) continue;
      if (std::find(beads.begin(), beads.end(), target) != beads.end()) continue;
      for (int other : beads)
        if (other > target && other < b) ++jumped;
      b = target;
      ++hooks;
      moved = true;
      break;
    }
  }
  std::sort(beads.begin(), beads.end(), std::greater<int>());
  std::vector<int> parts(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) parts[i] = beads[i] - (r - 1 - i);
  Partition core(std::move(parts));
  if (!core.fits_in_box(r, n - r)) return std::nullopt;
  // (-1)^(r - ht) per hook, with ht - 1 = beads jumped.
  const Int parity = (jumped + hooks * (r - 1)) % 2;
  return RimHookReduction{parity == 0 ? 1 : -1, hooks, std::move(core)};
}

namespace detail {

inline void check_grassmannian(int r, int n) {
  if (r <= 0 || r >= n) throw DomainError("quantum products need 0 < r < n (got r=" + std::to_string(r) +
                                          ", n=" + std::to_string(n) + ")");
}

inline Memo<std::tuple<int, int, Partition, Partition>, QuantumElement>& qprod_memo() {
  static Memo<std::tuple<int, int, Partition, Partition>, QuantumElement> memo;
  return memo;
}

inline QuantumElement rim_hook_product(int r, int n, const Partition& lambda, const Partition& mu) {
  QuantumElement out(r, n);
  for (const auto& [nu, c] : schur_multiply(lambda, mu, r)) {
    auto red = reduce_rim_hooks(nu, r, n);
    if (!red) continue;
    out.add(red->degree, red->core, checked_mul(c, red->sign));
  }
  const int grade = lambda.size() + mu.size();
  for (const auto& [key, c] : out.terms()) {
    if (c < 0) throw InternalError("negative quantum structure constant");
    if (key.second.size() + key.first * n != grade) throw InternalError("quantum product violates grading");
  }
  return out;
}

}  // namespace detail

/// sigma_lambda * sigma_mu in QH*(Gr(r,n)).
inline QuantumElement quantum_product(int r, int n, const Partition& lambda, const Partition& mu) {
  detail::check_grassmannian(r, n);
  if (!lambda.fits_in_box(r, n - r) || !mu.fits_in_box(r, n - r))
    throw DomainError("partition does not fit in the " + std::to_string(r) + "x" + std::to_string(n - r) + " box");
  // Commutative: key on the ordered pair.
  const bool swap = mu < lambda;
  const Partition& a = swap ? mu : lambda;
  const Partition& b = swap ? lambda : mu;
  return detail::qprod_memo().get_or_compute({r, n, a, b}, [&] { return detail::rim_hook_product(r, n, a, b); });
}

/// x * sigma_mu, extended linearly in x.
inline QuantumElement multiply(const QuantumElement& x, const Partition& mu) {
  QuantumElement out(x.r(), x.n());
  for (const auto& [key, c] : x.terms()) {
    const auto& [d, lambda] = key;
    const QuantumElement prod = quantum_product(x.r(), x.n(), lambda, mu);
    for (const auto& [key2, c2] : prod.terms())
      out.add(checked_add(d, key2.first), key2.second, checked_mul(c, c2));
  }
  return out;
}

/// x * y, extended bilinearly.
inline QuantumElement multiply(const QuantumElement& x, const QuantumElement& y) {
  if (x.r() != y.r() || x.n() != y.n()) throw DomainError("multiplying elements of different rings");
  QuantumElement out(x.r(), x.n());
  for (const auto& [key, c] : y.terms()) {
    const QuantumElement prod = multiply(x, key.second);
    for (const auto& [key2, c2] : prod.terms())
      out.add(checked_add(key.first, key2.first), key2.second, checked_mul(c, c2));
  }
  return out;
}

/// Left fold sigma_1 * sigma_2 * ... * sigma_k.
inline QuantumElement quantum_multi_product(int r, int n, std::span<const Partition> factors) {
  detail::check_grassmannian(r, n);
  if (factors.empty()) throw DomainError("quantum_multi_product needs at least one factor");
  if (!factors.front().fits_in_box(r, n - r)) throw DomainError("partition does not fit in the box");
  QuantumElement acc = QuantumElement::schubert(r, n, factors.front());
  for (std::size_t k = 1; k < factors.size(); ++k) acc = multiply(acc, factors[k]);
  return acc;
}

inline QuantumElement quantum_multi_product(int r, int n, std::span<const SchubertSubset> subsets) {
  std::vector<Partition> parts;
  parts.reserve(subsets.size());
  for (const auto& I : subsets) parts.push_back(subset_to_partition(I));
  return quantum_multi_product(r, n, std::span<const Partition>(parts));
}

/// Largest degree a nonzero s-point invariant of Gr(r,n) can have.
inline Int max_degree(int r, int n, int s) { return floor_div(Int(s - 1) * r * (n - r), n); }

/// Grading of a possibly nonzero GW number: sum of codims = r(n-r) + dn.
inline bool graded(int r, int n, Int d, std::span<const SchubertSubset> subsets) {
  Int total = 0;
  for (const auto& I : subsets) total += codim(I);
  return total == Int(r) * (n - r) + d * n;
}

/// <omega_{I^1}, ..., omega_{I^s}>_d for Gr(r,n).
inline Int gw_number(int r, int n, Int d, std::span<const SchubertSubset> subsets) {
  detail::check_grassmannian(r, n);
  if (d < 0) throw DomainError("degree d must be nonnegative");
  if (subsets.empty()) throw DomainError("need at least one marked point");
  for (const auto& I : subsets)
    if (I.n() != n || I.r() != r) throw DomainError("subset is not a size-r subset of [n]");
  if (!graded(r, n, d, subsets)) return 0;
  std::vector<Partition> parts;
  for (const auto& I : subsets) parts.push_back(subset_to_partition(I));
  while (parts.size() < 3) parts.insert(parts.begin(), Partition{});
  const Partition dual = box_dual(parts.back(), r, n);
  parts.pop_back();
  return quantum_multi_product(r, n, std::span<const Partition>(parts)).coefficient(d, dual);
}

}  // namespace qhorn
