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

// Schubert subsets of [n], their partition avatars in the r x (n-r) box,
// and SU(r) conjugacy classes with exact rational coordinates.

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "qhorn/arith.hpp"
#include "qhorn/error.hpp"
#include "qhorn/rational.hpp"

namespace qhorn {

/// Weakly decreasing list of positive integers. Trailing zeros are dropped
/// on construction, so equal partitions compare equal.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw DomainError("partition parts must be nonnegative");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }

  /// i-th part (0-based), zero past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  bool fits_in_box(int rows, int cols) const {
    return length() <= rows && (parts_.empty() || parts_.front() <= cols);
  }

  bool contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int i = 0; i < other.length(); ++i)
      if (other.parts_[i] > parts_[i]) return false;
    return true;
  }

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// A size-r subset {i_1 < ... < i_r} of {1, ..., n}.
class SchubertSubset {
 public:
  SchubertSubset() = default;

  SchubertSubset(int n, std::vector<int> elems) : n_(n), elems_(std::move(elems)) {
    if (n_ < 0) throw DomainError("ambient rank n must be nonnegative");
    for (std::size_t a = 0; a < elems_.size(); ++a) {
      if (elems_[a] < 1 || elems_[a] > n_)
        throw DomainError("subset element " + std::to_string(elems_[a]) + " outside [1," + std::to_string(n_) + "]");
      if (a > 0 && elems_[a] <= elems_[a - 1]) throw DomainError("subset elements must be strictly increasing");
    }
  }

  /// {n-r+1, ..., n}: the fundamental class.
  static SchubertSubset top(int r, int n) {
    std::vector<int> e(r);
    std::iota(e.begin(), e.end(), n - r + 1);
    return SchubertSubset(n, std::move(e));
  }

  /// {1, ..., r}: the point class.
  static SchubertSubset bottom(int r, int n) {
    std::vector<int> e(r);
    std::iota(e.begin(), e.end(), 1);
    return SchubertSubset(n, std::move(e));
  }

  int n() const { return n_; }
  int r() const { return static_cast<int>(elems_.size()); }
  const std::vector<int>& elems() const { return elems_; }

  /// i_a with 1-based a.
  int at(int a) const { return elems_.at(static_cast<std::size_t>(a - 1)); }

  bool contains(int i) const { return std::binary_search(elems_.begin(), elems_.end(), i); }

  auto operator<=>(const SchubertSubset&) const = default;
  bool operator==(const SchubertSubset&) const = default;

 private:
  int n_ = 0;
  std::vector<int> elems_;
};

/// Point (delta_1, ..., delta_r) of the simplex of SU(r) conjugacy classes:
/// delta_1 >= ... >= delta_r >= delta_1 - 1 and sum zero.
class ConjugacyClass {
 public:
  ConjugacyClass() = default;

  explicit ConjugacyClass(std::vector<Rational> delta) : delta_(std::move(delta)) {
    if (delta_.empty()) throw DomainError("conjugacy class must have rank >= 1");
    Rational sum = 0;
    for (std::size_t b = 0; b < delta_.size(); ++b) {
      if (b > 0 && delta_[b] > delta_[b - 1]) throw DomainError("conjugacy class entries must be weakly decreasing");
      sum += delta_[b];
    }
    if (delta_.back() < delta_.front() - 1) throw DomainError("conjugacy class spread exceeds 1");
    if (sum != 0) throw DomainError("conjugacy class entries must sum to zero");
  }

  /// Identity class (all zeros) of rank r.
  static ConjugacyClass identity(int r) { return ConjugacyClass(std::vector<Rational>(static_cast<std::size_t>(r), 0)); }

  int rank() const { return static_cast<int>(delta_.size()); }
  const std::vector<Rational>& delta() const { return delta_; }
  const Rational& operator[](std::size_t b) const { return delta_[b]; }

  bool operator==(const ConjugacyClass&) const = default;

 private:
  std::vector<Rational> delta_;
};

// ---------------------------------------------------------------------------
// Subset / partition combinatorics

/// sum_a (n - r + a - i_a).
inline int codim(const SchubertSubset& I) {
  const int n = I.n(), r = I.r();
  int c = 0;
  for (int a = 1; a <= r; ++a) c += n - r + a - I.at(a);
  return c;
}

inline Partition subset_to_partition(const SchubertSubset& I) {
  const int n = I.n(), r = I.r();
  std::vector<int> parts(static_cast<std::size_t>(r));
  for (int a = 1; a <= r; ++a) parts[a - 1] = n - r + a - I.at(a);
  return Partition(std::move(parts));
}

inline SchubertSubset partition_to_subset(const Partition& lambda, int r, int n) {
  if (r < 0 || r > n) throw DomainError("need 0 <= r <= n");
  if (!lambda.fits_in_box(r, n - r))
    throw DomainError("partition does not fit in the " + std::to_string(r) + "x" + std::to_string(n - r) + " box");
  std::vector<int> elems(static_cast<std::size_t>(r));
  for (int a = 1; a <= r; ++a) elems[a - 1] = n - r + a - lambda[a - 1];
  return SchubertSubset(n, std::move(elems));
}

/// Complement of lambda in the r x (n-r) box, rotated: the dual Schubert class.
inline Partition box_dual(const Partition& lambda, int r, int n) {
  if (!lambda.fits_in_box(r, n - r)) throw DomainError("partition does not fit in the box");
  std::vector<int> parts(static_cast<std::size_t>(r));
  for (int a = 1; a <= r; ++a) parts[a - 1] = (n - r) - lambda[r - a];
  return Partition(std::move(parts));
}

/// {n + 1 - i : i in I}.
inline SchubertSubset poincare_dual(const SchubertSubset& I) {
  std::vector<int> elems;
  elems.reserve(I.elems().size());
  for (auto it = I.elems().rbegin(); it != I.elems().rend(); ++it) elems.push_back(I.n() + 1 - *it);
  return SchubertSubset(I.n(), std::move(elems));
}

/// All size-r subsets of [n] in lexicographic order.
inline std::vector<SchubertSubset> all_subsets(int n, int r) {
  std::vector<SchubertSubset> out;
  if (r < 0 || r > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(r));
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.emplace_back(n, cur);
    int a = r - 1;
    while (a >= 0 && cur[a] == n - r + a + 1) --a;
    if (a < 0) break;
    ++cur[a];
    for (int b = a + 1; b < r; ++b) cur[b] = cur[b - 1] + 1;
  }
  return out;
}

/// T(r,n): subtract one from every element, wrapping 0 to n.
inline SchubertSubset t_shift(const SchubertSubset& I) {
  if (I.r() < 1) throw DomainError("t_shift needs r >= 1");
  const auto& e = I.elems();
  std::vector<int> out;
  out.reserve(e.size());
  if (e.front() > 1) {
    for (int i : e) out.push_back(i - 1);
  } else {
    for (std::size_t a = 1; a < e.size(); ++a) out.push_back(e[a] - 1);
    out.push_back(I.n());
  }
  return SchubertSubset(I.n(), std::move(out));
}

/// T(r,n)^k for k >= 0.
inline SchubertSubset t_shift_pow(SchubertSubset I, Int k) {
  if (k < 0) throw DomainError("t_shift_pow needs k >= 0");
  if (I.n() > 0) k %= I.n();
  for (Int i = 0; i < k; ++i) I = t_shift(I);
  return I;
}

// ---------------------------------------------------------------------------
// Conjugacy-class maps

/// lambda_I(Delta) = sum_{i in I} delta_i.
inline Rational lambda_weight(const SchubertSubset& I, const ConjugacyClass& delta) {
  if (delta.rank() != I.n())
    throw DomainError("rank mismatch: subset of [" + std::to_string(I.n()) + "] against class of rank " +
                      std::to_string(delta.rank()));
  Rational sum = 0;
  for (int i : I.elems()) sum += delta[static_cast<std::size_t>(i - 1)];
  return sum;
}

/// (l_1, ..., l_r) with l_a = (n - r + a - i_a) / (n - r).
inline std::vector<Rational> big_lambda(const SchubertSubset& I) {
  const int n = I.n(), r = I.r();
  if (r <= 0 || r >= n) throw DomainError("big_lambda needs 0 < r < n");
  std::vector<Rational> l;
  l.reserve(static_cast<std::size_t>(r));
  for (int a = 1; a <= r; ++a) l.emplace_back(n - r + a - I.at(a), n - r);
  return l;
}

/// Trace-normalized big_lambda: an SU(r) conjugacy class.
inline ConjugacyClass beta(const SchubertSubset& I) {
  std::vector<Rational> l = big_lambda(I);
  Rational c = 0;
  for (const auto& x : l) c += x;
  c /= static_cast<int>(l.size());
  for (auto& x : l) x -= c;
  return ConjugacyClass(std::move(l));
}

/// Action of the k-th power of the central generator exp(2 pi i / r).
inline ConjugacyClass zeta_act(const ConjugacyClass& delta, Int k) {
  const int r = delta.rank();
  const Int steps = pos_mod(k, r);
  std::vector<Rational> cur = delta.delta();
  const Rational step(1, r);
  for (Int t = 0; t < steps; ++t) {
    std::vector<Rational> next;
    next.reserve(cur.size());
    for (std::size_t b = 1; b < cur.size(); ++b) next.push_back(cur[b] + step);
    next.push_back(cur.front() + step - 1);
    cur = std::move(next);
  }
  return ConjugacyClass(std::move(cur));
}

/// Inverse class (-delta_r, ..., -delta_1).
inline ConjugacyClass inverse_class(const ConjugacyClass& delta) {
  std::vector<Rational> out;
  out.reserve(delta.delta().size());
  for (auto it = delta.delta().rbegin(); it != delta.delta().rend(); ++it) out.push_back(-*it);
  return ConjugacyClass(std::move(out));
}

}  // namespace qhorn
