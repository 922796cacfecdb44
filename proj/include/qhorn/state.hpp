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

// Schubert states (d, r, D, n, I): Schubert conditions at marked points on
// degree -d, rank r subbundles of the evenly split bundle of degree -D and
// rank n on the projective line. D = 0 recovers ordinary Gromov-Witten
// counts; twist and shift move between states without changing the count.

#include <algorithm>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "qhorn/arith.hpp"
#include "qhorn/quantum.hpp"
#include "qhorn/schubert.hpp"

namespace qhorn {

class SchubertState {
 public:
  SchubertState() = default;

  SchubertState(Int d, int r, Int D, int n, std::vector<SchubertSubset> subsets,
                std::vector<std::string> points = {})
      : d_(d), r_(r), D_(D), n_(n), subsets_(std::move(subsets)), points_(std::move(points)) {
    if (n_ < 1) throw DomainError("state needs n >= 1");
    if (r_ < 0 || r_ > n_) throw DomainError("state needs 0 <= r <= n");
    if (subsets_.empty()) throw DomainError("state needs at least one marked point");
    for (const auto& I : subsets_)
      if (I.n() != n_ || I.r() != r_)
        throw DomainError("every subset of a state must be a size-" + std::to_string(r_) + " subset of [" +
                          std::to_string(n_) + "]");
    if (points_.empty()) {
      for (std::size_t p = 0; p < subsets_.size(); ++p) points_.push_back("p" + std::to_string(p + 1));
    }
    if (points_.size() != subsets_.size()) throw DomainError("one label per marked point");
    if (std::set<std::string>(points_.begin(), points_.end()).size() != points_.size())
      throw DomainError("marked point labels must be distinct");
  }

  Int d() const { return d_; }
  int r() const { return r_; }
  Int D() const { return D_; }
  int n() const { return n_; }
  std::size_t num_points() const { return subsets_.size(); }
  const std::vector<SchubertSubset>& subsets() const { return subsets_; }
  const std::vector<std::string>& points() const { return points_; }

  std::size_t point_index(const std::string& label) const {
    auto it = std::find(points_.begin(), points_.end(), label);
    if (it == points_.end()) throw DomainError("'" + label + "' is not a marked point");
    return static_cast<std::size_t>(it - points_.begin());
  }

  bool operator==(const SchubertState&) const = default;

 private:
  Int d_ = 0;
  int r_ = 0;
  Int D_ = 0;
  int n_ = 1;
  std::vector<SchubertSubset> subsets_;
  std::vector<std::string> points_;
};

/// chi(Hom(Z_{d,r}, Z_{b,m})) = rm + dm - br.
inline Int euler_chi(Int d, Int r, Int b, Int m) {
  return checked_sub(checked_add(checked_mul(r, m), checked_mul(d, m)), checked_mul(b, r));
}

/// Dimension of the space of degree -d rank r subbundles of Z_{D,n}.
inline Int moduli_dim(Int d, int r, Int D, int n) { return euler_chi(d, r, checked_sub(D, d), n - r); }

/// Whether some degree -d rank r subbundle of Z_{D,n} exists: the Hom
/// bundle from Z_{d,r} to Z_{D-d,n-r} must have no H^1, i.e. the largest
/// summand degree of the source, -floor(d/r), minus one is at most the
/// smallest summand degree of the target, -ceil((D-d)/(n-r)), plus one.
inline bool quot_nonempty(Int d, int r, Int D, int n) {
  if (r < 0 || r > n) throw DomainError("need 0 <= r <= n");
  if (r == n) return D == d;
  if (r == 0) return d == 0;
  return floor_div(d, r) - ceil_div(checked_sub(D, d), n - r) >= -1;
}

/// Expected dimension of the intersection.
inline Int state_dim(const SchubertState& s) {
  Int total = moduli_dim(s.d(), s.r(), s.D(), s.n());
  for (const auto& I : s.subsets()) total = checked_sub(total, codim(I));
  return total;
}

/// (d + k r, r, D + k n, n, I).
inline SchubertState twist(const SchubertState& s, Int k) {
  return SchubertState(checked_add(s.d(), checked_mul(k, s.r())), s.r(), checked_add(s.D(), checked_mul(k, s.n())),
                       s.n(), s.subsets(), s.points());
}

/// Shift at the marked point with index `p`: D drops by one, I^p moves by
/// T(r,n), and d drops by one exactly when 1 is in I^p.
inline SchubertState shift(const SchubertState& s, std::size_t p) {
  if (p >= s.num_points()) throw DomainError("point index out of range");
  if (s.r() < 1) throw DomainError("shift needs r >= 1");
  std::vector<SchubertSubset> J = s.subsets();
  const bool wraps = J[p].at(1) == 1;
  J[p] = t_shift(J[p]);
  return SchubertState(wraps ? s.d() - 1 : s.d(), s.r(), s.D() - 1, s.n(), std::move(J), s.points());
}

inline SchubertState shift(const SchubertState& s, const std::string& label) { return shift(s, s.point_index(label)); }

/// Equivalent state with D = 0: twist into 0 <= D < n, then shift D times
/// at `shift_point`.
inline SchubertState normalize(const SchubertState& s, std::size_t shift_point = 0) {
  if (shift_point >= s.num_points()) throw DomainError("point index out of range");
  SchubertState t = twist(s, -floor_div(s.D(), s.n()));
  while (t.D() > 0) t = shift(t, shift_point);
  return t;
}

namespace detail {
inline void check_proper(const SchubertState& s) {
  if (s.r() <= 0 || s.r() >= s.n()) throw DomainError("operation needs 0 < r < n");
}
}  // namespace detail

/// Number of points in the generic intersection when finite, 0 otherwise.
inline Int gen_gw(const SchubertState& s) {
  detail::check_proper(s);
  const SchubertState t = normalize(s);
  if (t.d() < 0) return 0;
  return gw_number(t.r(), t.n(), t.d(), std::span<const SchubertSubset>(t.subsets()));
}

/// Whether the generic intersection is nonempty: after normalization to
/// D = 0, some q^c sigma_J with 0 <= c <= d occurs in the product of all
/// the Schubert classes.
inline bool is_nonnull(const SchubertState& s) {
  detail::check_proper(s);
  const SchubertState t = normalize(s);
  if (t.d() < 0) return false;
  const auto lowest =
      quantum_multi_product(t.r(), t.n(), std::span<const SchubertSubset>(t.subsets())).lowest_degree();
  return lowest && *lowest <= t.d();
}

}  // namespace qhorn
