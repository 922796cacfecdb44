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

// Recursive quantum Horn inequalities.
//
// Two decision procedures for the multiplicative eigenvalue polytope
// Gamma(n,s) (tuples of SU(n) classes realizable with product I):
//   * gamma_member_gw checks sum_j lambda_{I^j}(Delta^j) <= d over every
//     (r, d, I) with a nonzero Gromov-Witten number;
//   * gamma_member_recursive replaces the GW condition by membership of
//     (zeta^d beta(I^1), beta(I^2), ...) in Gamma(r,s), recursively, so no
//     quantum cohomology is used at all.
// Also the sub-state inequality criterion for non-nullness of Schubert
// states and the lowest-q-power criterion for quantum products.

#include <map>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qhorn/arith.hpp"
#include "qhorn/enumerate.hpp"
#include "qhorn/memo.hpp"
#include "qhorn/parallel.hpp"
#include "qhorn/quantum.hpp"
#include "qhorn/schubert.hpp"
#include "qhorn/state.hpp"

namespace qhorn {

// ---------------------------------------------------------------------------
// Sub-state inequalities for Schubert states

/// Which sub-states the inequality system ranges over.
enum class Variant {
  nonnull,     // every non-null sub-state
  gw_nonzero,  // sub-states with nonzero generalized GW number
  gw_one,      // sub-states with generalized GW number exactly 1
};

/// (d~, r~, K): a Schubert state (d~, r~, d, r, K) living inside the
/// degree -d rank r bundle of a parent state; K^p are subsets of [r].
struct SubState {
  Int d = 0;
  int r = 0;
  std::vector<SchubertSubset> K;

  bool operator==(const SubState&) const = default;
};

inline SchubertState induced_state(const SchubertState& parent, const SubState& sub) {
  return SchubertState(sub.d, sub.r, parent.d(), parent.r(), sub.K, parent.points());
}

namespace detail {
inline void check_substate(const SchubertState& parent, const SubState& sub) {
  if (parent.r() <= 0 || parent.r() >= parent.n()) throw DomainError("parent state needs 0 < r < n");
  if (sub.r <= 0 || sub.r >= parent.r()) throw DomainError("sub-state needs 0 < r~ < r");
  if (sub.K.size() != parent.num_points()) throw DomainError("sub-state needs one subset per marked point");
  for (const auto& K : sub.K)
    if (K.n() != parent.r() || K.r() != sub.r) throw DomainError("sub-state subsets must be size-r~ subsets of [r]");
}
}  // namespace detail

/// -d~(n-r) + r~(D-d) - r~(n-r) + sum_p sum_{a in K^p} (n - r + a - i^p_a).
/// The inequality holds iff this is <= 0.
inline Int dagger_lhs(const SchubertState& parent, const SubState& sub) {
  detail::check_substate(parent, sub);
  const Int n = parent.n(), r = parent.r(), rt = sub.r;
  Int total = -sub.d * (n - r) + rt * (parent.D() - parent.d()) - rt * (n - r);
  for (std::size_t p = 0; p < sub.K.size(); ++p)
    for (int a : sub.K[p].elems()) total += n - r + a - parent.subsets()[p].at(a);
  return total;
}

/// Inclusive range of d~ that can matter for sub-states of rank r~: below
/// lo the sub-state space is empty; above hi the inequality cannot fail.
struct DegreeWindow {
  Int lo = 0;
  Int hi = -1;
};

inline DegreeWindow substate_window(const SchubertState& parent, int rt) {
  const Int n = parent.n(), r = parent.r(), d = parent.d(), s = static_cast<Int>(parent.num_points());
  if (rt <= 0 || rt >= r) throw DomainError("sub-state needs 0 < r~ < r");
  // quot_nonempty(d~, r~, d, r) is monotone in d~.
  Int lo = floor_div(d * rt, r) + 1;
  while (quot_nonempty(lo - 1, rt, d, static_cast<int>(r))) --lo;
  while (!quot_nonempty(lo, rt, d, static_cast<int>(r))) ++lo;
  // Each term n - r + a - i_a is at most n - r.
  const Int hi = ceil_div(rt * (parent.D() - d) - rt * (n - r) + s * rt * (n - r), n - r);
  return {lo, hi};
}

namespace detail {

inline bool substate_qualifies(const SchubertState& parent, const SubState& sub, Variant v) {
  const SchubertState k = induced_state(parent, sub);
  switch (v) {
    case Variant::nonnull:
      return is_nonnull(k);
    case Variant::gw_nonzero:
      return gen_gw(k) != 0;
    case Variant::gw_one:
      return gen_gw(k) == 1;
  }
  return false;
}

template <class F>
void for_each_window_substate(const SchubertState& parent, F&& f) {
  const int r = parent.r();
  const int s = static_cast<int>(parent.num_points());
  for (int rt = 1; rt < r; ++rt) {
    const DegreeWindow w = substate_window(parent, rt);
    for (Int dt = w.lo; dt <= w.hi; ++dt) {
      bool stop = false;
      for_each_tuple(r, rt, s, [&](std::span<const SchubertSubset> K) {
        if (stop) return;
        SubState sub{dt, rt, std::vector<SchubertSubset>(K.begin(), K.end())};
        if (!f(sub)) stop = true;
      });
      if (stop) return;
    }
  }
}

}  // namespace detail

/// All sub-states in the finite window that pass the variant's filter.
inline std::vector<SubState> enumerate_substates(const SchubertState& parent, Variant v) {
  if (parent.r() <= 0 || parent.r() >= parent.n()) throw DomainError("enumerate_substates needs 0 < r < n");
  std::vector<SubState> out;
  detail::for_each_window_substate(parent, [&](const SubState& sub) {
    if (detail::substate_qualifies(parent, sub, v)) out.push_back(sub);
    return true;
  });
  return out;
}

/// Whether every qualifying sub-state satisfies the inequality. Requires
/// nonnegative expected dimension; then this decides non-nullness.
inline bool mainte_holds(const SchubertState& parent, Variant v) {
  if (parent.r() <= 0 || parent.r() >= parent.n()) throw PreconditionError("mainte_holds needs 0 < r < n");
  if (state_dim(parent) < 0) throw PreconditionError("mainte_holds needs nonnegative expected dimension");
  bool holds = true;
  detail::for_each_window_substate(parent, [&](const SubState& sub) {
    if (dagger_lhs(parent, sub) <= 0) return true;
    if (detail::substate_qualifies(parent, sub, v)) holds = false;
    return holds;
  });
  return holds;
}

// ---------------------------------------------------------------------------
// Eigenvalue polytope

/// s-tuple of SU(n) conjugacy classes.
class ClassTuple {
 public:
  ClassTuple() = default;
  explicit ClassTuple(std::vector<ConjugacyClass> classes) : classes_(std::move(classes)) {
    if (classes_.empty()) throw DomainError("class tuple needs at least one class");
    for (const auto& c : classes_)
      if (c.rank() != classes_.front().rank()) throw DomainError("all classes in a tuple must have the same rank");
  }

  int n() const { return classes_.front().rank(); }
  int s() const { return static_cast<int>(classes_.size()); }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  const ConjugacyClass& operator[](std::size_t j) const { return classes_[j]; }

  bool operator==(const ClassTuple&) const = default;

 private:
  std::vector<ConjugacyClass> classes_;
};

enum class Certificate { gw_nonzero, gw_one };

/// One inequality sum_j lambda_{I^j}(Delta^j) <= d of Gamma(n,s), certified
/// by the Gromov-Witten number gw of (I^j) in degree d. gw = 0 marks an
/// entry certified recursively rather than by a GW computation.
struct HornInequality {
  int r = 0;
  Int d = 0;
  std::vector<SchubertSubset> subsets;
  Int gw = 0;
  Certificate certificate = Certificate::gw_nonzero;

  bool operator==(const HornInequality&) const = default;
};

/// sum_j lambda_{I^j}(Delta^j).
inline Rational horn_weight(std::span<const SchubertSubset> subsets, const ClassTuple& t) {
  if (static_cast<int>(subsets.size()) != t.s()) throw DomainError("inequality and tuple have different lengths");
  Rational total = 0;
  for (std::size_t j = 0; j < subsets.size(); ++j) total += lambda_weight(subsets[j], t[j]);
  return total;
}

/// Graded tuple: sum_j codim(I^j) = r(n-r) + dn (with d >= 0).
inline bool a_member(Int d, int r, int n, std::span<const SchubertSubset> subsets) {
  if (d < 0) throw DomainError("degree d must be nonnegative");
  for (const auto& I : subsets)
    if (I.n() != n || I.r() != r) throw DomainError("subset is not a size-r subset of [n]");
  return graded(r, n, d, subsets);
}

namespace detail {

inline Memo<std::tuple<int, int, bool>, std::shared_ptr<const std::vector<HornInequality>>>& facet_memo() {
  static Memo<std::tuple<int, int, bool>, std::shared_ptr<const std::vector<HornInequality>>> memo;
  return memo;
}

using BTable = std::vector<HornInequality>;

inline Memo<std::tuple<int, int, int>, std::shared_ptr<const BTable>>& btable_memo() {
  static Memo<std::tuple<int, int, int>, std::shared_ptr<const BTable>> memo;
  return memo;
}

}  // namespace detail

/// Every inequality of Gamma(n,s) indexed by a nonzero GW number, ordered
/// by r, then d, then subsets lexicographically. With only_multiplicity_one,
/// just those whose GW number is 1. GW numbers are evaluated on `jobs`
/// threads; the list does not depend on the job count.
inline std::shared_ptr<const std::vector<HornInequality>> facet_list(int n, int s, bool only_multiplicity_one = false,
                                                                    unsigned jobs = 1) {
  if (n < 1 || s < 1) throw DomainError("facet_list needs n >= 1 and s >= 1");
  return detail::facet_memo().get_or_compute({n, s, only_multiplicity_one}, [&] {
    auto out = std::make_shared<std::vector<HornInequality>>();
    for (int r = 1; r < n; ++r) {
      for (Int d = 0; d <= max_degree(r, n, s); ++d) {
        std::vector<std::vector<SchubertSubset>> tuples;
        for_each_tuple_with_codim(n, r, s, Int(r) * (n - r) + d * n,
                                  [&](std::span<const SchubertSubset> I) { tuples.emplace_back(I.begin(), I.end()); });
        const auto values = parallel_map(tuples, jobs, [&](const std::vector<SchubertSubset>& I) {
          return gw_number(r, n, d, std::span<const SchubertSubset>(I));
        });
        for (std::size_t k = 0; k < tuples.size(); ++k) {
          const Int gw = values[k];
          if (gw == 0 || (only_multiplicity_one && gw != 1)) continue;
          out->push_back({r, d, std::move(tuples[k]), gw, gw == 1 ? Certificate::gw_one : Certificate::gw_nonzero});
        }
      }
    }
    return std::shared_ptr<const std::vector<HornInequality>>(std::move(out));
  });
}

inline bool satisfies_all(const std::vector<HornInequality>& ineqs, const ClassTuple& t) {
  for (const auto& h : ineqs)
    if (horn_weight(h.subsets, t) > h.d) return false;
  return true;
}

/// Membership in Gamma(n,s) through Gromov-Witten numbers.
inline bool gamma_member_gw(const ClassTuple& t, unsigned jobs = 1) {
  if (t.n() == 1) return true;
  return satisfies_all(*facet_list(t.n(), t.s(), false, jobs), t);
}

/// (zeta_r^d beta(I^1), beta(I^2), ..., beta(I^s)).
inline ClassTuple twisted_beta_tuple(Int d, std::span<const SchubertSubset> subsets) {
  std::vector<ConjugacyClass> classes;
  classes.reserve(subsets.size());
  for (std::size_t j = 0; j < subsets.size(); ++j) {
    ConjugacyClass b = beta(subsets[j]);
    classes.push_back(j == 0 ? zeta_act(b, d) : std::move(b));
  }
  return ClassTuple(std::move(classes));
}

inline std::shared_ptr<const detail::BTable> btable(int r, int n, int s);

/// Membership in Gamma(n,s) through the recursive sets B(r,n,s), r < n.
inline bool gamma_member_recursive(const ClassTuple& t) {
  const int n = t.n();
  if (n == 1) return true;
  for (int rt = 1; rt < n; ++rt)
    if (!satisfies_all(*btable(rt, n, t.s()), t)) return false;
  return true;
}

/// B(r,n,s): graded tuples (d, r, n, I) whose twisted beta tuple lies in
/// Gamma(r,s), computed recursively. B(1,n,s) is every graded tuple.
inline std::shared_ptr<const detail::BTable> btable(int r, int n, int s) {
  if (r <= 0 || r >= n || s < 1) throw DomainError("btable needs 0 < r < n and s >= 1");
  if (auto hit = detail::btable_memo().find({r, n, s})) return *hit;
  auto out = std::make_shared<detail::BTable>();
  for (Int d = 0; d <= max_degree(r, n, s); ++d) {
    for_each_tuple_with_codim(n, r, s, Int(r) * (n - r) + d * n, [&](std::span<const SchubertSubset> I) {
      if (r == 1 || gamma_member_recursive(twisted_beta_tuple(d, I)))
        out->push_back({r, d, {I.begin(), I.end()}, 0, Certificate::gw_nonzero});
    });
  }
  return detail::btable_memo().insert({r, n, s}, std::shared_ptr<const detail::BTable>(std::move(out)));
}

/// Installs a precomputed B(r,n,s), e.g. loaded from a cache file.
inline void install_btable(int r, int n, int s, detail::BTable table) {
  detail::btable_memo().insert({r, n, s}, std::make_shared<const detail::BTable>(std::move(table)));
}

/// Whether (d, r, n, I) lies in B(r,n,s); equivalent to a nonzero GW number.
inline bool b_member(Int d, int r, int n, std::span<const SchubertSubset> subsets) {
  if (r <= 0 || r >= n) throw DomainError("b_member needs 0 < r < n");
  if (!a_member(d, r, n, subsets)) return false;
  return gamma_member_recursive(twisted_beta_tuple(d, subsets));
}

/// Membership of (zeta^{a_1} beta(I^1), ..., zeta^{a_s} beta(I^s)); requires
/// sum_j a_j = d mod r.
inline bool symmetric_equiv(Int d, int r, int n, std::span<const SchubertSubset> subsets, std::span<const Int> twists) {
  if (r <= 0 || r >= n) throw DomainError("symmetric_equiv needs 0 < r < n");
  if (twists.size() != subsets.size()) throw DomainError("one twist per marked point");
  if (!a_member(d, r, n, subsets)) throw DomainError("symmetric_equiv needs a graded tuple");
  const Int total = std::accumulate(twists.begin(), twists.end(), Int(0));
  if (pos_mod(total - d, r) != 0) throw DomainError("sum of twists minus d must be divisible by r");
  std::vector<ConjugacyClass> classes;
  for (std::size_t j = 0; j < subsets.size(); ++j) classes.push_back(zeta_act(beta(subsets[j]), twists[j]));
  return gamma_member_recursive(ClassTuple(std::move(classes)));
}

/// Both sides of the lowest-q-power criterion, computed independently:
/// first = some q^c sigma_J with c <= d occurs in the product of the
/// classes; second = the codim bound plus the multiplicity-one sub-state
/// inequalities for the shifted state.
inline std::pair<bool, bool> lowest_q_equiv(std::span<const SchubertSubset> subsets, Int d) {
  if (subsets.empty()) throw DomainError("need at least one subset");
  const int n = subsets.front().n(), r = subsets.front().r();
  if (r <= 0 || r >= n) throw DomainError("lowest_q_equiv needs 0 < r < n");
  if (d < 0) throw DomainError("degree d must be nonnegative");
  for (const auto& I : subsets)
    if (I.n() != n || I.r() != r) throw DomainError("subsets must share n and r");
  const int s = static_cast<int>(subsets.size());

  const auto lowest = quantum_multi_product(r, n, subsets).lowest_degree();
  const bool product_side = lowest && *lowest <= d;

  Int total = 0;
  for (const auto& I : subsets) total += codim(I);
  bool inequality_side = total <= d * n + Int(r) * (n - r);
  if (inequality_side) {
    const Int q = d / r, b = d % r;
    const Int ib = b == 0 ? 0 : subsets[0].at(static_cast<int>(b));
    const SchubertSubset first = t_shift_pow(subsets[0], ib);
    const Int shift_amount = q * n + ib;
    for (int rt = 1; rt < r && inequality_side; ++rt) {
      for (Int dt = 0; dt <= max_degree(rt, r, s) && inequality_side; ++dt) {
        for_each_tuple_with_codim(r, rt, s, Int(rt) * (r - rt) + dt * r, [&](std::span<const SchubertSubset> K) {
          if (!inequality_side) return;
          if (gw_number(rt, r, dt, K) != 1) return;
          Int lhs = 0;
          for (int a : K[0].elems()) lhs += n - r + a - first.at(a);
          for (int j = 1; j < s; ++j)
            for (int a : K[j].elems()) lhs += n - r + a - subsets[j].at(a);
          const Int chi = dt * (n - r) + rt * shift_amount + Int(rt) * (n - r);
          if (lhs > chi) inequality_side = false;
        });
      }
    }
  }
  return {product_side, inequality_side};
}

}  // namespace qhorn
