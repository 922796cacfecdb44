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

// Built-in consistency checks behind `qhorn selftest`. These compare the
// library's independent routes against each other; the test suite holds the
// external oracles.

#include <functional>
#include <string>
#include <vector>

#include "qhorn/horn.hpp"
#include "qhorn/lr.hpp"
#include "qhorn/quantum.hpp"
#include "qhorn/state.hpp"
#include "qhorn/witness.hpp"

namespace qhorn::tools {

struct SelfCheck {
  std::string name;
  bool passed = true;
  long cases = 0;
};

enum class SelfTestLevel { quick, full };

namespace detail {

inline SelfCheck check_ring(int r, int n) {
  SelfCheck c{"ring_gr" + std::to_string(r) + std::to_string(n)};
  std::vector<Partition> basis;
  for (const auto& I : all_subsets(n, r)) basis.push_back(subset_to_partition(I));
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      const QuantumElement ab = quantum_product(r, n, a, b);
      if (!(ab == quantum_product(r, n, b, a))) c.passed = false;
      for (const auto& [key, coeff] : ab.terms())
        if (coeff < 0 || key.second.size() + key.first * n != a.size() + b.size()) c.passed = false;
      for (const auto& x : basis) {
        ++c.cases;
        const QuantumElement left = multiply(ab, x);
        const QuantumElement right = multiply(QuantumElement::schubert(r, n, a), quantum_product(r, n, b, x));
        if (!(left == right)) c.passed = false;
      }
    }
  }
  return c;
}

inline SelfCheck check_quantum_horn(int max_n, int s) {
  SelfCheck c{"gw_vs_recursion_s" + std::to_string(s)};
  for (int n = 2; n <= max_n; ++n)
    for (int r = 1; r < n; ++r)
      for (Int d = 0; d <= max_degree(r, n, s); ++d)
        for_each_tuple_with_codim(n, r, s, Int(r) * (n - r) + d * n, [&](std::span<const SchubertSubset> I) {
          ++c.cases;
          if ((gw_number(r, n, d, I) != 0) != b_member(d, r, n, I)) c.passed = false;
        });
  return c;
}

inline SelfCheck check_classical_limit(int max_n) {
  SelfCheck c{"classical_limit"};
  for (int n = 2; n <= max_n; ++n)
    for (int r = 1; r < n; ++r)
      for_each_tuple(n, r, 3, [&](std::span<const SchubertSubset> I) {
        ++c.cases;
        const Int expected = lr_coefficient(subset_to_partition(I[0]), subset_to_partition(I[1]),
                                            box_dual(subset_to_partition(I[2]), r, n));
        if (gw_number(r, n, 0, I) != expected) c.passed = false;
      });
  return c;
}

inline SelfCheck check_mainte(int max_n, Int max_d) {
  SelfCheck c{"substate_criterion"};
  for (int n = 3; n <= max_n; ++n)
    for (int r = 1; r < n; ++r)
      for (Int d = 0; d <= max_d; ++d)
        for (Int D = -1; D <= 3; ++D)
          for_each_tuple(n, r, 3, [&](std::span<const SchubertSubset> I) {
            SchubertState st(d, r, D, n, {I.begin(), I.end()});
            if (state_dim(st) < 0) return;
            ++c.cases;
            const bool a = is_nonnull(st);
            for (Variant v : {Variant::nonnull, Variant::gw_nonzero, Variant::gw_one})
              if (mainte_holds(st, v) != a) c.passed = false;
          });
  return c;
}

inline SelfCheck check_normalize_routes(int max_n) {
  SelfCheck c{"shift_twist_routes"};
  for (int n = 3; n <= max_n; ++n)
    for (int r = 1; r < n; ++r)
      for (Int D = -2; D <= 5; ++D)
        for_each_tuple(n, r, 3, [&](std::span<const SchubertSubset> I) {
          ++c.cases;
          SchubertState st(1, r, D, n, {I.begin(), I.end()});
          const Int base = gen_gw(st);
          if (gen_gw(twist(st, 2)) != base || gen_gw(shift(st, 1)) != base) c.passed = false;
          const SchubertState alt = normalize(st, 2);
          if ((alt.d() < 0 ? 0 : gw_number(r, n, alt.d(), alt.subsets())) != base) c.passed = false;
        });
  return c;
}

inline std::vector<ClassTuple> grid_tuples(int rank, int den, int s) {
  // Points of Delta(rank) with entries in (1/den)Z.
  std::vector<ConjugacyClass> points;
  std::vector<int> cur(static_cast<std::size_t>(rank));
  std::function<void(int, int)> rec = [&](int b, int sum) {
    if (b == rank) {
      if (sum != 0 || cur.back() < cur.front() - den) return;
      std::vector<Rational> delta;
      for (int x : cur) delta.emplace_back(x, den);
      points.emplace_back(std::move(delta));
      return;
    }
    const int hi = b == 0 ? den : cur[b - 1];
    const int lo = b == 0 ? 0 : cur[0] - den;
    for (int x = hi; x >= lo; --x) {
      cur[b] = x;
      rec(b + 1, sum + x);
    }
  };
  rec(0, 0);
  std::vector<ClassTuple> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(s), 0);
  while (true) {
    std::vector<ConjugacyClass> classes;
    for (auto k : idx) classes.push_back(points[k]);
    out.emplace_back(std::move(classes));
    int j = s - 1;
    while (j >= 0 && ++idx[j] == points.size()) idx[j--] = 0;
    if (j < 0) break;
  }
  return out;
}

inline SelfCheck check_gamma_methods(int rank, int den) {
  SelfCheck c{"gamma_methods_r" + std::to_string(rank) + "_den" + std::to_string(den)};
  for (const auto& t : grid_tuples(rank, den, 3)) {
    ++c.cases;
    if (gamma_member_gw(t) != gamma_member_recursive(t)) c.passed = false;
  }
  return c;
}

inline SelfCheck check_witness(unsigned jobs) {
  SelfCheck c{"witness"};
  const ConjugacyClass q({Rational(1, 4), Rational(-1, 4)});
  const ClassTuple member({q, q, q});
  WitnessOptions opt;
  opt.jobs = jobs;
  const WitnessResult w = realize(member, opt);
  ++c.cases;
  if (!w.found || !local_monodromy_check(w, member)) c.passed = false;
  const ClassTuple central({ConjugacyClass({Rational(1, 2), Rational(-1, 2)}), ConjugacyClass::identity(2),
                            ConjugacyClass::identity(2)});
  opt.restarts = 4;
  ++c.cases;
  if (realize(central, opt).found) c.passed = false;
  const ConjugacyClass x({Rational(1, 3), Rational(0), Rational(-1, 3)});
  ++c.cases;
  const WitnessResult pair = inverse_pair_witness(x);
  if (!local_monodromy_check(pair, ClassTuple({x, inverse_class(x)}), 1e-10)) c.passed = false;
  return c;
}

inline SelfCheck check_lowest_q(int n, Int max_d) {
  SelfCheck c{"lowest_q_power_gr2" + std::to_string(n)};
  for (Int d = 0; d <= max_d; ++d)
    for_each_tuple(n, 2, 3, [&](std::span<const SchubertSubset> I) {
      ++c.cases;
      const auto [product_side, inequality_side] = lowest_q_equiv(I, d);
      if (product_side != inequality_side) c.passed = false;
    });
  return c;
}

}  // namespace detail

inline std::vector<SelfCheck> run_selftest(SelfTestLevel level, unsigned jobs = 1) {
  using namespace detail;
  const bool full = level == SelfTestLevel::full;
  std::vector<SelfCheck> out;
  out.push_back(check_ring(2, 4));
  if (full) out.push_back(check_ring(2, 5));
  out.push_back(check_quantum_horn(full ? 6 : 4, 3));
  if (full) out.push_back(check_quantum_horn(4, 4));
  out.push_back(check_classical_limit(full ? 6 : 4));
  out.push_back(check_mainte(full ? 5 : 4, full ? 3 : 1));
  out.push_back(check_normalize_routes(full ? 5 : 4));
  out.push_back(check_gamma_methods(2, full ? 12 : 6));
  if (full) out.push_back(check_gamma_methods(3, 6));
  out.push_back(check_lowest_q(4, full ? 3 : 1));
  if (full) out.push_back(check_lowest_q(5, 3));
  out.push_back(check_witness(jobs));
  return out;
}

}  // namespace qhorn::tools
