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

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qhorn/enumerate.hpp"
#include "qhorn/lr.hpp"
#include "qhorn/quantum.hpp"

namespace qhorn {
namespace {

QuantumElement element(int r, int n, std::initializer_list<std::tuple<Int, Partition, Int>> terms) {
  QuantumElement e(r, n);
  for (const auto& [d, p, c] : terms) e.add(d, p, c);
  return e;
}

std::vector<Partition> box(int r, int n) {
  std::vector<Partition> out;
  for (const auto& I : all_subsets(n, r)) out.push_back(subset_to_partition(I));
  return out;
}

TEST(QuantumElement, AddAndCancel) {
  QuantumElement e(2, 4);
  e.add(0, Partition({1}), 2);
  e.add(0, Partition({1}), -2);
  EXPECT_TRUE(e.empty());
  EXPECT_THROW(e.add(0, Partition({3}), 1), DomainError);
  EXPECT_THROW(e.add(-1, Partition({1}), 1), DomainError);
  e.add(1, Partition{}, 3);
  EXPECT_EQ(e.coefficient(1, Partition{}), 3);
  EXPECT_EQ(e.lowest_degree(), 1);
}

TEST(RimHook, Examples) {
  // Gr(2,4): s_(4) loses one 4-hook of height 1, giving -q.
  auto red = reduce_rim_hooks(Partition({4}), 2, 4);
  ASSERT_TRUE(red);
  EXPECT_EQ(red->degree, 1);
  EXPECT_EQ(red->core, Partition{});
  EXPECT_EQ(red->sign, -1);
  EXPECT_FALSE(reduce_rim_hooks(Partition({3}), 2, 4));       // no 4-hook, sticks out
  EXPECT_FALSE(reduce_rim_hooks(Partition({1, 1, 1}), 2, 4)); // too many rows
  auto inside = reduce_rim_hooks(Partition({2, 1}), 2, 4);
  ASSERT_TRUE(inside);
  EXPECT_EQ(inside->degree, 0);
  EXPECT_EQ(inside->sign, 1);
  // (3,3) in Gr(2,4): the 4-hook has height 2, leaving (2).
  auto tall = reduce_rim_hooks(Partition({3, 3}), 2, 4);
  ASSERT_TRUE(tall);
  EXPECT_EQ(tall->core, Partition({2}));
  EXPECT_EQ(tall->degree, 1);
  EXPECT_EQ(tall->sign, 1);
}

TEST(QuantumProduct, Examples) {
  for (const auto& p : box(2, 4))
    EXPECT_EQ(quantum_product(2, 4, Partition{}, p), QuantumElement::schubert(2, 4, p));
  EXPECT_EQ(quantum_product(2, 4, Partition({1}), Partition({2, 2})), element(2, 4, {{1, Partition({1}), 1}}));
  EXPECT_EQ(quantum_product(2, 4, Partition({2, 2}), Partition({2, 2})), element(2, 4, {{2, Partition{}, 1}}));
  EXPECT_THROW(quantum_product(2, 4, Partition({3}), Partition{}), DomainError);
  EXPECT_THROW(quantum_product(0, 4, Partition{}, Partition{}), DomainError);
  EXPECT_THROW(quantum_product(4, 4, Partition{}, Partition{}), DomainError);
}

TEST(QuantumMultiProduct, Examples) {
  const std::vector<Partition> single{Partition({2, 1})};
  EXPECT_EQ(quantum_multi_product(2, 4, std::span<const Partition>(single)),
            QuantumElement::schubert(2, 4, Partition({2, 1})));
  const std::vector<Partition> three(3, Partition({1}));
  EXPECT_EQ(quantum_multi_product(1, 2, std::span<const Partition>(three)), element(1, 2, {{1, Partition({1}), 1}}));
  const std::vector<Partition> four(4, Partition({1}));
  const auto e = quantum_multi_product(2, 4, std::span<const Partition>(four));
  EXPECT_EQ(e.coefficient(0, Partition({2, 2})), 2);
  // d=0 part equals the classical count from the LR engine.
  SchurExpansion acc{{Partition{}, 1}};
  for (int k = 0; k < 4; ++k) {
    SchurExpansion next;
    for (const auto& [nu, c] : acc)
      for (const auto& [rho, m] : schur_multiply(nu, Partition({1}))) next[rho] += c * m;
    acc = next;
  }
  EXPECT_EQ(acc[Partition({2, 2})], 2);
  EXPECT_EQ(e.coefficient(1, Partition{}), 2);  // sigma_1^4 = 2 sigma_22 + 2q in Gr(2,4)
  EXPECT_THROW(quantum_multi_product(2, 4, std::span<const Partition>()), DomainError);
}

oracle::QTerms as_terms(const QuantumElement& e) {
  oracle::QTerms out;
  for (const auto& [k, c] : e.terms()) out[k] = c;
  return out;
}

TEST(QuantumProduct, TablesMatchPieriGiambelliOracle) {
  for (int n = 2; n <= 6; ++n)
    for (int r = 1; r < n; ++r) {
      const auto basis = box(r, n);
      for (const auto& a : basis)
        for (const auto& b : basis)
          EXPECT_EQ(as_terms(quantum_product(r, n, a, b)), oracle::quantum_product(r, n, a, b))
              << "Gr(" << r << "," << n << ") " << a.size() << " * " << b.size();
    }
}

TEST(QuantumProduct, GradingNonnegativityCommutativity) {
  for (int n = 2; n <= 6; ++n)
    for (int r = 1; r < n; ++r) {
      const auto basis = box(r, n);
      for (const auto& a : basis)
        for (const auto& b : basis) {
          const auto ab = quantum_product(r, n, a, b);
          EXPECT_EQ(ab, quantum_product(r, n, b, a));
          for (const auto& [key, c] : ab.terms()) {
            EXPECT_GT(c, 0);
            EXPECT_EQ(key.second.size() + key.first * n, a.size() + b.size());
            EXPECT_TRUE(key.second.fits_in_box(r, n - r));
          }
        }
    }
}

TEST(QuantumProduct, AssociativeGr25) {
  const auto basis = box(2, 5);
  for (const auto& a : basis)
    for (const auto& b : basis)
      for (const auto& c : basis)
        EXPECT_EQ(multiply(quantum_product(2, 5, a, b), c),
                  multiply(QuantumElement::schubert(2, 5, a), quantum_product(2, 5, b, c)));
}

TEST(QuantumProduct, DualityPairing) {
  // sigma_lambda * sigma_{lambda dual} has the point class with coefficient 1.
  for (int n = 2; n <= 6; ++n)
    for (int r = 1; r < n; ++r)
      for (const auto& a : box(r, n))
        for (const auto& b : box(r, n))
          EXPECT_EQ(quantum_product(r, n, a, b).coefficient(0, Partition(std::vector<int>(r, n - r))),
                    b == box_dual(a, r, n) ? 1 : 0);
}

TEST(GwNumber, Examples) {
  const std::vector<SchubertSubset> triple(3, SchubertSubset(2, {1}));
  EXPECT_EQ(gw_number(1, 2, 1, triple), 1);
  const std::vector<SchubertSubset> t2{SchubertSubset(4, {1, 3}), SchubertSubset(4, {1, 3}), SchubertSubset(4, {2, 4})};
  // codims 3 + 3 + 1 = 7 = 4 + 4*d has no solution: zero by grading.
  EXPECT_EQ(gw_number(2, 4, 0, t2), 0);
  const std::vector<SchubertSubset> t3{SchubertSubset(4, {2, 4}), SchubertSubset(4, {2, 4}), SchubertSubset(4, {2, 3})};
  // sigma_1 * sigma_1 contains sigma_(1,1) once; pairs with {2,3} = (1,1).
  EXPECT_EQ(gw_number(2, 4, 0, t3),
            lr_coefficient(Partition({1}), Partition({1}), box_dual(Partition({1, 1}), 2, 4)));
  EXPECT_EQ(gw_number(2, 4, 0, t3), 1);
  EXPECT_THROW(gw_number(1, 2, -1, triple), DomainError);
  EXPECT_THROW(gw_number(1, 3, 0, triple), DomainError);
  EXPECT_THROW(gw_number(1, 2, 0, std::span<const SchubertSubset>()), DomainError);
}

TEST(GwNumber, FewPointsArePadded) {
  // Two points: <a, b>_0 = 1 iff b is the dual of a.
  for (const auto& I : all_subsets(5, 2))
    for (const auto& J : all_subsets(5, 2)) {
      const std::vector<SchubertSubset> pair{I, J};
      EXPECT_EQ(gw_number(2, 5, 0, pair), J == poincare_dual(I) ? 1 : 0);
    }
  // One point: only the point class in degree 0.
  for (const auto& I : all_subsets(4, 2)) {
    const std::vector<SchubertSubset> one{I};
    EXPECT_EQ(gw_number(2, 4, 0, one), codim(I) == 4 ? 1 : 0);
  }
  // <pt, pt>_1 on Gr(1,2): codims sum to 2, not 1 + 2.
  const std::vector<SchubertSubset> pp(2, SchubertSubset(2, {1}));
  EXPECT_EQ(gw_number(1, 2, 1, pp), 0);
}

TEST(GwNumber, UngradedTuplesVanish) {
  for_each_tuple(4, 2, 3, [&](std::span<const SchubertSubset> I) {
    for (Int d = 0; d <= 3; ++d)
      if (!graded(2, 4, d, I)) { EXPECT_EQ(gw_number(2, 4, d, I), 0); }
  });
}

TEST(GwNumber, SymmetricUnderPermutation) {
  std::mt19937 gen(3);
  for (int n = 3; n <= 6; ++n)
    for (int r = 1; r < n; ++r)
      for (Int d = 0; d <= max_degree(r, n, 4); ++d)
        for_each_tuple_with_codim(n, r, 4, Int(r) * (n - r) + d * n, [&](std::span<const SchubertSubset> I) {
          if (gen() % 8) return;  // sample
          std::vector<SchubertSubset> p(I.begin(), I.end());
          const Int base = gw_number(r, n, d, p);
          std::shuffle(p.begin(), p.end(), gen);
          EXPECT_EQ(gw_number(r, n, d, p), base);
        });
}

TEST(GwNumber, MaxDegree) {
  EXPECT_EQ(max_degree(2, 4, 3), 2);
  EXPECT_EQ(max_degree(1, 2, 3), 1);
  EXPECT_EQ(max_degree(3, 6, 3), 3);
  // Nothing nonzero above the cap.
  for (int n = 2; n <= 5; ++n)
    for (int r = 1; r < n; ++r)
      for_each_tuple(n, r, 3, [&](std::span<const SchubertSubset> I) {
        EXPECT_EQ(gw_number(r, n, max_degree(r, n, 3) + 1, I), 0);
      });
}

}  // namespace
}  // namespace qhorn
