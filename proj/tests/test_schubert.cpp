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

#include <random>

#include <gtest/gtest.h>

#include "qhorn/schubert.hpp"

namespace qhorn {
namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }

ConjugacyClass cls(std::vector<Rational> d) { return ConjugacyClass(std::move(d)); }

TEST(Partition, StripsZerosAndValidates) {
  EXPECT_EQ(Partition({2, 1, 0, 0}), Partition({2, 1}));
  EXPECT_EQ(Partition({0}).length(), 0);
  EXPECT_THROW(Partition({1, 2}), DomainError);
  EXPECT_THROW(Partition({1, -1}), DomainError);
  EXPECT_TRUE(Partition({2, 2}).fits_in_box(2, 2));
  EXPECT_FALSE(Partition({3}).fits_in_box(2, 2));
  EXPECT_FALSE(Partition({1, 1, 1}).fits_in_box(2, 2));
  EXPECT_TRUE(Partition({2, 1}).contains(Partition({1, 1})));
  EXPECT_FALSE(Partition({2}).contains(Partition({1, 1})));
}

TEST(SchubertSubset, Validates) {
  EXPECT_THROW(SchubertSubset(4, {0, 2}), DomainError);
  EXPECT_THROW(SchubertSubset(4, {2, 5}), DomainError);
  EXPECT_THROW(SchubertSubset(4, {3, 2}), DomainError);
  EXPECT_THROW(SchubertSubset(4, {2, 2}), DomainError);
  EXPECT_NO_THROW(SchubertSubset(4, {}));
  EXPECT_NO_THROW(SchubertSubset(4, {1, 2, 3, 4}));
  EXPECT_EQ(SchubertSubset::top(2, 4), SchubertSubset(4, {3, 4}));
  EXPECT_EQ(SchubertSubset::bottom(2, 4), SchubertSubset(4, {1, 2}));
}

TEST(ConjugacyClass, Validates) {
  EXPECT_NO_THROW(cls({q(1, 4), q(-1, 4)}));
  EXPECT_NO_THROW(cls({q(1, 2), q(-1, 2)}));
  EXPECT_THROW(cls({q(-1, 4), q(1, 4)}), DomainError);           // unordered
  EXPECT_THROW(cls({q(1, 4), q(0)}), DomainError);               // nonzero sum
  EXPECT_THROW(cls({q(2, 3), q(0), q(-2, 3)}), DomainError);     // spread > 1
  EXPECT_NO_THROW(cls({q(2, 3), q(-1, 3), q(-1, 3)}));           // spread exactly 1
  EXPECT_THROW(cls({}), DomainError);
  EXPECT_EQ(ConjugacyClass::identity(3).delta(), std::vector<Rational>(3, 0));
}

TEST(Codim, Examples) {
  EXPECT_EQ(codim(SchubertSubset(4, {3, 4})), 0);
  EXPECT_EQ(codim(SchubertSubset(4, {1, 2})), 4);
  EXPECT_EQ(codim(SchubertSubset(4, {1, 3})), 3);
}

TEST(Conversions, Examples) {
  EXPECT_EQ(subset_to_partition(SchubertSubset(4, {3, 4})), Partition{});
  EXPECT_EQ(subset_to_partition(SchubertSubset(4, {1, 2})), Partition({2, 2}));
  EXPECT_EQ(subset_to_partition(SchubertSubset(4, {1, 3})), Partition({2, 1}));
  EXPECT_EQ(partition_to_subset(Partition({2, 1}), 2, 4), SchubertSubset(4, {1, 3}));
  EXPECT_THROW(partition_to_subset(Partition({3}), 2, 4), DomainError);
  EXPECT_THROW(partition_to_subset(Partition({1, 1, 1}), 2, 4), DomainError);
}

TEST(Conversions, RoundTripAndCodimExhaustive) {
  for (int n = 0; n <= 8; ++n)
    for (int r = 0; r <= n; ++r)
      for (const auto& I : all_subsets(n, r)) {
        const Partition lambda = subset_to_partition(I);
        EXPECT_TRUE(lambda.fits_in_box(r, n - r));
        EXPECT_EQ(partition_to_subset(lambda, r, n), I);
        EXPECT_EQ(codim(I), lambda.size());
        EXPECT_GE(codim(I), 0);
        EXPECT_LE(codim(I), r * (n - r));
      }
}

TEST(AllSubsets, CountsAndOrder) {
  EXPECT_EQ(all_subsets(4, 2).size(), 6u);
  EXPECT_EQ(all_subsets(8, 4).size(), 70u);
  EXPECT_EQ(all_subsets(3, 0).size(), 1u);
  const auto s = all_subsets(5, 3);
  EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
}

TEST(PoincareDual, Examples) {
  EXPECT_EQ(poincare_dual(SchubertSubset(4, {1, 3})), SchubertSubset(4, {2, 4}));
  EXPECT_EQ(poincare_dual(SchubertSubset(4, {1, 2})), SchubertSubset(4, {3, 4}));
  for (const auto& I : all_subsets(4, 2)) EXPECT_EQ(poincare_dual(poincare_dual(I)), I);
}

TEST(PoincareDual, InvolutionAndBoxDualExhaustive) {
  for (int n = 1; n <= 8; ++n)
    for (int r = 0; r <= n; ++r)
      for (const auto& I : all_subsets(n, r)) {
        const SchubertSubset J = poincare_dual(I);
        EXPECT_EQ(poincare_dual(J), I);
        EXPECT_EQ(codim(I) + codim(J), r * (n - r));
        const Partition lambda = subset_to_partition(I);
        EXPECT_EQ(subset_to_partition(J), box_dual(lambda, r, n));
        EXPECT_EQ(box_dual(box_dual(lambda, r, n), r, n), lambda);
      }
}

TEST(LambdaWeight, Examples) {
  EXPECT_EQ(lambda_weight(SchubertSubset(4, {1, 2}), ConjugacyClass::identity(4)), 0);
  EXPECT_EQ(lambda_weight(SchubertSubset(2, {1}), cls({q(1, 4), q(-1, 4)})), q(1, 4));
  const auto d = cls({q(1, 3), q(1, 6), q(-1, 6), q(-1, 3)});
  EXPECT_EQ(lambda_weight(SchubertSubset(4, {1, 2, 3, 4}), d), 0);
  EXPECT_EQ(lambda_weight(SchubertSubset(4, {2, 4}), d), q(-1, 6));
  EXPECT_THROW(lambda_weight(SchubertSubset(3, {1}), d), DomainError);
}

TEST(BigLambda, Examples) {
  EXPECT_EQ(big_lambda(SchubertSubset(4, {1, 2})), (std::vector<Rational>{1, 1}));
  EXPECT_EQ(big_lambda(SchubertSubset(4, {3, 4})), (std::vector<Rational>{0, 0}));
  EXPECT_EQ(big_lambda(SchubertSubset(4, {1, 3})), (std::vector<Rational>{1, q(1, 2)}));
  EXPECT_THROW(big_lambda(SchubertSubset(4, {})), DomainError);
  EXPECT_THROW(big_lambda(SchubertSubset(4, {1, 2, 3, 4})), DomainError);
}

TEST(Beta, Examples) {
  EXPECT_EQ(beta(SchubertSubset(4, {1, 2})), cls({0, 0}));
  EXPECT_EQ(beta(SchubertSubset(4, {1, 3})), cls({q(1, 4), q(-1, 4)}));
  // Two-step recomputation for {2,4}: Lambda = (1/2, 0), mean 1/4.
  const auto lam = big_lambda(SchubertSubset(4, {2, 4}));
  const Rational mean = (lam[0] + lam[1]) / 2;
  EXPECT_EQ(beta(SchubertSubset(4, {2, 4})), cls({lam[0] - mean, lam[1] - mean}));
  EXPECT_EQ(beta(SchubertSubset(4, {2, 4})), cls({q(1, 4), q(-1, 4)}));
  EXPECT_THROW(beta(SchubertSubset(3, {1, 2, 3})), DomainError);
}

TEST(Beta, AlwaysAClassExhaustive) {
  for (int n = 2; n <= 8; ++n)
    for (int r = 1; r < n; ++r)
      for (const auto& I : all_subsets(n, r)) {
        const auto lam = big_lambda(I);
        EXPECT_TRUE(std::is_sorted(lam.rbegin(), lam.rend()));
        for (const auto& l : lam) {
          EXPECT_GE(l, 0);
          EXPECT_LE(l, 1);
        }
        // The constructor enforces the class invariants.
        EXPECT_NO_THROW(ConjugacyClass(beta(I).delta()));
      }
}

TEST(Zeta, Examples) {
  EXPECT_EQ(zeta_act(cls({0, 0}), 1), cls({q(1, 2), q(-1, 2)}));
  EXPECT_EQ(zeta_act(cls({q(1, 4), q(-1, 4)}), 1), cls({q(1, 4), q(-1, 4)}));
  EXPECT_EQ(zeta_act(ConjugacyClass::identity(3), 1), cls({q(1, 3), q(1, 3), q(-2, 3)}));
  EXPECT_EQ(zeta_act(ConjugacyClass::identity(3), -1), cls({q(2, 3), q(-1, 3), q(-1, 3)}));
}

ConjugacyClass random_class(int r, std::mt19937& gen) {
  // Sorted uniform points in [0,1) with denominator 60, recentred.
  std::uniform_int_distribution<int> u(0, 59);
  std::vector<int> x(static_cast<std::size_t>(r));
  for (int& v : x) v = u(gen);
  std::sort(x.begin(), x.end(), std::greater<int>());
  Rational mean = 0;
  for (int v : x) mean += Rational(v, 60);
  mean /= r;
  std::vector<Rational> delta;
  for (int v : x) delta.push_back(Rational(v, 60) - mean);
  return ConjugacyClass(std::move(delta));
}

TEST(Zeta, GroupActionOnRandomClasses) {
  std::mt19937 gen(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int r = 1 + trial % 5;
    const ConjugacyClass d = random_class(r, gen);
    EXPECT_EQ(zeta_act(d, r), d);
    EXPECT_EQ(zeta_act(d, 0), d);
    const int a = static_cast<int>(gen() % 13) - 6, b = static_cast<int>(gen() % 13) - 6;
    EXPECT_EQ(zeta_act(zeta_act(d, a), b), zeta_act(d, a + b));
  }
}

TEST(TShift, Examples) {
  EXPECT_EQ(t_shift(SchubertSubset(4, {2, 3})), SchubertSubset(4, {1, 2}));
  EXPECT_EQ(t_shift(SchubertSubset(4, {1, 3})), SchubertSubset(4, {2, 4}));
  EXPECT_EQ(t_shift_pow(SchubertSubset(4, {1, 3}), 0), SchubertSubset(4, {1, 3}));
  EXPECT_EQ(t_shift_pow(SchubertSubset(4, {1, 3}), 2), SchubertSubset(4, {1, 3}));
}

TEST(TShift, PeriodAndBetaCompatibilityExhaustive) {
  for (int n = 1; n <= 8; ++n)
    for (int r = 1; r <= n; ++r)
      for (const auto& I : all_subsets(n, r)) {
        EXPECT_EQ(t_shift_pow(I, n), I);
        SchubertSubset J = I;
        for (int k = 0; k < n; ++k) J = t_shift(J);
        EXPECT_EQ(J, I);
        if (r == n) continue;
        const ConjugacyClass expected = I.at(1) == 1 ? zeta_act(beta(I), 1) : beta(I);
        EXPECT_EQ(beta(t_shift(I)), expected) << "n=" << n << " r=" << r;
      }
}

TEST(InverseClass, ReversesAndNegates) {
  const auto d = cls({q(1, 3), q(0), q(-1, 3)});
  EXPECT_EQ(inverse_class(d), d);
  const auto e = cls({q(1, 2), q(-1, 4), q(-1, 4)});
  EXPECT_EQ(inverse_class(e), cls({q(1, 4), q(1, 4), q(-1, 2)}));
  EXPECT_EQ(inverse_class(inverse_class(e)), e);
}

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("1/4"), q(1, 4));
  EXPECT_EQ(parse_rational(" -2/8 "), q(-1, 4));
  EXPECT_EQ(parse_rational("3"), q(3));
  EXPECT_EQ(format_rational(q(-2, 8)), "-1/4");
  EXPECT_EQ(format_rational(q(6, 3)), "2");
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("1/-2"), DomainError);
  EXPECT_THROW(parse_rational("x"), DomainError);
  EXPECT_THROW(parse_rational(""), DomainError);
}

}  // namespace
}  // namespace qhorn
