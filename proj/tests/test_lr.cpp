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
#include <thread>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qhorn/lr.hpp"

namespace qhorn {
namespace {

std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  std::function<void(std::vector<int>&, int, int)> rec = [&](std::vector<int>& cur, int left, int cap) {
    out.emplace_back(cur);
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(cur, left - p, p);
      cur.pop_back();
    }
  };
  std::vector<int> cur;
  rec(cur, max_size, max_size);
  return out;
}

SchurExpansion as_expansion(const std::map<Partition, Int>& m) {
  SchurExpansion out;
  for (const auto& [k, v] : m)
    if (v != 0) out[k] = v;
  return out;
}

TEST(LrCoefficient, Examples) {
  for (const auto& lambda : partitions_up_to(5)) EXPECT_EQ(lr_coefficient(Partition{}, lambda, lambda), 1);
  EXPECT_EQ(lr_coefficient(Partition({1}), Partition({1, 1}), Partition({2, 1})), 1);
  EXPECT_EQ(lr_coefficient(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1})), 2);
}

TEST(LrCoefficient, ZeroCases) {
  EXPECT_EQ(lr_coefficient(Partition({2}), Partition({1}), Partition({2})), 0);        // sizes
  EXPECT_EQ(lr_coefficient(Partition({2}), Partition({1}), Partition({1, 1, 1})), 0);  // containment
  EXPECT_EQ(lr_coefficient(Partition({1, 1}), Partition({1, 1}), Partition({4})), 0);
}

TEST(SchurMultiply, Examples) {
  EXPECT_EQ(schur_multiply(Partition{}, Partition({3, 1})), (SchurExpansion{{Partition({3, 1}), 1}}));
  EXPECT_EQ(schur_multiply(Partition({1}), Partition({1})),
            (SchurExpansion{{Partition({2}), 1}, {Partition({1, 1}), 1}}));
  EXPECT_EQ(schur_multiply(Partition({2, 2}), Partition({2, 2}), 2), (SchurExpansion{{Partition({4, 4}), 1}}));
}

TEST(SchurMultiply, MatchesPolynomialOracle) {
  const auto parts = partitions_up_to(4);
  for (const auto& a : parts)
    for (const auto& b : parts) {
      if (a.size() + b.size() > 7) continue;
      EXPECT_EQ(schur_multiply(a, b), as_expansion(oracle::schur_product(a, b)));
    }
}

TEST(SchurMultiply, RowBoundMatchesOracleInFewVariables) {
  const auto parts = partitions_up_to(5);
  for (int rows = 1; rows <= 3; ++rows)
    for (const auto& a : parts)
      for (const auto& b : parts) {
        if (a.length() > rows || b.length() > rows || a.size() + b.size() > 8) continue;
        EXPECT_EQ(schur_multiply(a, b, rows), as_expansion(oracle::schur_product(a, b, rows)));
      }
}

TEST(SchurMultiply, AgreesWithLrCoefficientOnEveryKey) {
  const auto parts = partitions_up_to(5);
  for (const auto& a : parts)
    for (const auto& b : parts) {
      if (a.size() + b.size() > 8) continue;
      const auto e = schur_multiply(a, b);
      for (const auto& [nu, c] : e) {
        EXPECT_GT(c, 0);
        EXPECT_EQ(nu.size(), a.size() + b.size());
        EXPECT_EQ(lr_coefficient(a, b, nu), c);
      }
      // and lr_coefficient vanishes off the support
      for (const auto& nu : partitions_up_to(a.size() + b.size()))
        if (nu.size() == a.size() + b.size() && !e.count(nu)) { EXPECT_EQ(lr_coefficient(a, b, nu), 0); }
    }
}

TEST(SchurMultiply, CommutativeAndAssociative) {
  std::mt19937 gen(11);
  const auto parts = partitions_up_to(6);
  auto pick = [&] {
    Partition p;
    do p = parts[gen() % parts.size()];
    while (p.size() > 3);
    return p;
  };
  auto mul = [](const SchurExpansion& x, const Partition& c) {
    SchurExpansion out;
    for (const auto& [nu, k] : x)
      for (const auto& [rho, m] : schur_multiply(nu, c)) out[rho] += k * m;
    return out;
  };
  for (int t = 0; t < 60; ++t) {
    const Partition a = pick(), b = pick(), c = pick();
    EXPECT_EQ(schur_multiply(a, b), schur_multiply(b, a));
    SchurExpansion bc = schur_multiply(b, c);
    SchurExpansion a_bc;
    for (const auto& [nu, k] : bc)
      for (const auto& [rho, m] : schur_multiply(a, nu)) a_bc[rho] += k * m;
    EXPECT_EQ(mul(schur_multiply(a, b), c), a_bc);
  }
}

TEST(SchurMultiply, PieriMatchesHorizontalStrips) {
  for (const auto& lambda : partitions_up_to(5))
    for (int k = 0; k <= 4; ++k) {
      SchurExpansion expected;
      for (const auto& nu : oracle::horizontal_strips(lambda, k, 100, 100)) expected[nu] = 1;
      const Partition row = k == 0 ? Partition{} : Partition({k});
      EXPECT_EQ(schur_multiply(row, lambda), expected);
    }
}

TEST(LrCoefficient, ConcurrentCallsAgree) {
  const auto parts = partitions_up_to(4);
  std::vector<Int> serial;
  for (const auto& a : parts)
    for (const auto& b : parts)
      for (const auto& c : parts) serial.push_back(lr_coefficient(a, b, c));
  detail::lr_memo().clear();
  std::vector<std::vector<Int>> results(4);
  std::vector<std::thread> pool;
  for (int w = 0; w < 4; ++w)
    pool.emplace_back([&, w] {
      for (const auto& a : parts)
        for (const auto& b : parts)
          for (const auto& c : parts) results[w].push_back(lr_coefficient(a, b, c));
    });
  for (auto& t : pool) t.join();
  for (const auto& r : results) EXPECT_EQ(r, serial);
}

}  // namespace
}  // namespace qhorn
