/*
 * Copyright 2026 The realcyclo Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "realcyclo/chebyshev.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "realcyclo/basis.h"

namespace realcyclo {
namespace {

PowerPoly power(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return PowerPoly(std::move(v));
}

VPoly vbasis(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return VPoly(std::move(v));
}

TEST(VPolyTest, LowDegreeExpansions) {
  EXPECT_EQ(v_poly(0), power({1}));
  EXPECT_EQ(v_poly(1), power({0, 1}));
  EXPECT_EQ(v_poly(2), power({-2, 0, 1}));
  EXPECT_EQ(v_poly(3), power({0, -3, 0, 1}));
}

TEST(VPolyTest, ValuesOnTheCircle) {
  // V_j(2 cos t) = 2 cos(j t) for j >= 1.
  for (double t : {0.1, 0.7, 1.3, 2.9}) {
    for (std::size_t j = 1; j < 40; ++j) {
      EXPECT_NEAR(v_value(j, 2 * std::cos(t)), 2 * std::cos(j * t), 1e-9);
    }
  }
  EXPECT_DOUBLE_EQ(v_value(0, 0.3), 1.0);
}

TEST(VPolyTest, ProductRule) {
  EXPECT_EQ(v_product_indices(1, 1), vbasis({2, 0, 1}));
  // V_n V_m expands to the same power polynomial as the product of the
  // individual expansions.
  for (std::size_t n = 1; n < 9; ++n) {
    for (std::size_t m = 1; m < 9; ++m) {
      EXPECT_EQ(to_power_basis(v_product_indices(n, m)), multiply(v_poly(n), v_poly(m)))
          << n << " " << m;
    }
  }
}

TEST(VPolyTest, Composition) {
  std::vector<double> samples;
  for (int i = 0; i <= 20; ++i) samples.push_back(-2.0 + 0.2 * i);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t m = 1; m <= 8; ++m) EXPECT_TRUE(v_compose_check(n, m, samples));
  }
  EXPECT_DOUBLE_EQ(v_value(7, 2.0), 2.0);
  EXPECT_DOUBLE_EQ(v_value(7, v_value(5, 2.0)), 2.0);
}

TEST(EvalTest, ClenshawMatchesDirectSum) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coef(-3, 3), pt(-2, 2);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> a(1 + trial % 17);
    for (auto& x : a) x = coef(rng);
    const double t = pt(rng);
    double direct = 0;
    for (std::size_t j = 0; j < a.size(); ++j) direct += a[j] * v_value(j, t);
    EXPECT_NEAR(eval_at(a, t), direct, 1e-10);
  }
  const double psi5 = 2 * std::cos(2 * std::numbers::pi / 5);
  EXPECT_NEAR(eval_at(vbasis({1, 1, 1}), psi5), 0.0, 1e-12);
}

TEST(BasisTest, Conversions) {
  EXPECT_EQ(to_v_basis(power({0, 1, 0, 1})), vbasis({0, 4, 0, 1}));
  EXPECT_EQ(to_power_basis(vbasis({1, 1, 1})), power({-1, 1, 1}));
  EXPECT_EQ(to_v_basis(power({0, 0, 1})), vbasis({2, 0, 1}));
}

TEST(BasisTest, RandomRoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<BigInt> c(1 + trial * 3);
    for (auto& x : c) x = static_cast<long>(rng() % 2001) - 1000;
    const PowerPoly p(c);
    EXPECT_EQ(to_power_basis(to_v_basis(p)), p);
    // Oracle: sum of a_j times the explicit expansion of V_j.
    const VPoly v = to_v_basis(p);
    PowerPoly sum;
    sum.resize(c.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
      const PowerPoly vj = v_poly(j);
      for (std::size_t i = 0; i < vj.size(); ++i) sum[i] += v[j] * vj[i];
    }
    EXPECT_EQ(sum, p);
  }
}

TEST(BasisTest, ModularConversionsAgreeWithIntegers) {
  const Modulus mod(97);
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<BigInt> c(2 + trial);
    std::vector<u64> cm(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = static_cast<long>(rng() % 97);
      cm[i] = c[i].get_ui();
    }
    const VPoly v = to_v_basis(PowerPoly(c));
    const auto vm = to_v_basis_mod(cm, mod);
    for (std::size_t i = 0; i < vm.size(); ++i) {
      BigInt r = i < v.size() ? BigInt(v[i] % 97) : BigInt(0);
      if (r < 0) r += 97;
      EXPECT_EQ(vm[i], r.get_ui());
    }
    EXPECT_EQ(to_power_basis_mod(vm, mod), cm);
  }
}

}  // namespace
}  // namespace realcyclo
