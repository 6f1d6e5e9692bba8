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

#include "realcyclo/dct.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "realcyclo/error.h"

namespace realcyclo {
namespace {

TEST(DctTest, SizeTwoByHand) {
  const RealDctPlan plan = make_real_plan(2);
  const std::vector<double> e1{0.0, 1.0};
  const auto y = plan.dct3(e1);
  EXPECT_NEAR(y[0], std::sqrt(2.0) / 2, 1e-15);
  EXPECT_NEAR(y[1], -std::sqrt(2.0) / 2, 1e-15);
  const std::vector<double> ones{1.0, 1.0};
  const auto z = plan.dct2(ones);
  EXPECT_NEAR(z[0], 2.0, 1e-15);
  EXPECT_NEAR(z[1], 0.0, 1e-15);
}

TEST(DctTest, SizeTwoOverF17) {
  const PrimeField f(17);
  const Modulus& mod = f.modulus();
  const ModDctPlan plan = make_mod_plan(2, f);
  const std::vector<u64> e1{0, 1};
  const auto y = plan.dct3(e1);
  // Some w of order 8 must give y_j = (w^(2j+1) + w^-(2j+1)) / 2.
  bool matched = false;
  for (u64 w = 2; w < 17; ++w) {
    if (!has_exact_order(w, 8, mod)) continue;
    auto c = [&](u64 t) { return mod.half(mod.add(mod.pow(w, t), mod.inv(mod.pow(w, t)))); };
    matched = matched || (y[0] == c(1) && y[1] == c(3));
  }
  EXPECT_TRUE(matched);
}

TEST(DctTest, FastMatchesDirectSums) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1, 1);
  for (std::size_t n = 2; n <= 512; n *= 2) {
    const RealDctPlan plan = make_real_plan(n);
    std::vector<double> a(n);
    for (auto& x : a) x = u(rng);
    const auto f3 = plan.dct3(a), d3 = plan.dct3_direct(a);
    const auto f2 = plan.dct2(a), d2 = plan.dct2_direct(a);
    // Reference from the defining cosine sums.
    for (std::size_t j = 0; j < n; ++j) {
      double s3 = a[0] / 2, s2 = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) s3 += a[i] * std::cos(std::numbers::pi * (2 * j + 1) * i / (2.0 * n));
        s2 += a[i] * std::cos(std::numbers::pi * (2 * i + 1) * j / (2.0 * n));
      }
      EXPECT_NEAR(f3[j], s3, 1e-11);
      EXPECT_NEAR(d3[j], s3, 1e-11);
      EXPECT_NEAR(f2[j], s2, 1e-11);
      EXPECT_NEAR(d2[j], s2, 1e-11);
    }
  }
}

TEST(DctTest, RoundTripScalesByHalfN) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1, 1);
  for (std::size_t n = 2; n <= 4096; n *= 2) {
    const RealDctPlan plan = make_real_plan(n);
    std::vector<double> a(n);
    for (auto& x : a) x = u(rng);
    const auto back = plan.dct2(plan.dct3(a));
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(back[i], n / 2.0 * a[i], 1e-8 * n);
  }
}

TEST(DctTest, ModularRoundTripIsExact) {
  std::mt19937_64 rng(4);
  for (std::size_t n = 2; n <= 2048; n *= 2) {
    const u64 q = prime_congruent_one_above(4 * n, 1u << 20);
    const PrimeField f(q);
    const ModDctPlan plan = make_mod_plan(n, f);
    std::vector<u64> a(n);
    for (auto& x : a) x = rng() % q;
    const auto back = plan.dct2(plan.dct3(a));
    const u64 half_n = n / 2;
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(back[i], f.modulus().mul(a[i], half_n));
    EXPECT_EQ(plan.dct3(a), plan.dct3_direct(a));
  }
}

TEST(DctTest, UnsuitableModulusIsRejected) {
  try {
    make_mod_plan(16, PrimeField(97));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kModulusUnsuitable);
  }
  EXPECT_THROW(make_real_plan(12), Error);
}

TEST(DctTest, PublishedOperationCounts) {
  EXPECT_EQ(operation_count(4).multiplications, 0);
  EXPECT_EQ(operation_count(4).additions, 0);
  EXPECT_EQ(operation_count(8).multiplications, 2);
  EXPECT_EQ(operation_count(8).additions, 2);
  EXPECT_EQ(operation_count(16).multiplications, 8);
  EXPECT_EQ(operation_count(16).additions, 9);
}

TEST(DctTest, MeasuredWorkGrowsLikeNLogN) {
  double lo = 1e300, hi = 0;
  for (std::size_t n = 16; n <= 8192; n *= 2) {
    const OpCount ops = measured_dct3_ops(n);
    const double scale = n * std::log2(static_cast<double>(n));
    const double r = (ops.multiplications + ops.additions) / scale;
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  EXPECT_LT(hi / lo, 2.0);
}

TEST(DctTest, PowerOfTwoHelpers) {
  EXPECT_TRUE(is_power_of_two(1024));
  EXPECT_FALSE(is_power_of_two(1000));
  EXPECT_EQ(next_power_of_two(1000), 1024u);
  EXPECT_EQ(next_power_of_two(1024), 1024u);
}

}  // namespace
}  // namespace realcyclo
