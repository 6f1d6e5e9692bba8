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

#include "realcyclo/minpoly.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "realcyclo/basis.h"
#include "realcyclo/error.h"

namespace realcyclo {
namespace {

// prod over 1 <= sigma < n/2, gcd(sigma, n) = 1, of (x - 2 cos(2 pi sigma / n)),
// rounded to integers.
std::vector<long> product_oracle(u64 n) {
  std::vector<long double> c{1.0L};
  for (u64 s = 1; 2 * s < n; ++s) {
    if (std::gcd(s, n) != 1) continue;
    const long double root = 2.0L * std::cos(2.0L * std::numbers::pi_v<long double> * s / n);
    std::vector<long double> next(c.size() + 1, 0.0L);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= root * c[i];
    }
    c = std::move(next);
  }
  std::vector<long> out;
  for (long double x : c) out.push_back(std::lround(static_cast<double>(x)));
  return out;
}

std::vector<long> as_longs(const PowerPoly& p) {
  std::vector<long> out;
  for (const auto& x : p.coeffs()) out.push_back(x.get_si());
  return out;
}

TEST(ConductorTest, Validation) {
  EXPECT_NO_THROW(Conductor::create(5, 1, 0));
  for (auto [p, s, r] : {std::tuple{5ULL, 1u, 1u}, {9ULL, 1u, 0u}, {2ULL, 1u, 2u},
                         {5ULL, 0u, 0u}}) {
    try {
      Conductor::create(p, s, r);
      FAIL() << p << " " << s << " " << r;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidConductor);
    }
  }
}

TEST(ConductorTest, DegreeIsHalfTotient) {
  for (const auto& c : enumerate_conductors(2000)) {
    EXPECT_EQ(2 * c.m(), euler_phi(c.n()));
    EXPECT_GE(c.m(), 2u);
  }
}

TEST(MinPolyTest, SmallCasesInBothBases) {
  const auto psi5 = build_min_poly(Conductor::create(5, 1, 0));
  EXPECT_EQ(as_longs(psi5.power), (std::vector<long>{-1, 1, 1}));
  EXPECT_EQ(psi5.dense_v(), VPoly(std::vector<BigInt>{1, 1, 1}));

  const auto psi12 = build_min_poly(Conductor::create(3, 1, 2));
  EXPECT_EQ(as_longs(psi12.power), (std::vector<long>{-3, 0, 1}));
  EXPECT_EQ(psi12.dense_v(), VPoly(std::vector<BigInt>{-1, 0, 1}));

  const auto psi20 = build_min_poly(Conductor::create(5, 1, 2));
  EXPECT_EQ(psi20.dense_v(), VPoly(std::vector<BigInt>{1, 0, -1, 0, 1}));
  EXPECT_EQ(as_longs(psi20.power), product_oracle(20));
}

TEST(MinPolyTest, AgreesWithRootProductOracle) {
  for (const auto& c : enumerate_conductors(120)) {
    const auto mp = build_min_poly(c);
    EXPECT_EQ(as_longs(mp.power), product_oracle(c.n())) << c.to_string();
  }
}

TEST(MinPolyTest, SparseFormForTheDegree256Case) {
  const Conductor c = Conductor::create(5, 1, 8);
  EXPECT_EQ(c.m(), 256u);
  const auto sparse = sparse_v_form(c);
  ASSERT_EQ(sparse.size(), 3u);
  const std::size_t idx[] = {0, 128, 256};
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(sparse[i].index, idx[i]);
    EXPECT_EQ(sparse[i].sign, (2 - i) % 2 == 0 ? 1 : -1);
  }
}

TEST(MinPolyTest, SparseAndDenseAgree) {
  for (const auto& c : enumerate_conductors(400)) {
    const auto mp = build_min_poly(c);
    const VPoly dense = mp.dense_v();
    ASSERT_EQ(dense.size(), c.m() + 1);
    std::vector<BigInt> expect(c.m() + 1, BigInt(0));
    for (const auto& t : mp.sparse_v) expect[t.index] += t.sign;
    EXPECT_EQ(dense, VPoly(expect));
    EXPECT_EQ(to_power_basis(dense), mp.power);
    EXPECT_EQ(mp.power[c.m()], 1);
  }
}

TEST(MinPolyTest, NumericVerificationUpTo400) {
  for (const auto& c : enumerate_conductors(400)) {
    const auto check = check_min_poly_numeric(build_min_poly(c));
    EXPECT_TRUE(check.ok()) << c.to_string();
    EXPECT_LT(check.max_residual, 1e-6);
  }
}

TEST(MinPolyTest, VerificationRejectsAPerturbedPolynomial) {
  auto mp = build_min_poly(Conductor::create(7, 1, 2));
  mp.power[0] += 1;
  EXPECT_FALSE(verify_min_poly_numeric(mp));
}

TEST(MinPolyTest, WordSizePowerFormMatches) {
  const Modulus mod(2887);
  for (const auto& c : enumerate_conductors(600)) {
    EXPECT_EQ(min_poly_power_mod(c, mod), build_min_poly(c).power_mod(mod)) << c.to_string();
  }
}

}  // namespace
}  // namespace realcyclo
