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

#include "realcyclo/ring.h"

#include <gtest/gtest.h>

#include <random>

#include "realcyclo/basis.h"
#include "realcyclo/error.h"

namespace realcyclo {
namespace {

RingPtr ring_of(u64 p, unsigned s, unsigned r, const std::string& domain) {
  return QuotientRing::get(Conductor::create(p, s, r), Domain::parse(domain));
}

std::vector<i64> coeffs_of(const RingElement& e) { return e.coeffs(); }

// Oracle built only from power-basis arithmetic: multiply, divide by the
// monic Psi_n, convert the remainder to the V-basis, and reduce mod q.
std::vector<i64> oracle_product(const RingElement& a, const RingElement& b) {
  const QuotientRing& ring = a.ring();
  const PowerPoly& psi = ring.min_poly().power;
  std::vector<BigInt> prod = multiply(to_power_basis(a.to_vpoly()),
                                      to_power_basis(b.to_vpoly())).mutable_coeffs();
  const std::size_t m = ring.degree();
  for (std::size_t i = prod.size(); i-- > m;) {
    const BigInt lead = prod[i];
    for (std::size_t j = 0; j <= m; ++j) prod[i - m + j] -= lead * psi[j];
  }
  prod.resize(m, BigInt(0));
  const VPoly v = to_v_basis(PowerPoly(prod));
  std::vector<i64> out(m, 0);
  for (std::size_t j = 0; j < m && j < v.size(); ++j) {
    BigInt x = v[j];
    if (ring.domain().modular()) {
      const BigInt q(std::to_string(ring.domain().modulus()));
      x %= q;
      if (x < 0) x += q;
    }
    out[j] = x.get_si();
  }
  return out;
}

TEST(RingTest, SmallProductsByHand) {
  auto r5 = ring_of(5, 1, 0, "int");
  const RingElement x5 = make_element(r5, {0, 1});
  EXPECT_EQ(coeffs_of(mul(x5, x5)), (std::vector<i64>{1, -1}));
  EXPECT_EQ(coeffs_of(mul_fast(x5, x5)), (std::vector<i64>{1, -1}));
  const PowerPoly pw = mul(x5, x5).to_power();
  EXPECT_EQ(pw, PowerPoly(std::vector<BigInt>{1, -1}));

  auto r12 = ring_of(3, 1, 2, "int");
  const RingElement x12 = make_element(r12, {0, 1});
  EXPECT_EQ(coeffs_of(mul_fast(x12, x12)), (std::vector<i64>{3, 0}));

  auto r12q = ring_of(3, 1, 2, "fq:97");
  const RingElement xq = make_element(r12q, {0, 1});
  EXPECT_EQ(coeffs_of(mul(xq, xq)), (std::vector<i64>{3, 0}));
}

TEST(RingTest, ReductionByHand) {
  auto r5 = ring_of(5, 1, 0, "int");
  EXPECT_EQ(coeffs_of(reduce({r5, {0, 0, 1}})), (std::vector<i64>{-1, -1}));
  auto r12 = ring_of(3, 1, 2, "int");
  EXPECT_EQ(coeffs_of(reduce({r12, {0, 0, 1}})), (std::vector<i64>{1, 0}));
  auto r9 = ring_of(3, 2, 0, "int");
  EXPECT_EQ(coeffs_of(reduce({r9, {0, 0, 0, 0, 1}})), (std::vector<i64>{0, -1, -1}));
}

TEST(RingTest, FastProductMatchesPowerBasisOracle) {
  std::mt19937_64 rng(21);
  for (const auto& c : enumerate_conductors(260)) {
    for (const std::string domain : {"int", "crt", "fq:97", "fq:3329"}) {
      const RingPtr ring = QuotientRing::get(c, Domain::parse(domain));
      for (int t = 0; t < 3; ++t) {
        const RingElement a = random_element(ring, rng), b = random_element(ring, rng);
        const auto expect = oracle_product(a, b);
        EXPECT_EQ(coeffs_of(mul(a, b)), expect) << c.to_string() << " " << domain;
        EXPECT_EQ(coeffs_of(mul_schoolbook(a, b)), expect) << c.to_string() << " " << domain;
        if (ring->has_fast_plan() || !ring->domain().modular()) {
          EXPECT_EQ(coeffs_of(mul_fast(a, b)), expect) << c.to_string() << " " << domain;
        }
        if (!ring->domain().modular()) {
          EXPECT_EQ(coeffs_of(mul_fast_real(a, b)), expect) << c.to_string();
        }
      }
    }
  }
}

TEST(RingTest, SuitablePrimeFieldUsesTheFastPath) {
  const Conductor c = Conductor::create(7, 1, 3);  // m = 6, N = 16
  const u64 q = prime_congruent_one_above(4 * 16, 1000);
  const RingPtr ring = QuotientRing::get(c, Domain::prime_field(q));
  ASSERT_TRUE(ring->has_fast_plan());
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const RingElement a = random_element(ring, rng), b = random_element(ring, rng);
    EXPECT_EQ(coeffs_of(mul_fast(a, b)), oracle_product(a, b));
  }
  const RingPtr bad = QuotientRing::get(c, Domain::prime_field(97));
  EXPECT_FALSE(bad->has_fast_plan());
  const RingElement a = random_element(bad, rng);
  try {
    mul_fast(a, a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kModulusUnsuitable);
  }
}

TEST(RingTest, ReductionCostAtMostTwiceTheDegree) {
  std::mt19937_64 rng(8);
  for (const auto& c : enumerate_conductors(1200)) {
    const RingPtr ring = QuotientRing::get(c, Domain::integer());
    const RingElement a = random_element(ring, rng, 50), b = random_element(ring, rng, 50);
    OpCount ops;
    const RingElement r = reduce(mul_unreduced(a, b), &ops);
    EXPECT_LE(ops.additions, 2 * c.m()) << c.to_string();
    if (c.m() <= 120) EXPECT_EQ(r.coeffs(), oracle_product(a, b)) << c.to_string();
  }
}

TEST(RingTest, RingAxiomsOnRandomElements) {
  std::mt19937_64 rng(12);
  const RingPtr ring = ring_of(7, 1, 2, "fq:3329");
  for (int t = 0; t < 20; ++t) {
    const RingElement a = random_element(ring, rng), b = random_element(ring, rng),
                      c = random_element(ring, rng);
    EXPECT_EQ(mul(a, b), mul(b, a));
    EXPECT_EQ(mul(a, add(b, c)), add(mul(a, b), mul(a, c)));
    EXPECT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
    EXPECT_EQ(mul(a, one(ring)), a);
    EXPECT_TRUE(add(a, neg(a)).is_zero());
    EXPECT_EQ(sub(a, b), add(a, neg(b)));
  }
}

TEST(RingTest, PowerBasisRoundTrip) {
  const RingPtr ring = ring_of(5, 1, 2, "int");
  const PowerPoly x5(std::vector<BigInt>{0, 0, 0, 0, 0, 1});
  const RingElement e = from_power(ring, x5);
  // x^5 mod x^4 - 5x^2 + 5, checked by hand: x^5 = x (x^4) = 5x^3 - 5x.
  EXPECT_EQ(e.to_power(), PowerPoly(std::vector<BigInt>{0, -5, 0, 5}));
}

TEST(RingTest, Errors) {
  const RingPtr ring = ring_of(5, 1, 0, "int");
  try {
    make_element(ring, {1, 2, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegreeTooLarge);
  }
  const RingPtr other = ring_of(5, 1, 0, "fq:11");
  EXPECT_THROW(mul(one(ring), one(other)), Error);
  EXPECT_THROW(Domain::parse("fq:12"), Error);
  EXPECT_THROW(Domain::parse("gf:7"), Error);
}

TEST(RingTest, DegreeSearch) {
  for (std::size_t m : {2u, 6u, 64u, 256u, 1024u}) {
    EXPECT_EQ(conductor_with_degree(m).m(), m);
  }
}

}  // namespace
}  // namespace realcyclo
