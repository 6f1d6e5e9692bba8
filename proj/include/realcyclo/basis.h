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

// Exact quadratic-time conversions between the power basis and the V-basis,
// plus the power-basis schoolbook kernels used as test oracles. Each kernel
// is written once against a small coefficient-ring interface and instantiated
// for Z (GMP integers) and Z/qZ (word-size residues).

#ifndef REALCYCLO_BASIS_H_
#define REALCYCLO_BASIS_H_

#include <span>
#include <utility>
#include <vector>

#include "realcyclo/chebyshev.h"
#include "realcyclo/finitefield.h"

namespace realcyclo {

struct IntegerCoeffs {
  using value_type = BigInt;

  BigInt zero() const { return BigInt(0); }
  bool is_zero(const BigInt& a) const { return sgn(a) == 0; }
  void add_to(BigInt& acc, const BigInt& a) const { acc += a; }
  void sub_from(BigInt& acc, const BigInt& a) const { acc -= a; }
  void addmul(BigInt& acc, const BigInt& a, const BigInt& b) const {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  void submul(BigInt& acc, const BigInt& a, const BigInt& b) const {
    mpz_submul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  BigInt twice(const BigInt& a) const { return BigInt(a * 2); }
};

class ModCoeffs {
 public:
  using value_type = u64;

  explicit ModCoeffs(const Modulus& mod) : mod_(mod) {}

  u64 zero() const { return 0; }
  bool is_zero(u64 a) const { return a == 0; }
  void add_to(u64& acc, u64 a) const { acc = mod_.add(acc, a); }
  void sub_from(u64& acc, u64 a) const { acc = mod_.sub(acc, a); }
  void addmul(u64& acc, u64 a, u64 b) const { acc = mod_.add(acc, mod_.mul(a, b)); }
  void submul(u64& acc, u64 a, u64 b) const { acc = mod_.sub(acc, mod_.mul(a, b)); }
  u64 twice(u64 a) const { return mod_.add(a, a); }

 private:
  Modulus mod_;
};

// sum_j a_j V_j expanded in the power basis, by Clenshaw's recurrence on
// polynomials: b_j = a_j + x b_{j+1} - b_{j+2}, result a_0 + x b_1 - 2 b_2.
template <class R>
std::vector<typename R::value_type> v_to_power(
    const R& ring, std::span<const typename R::value_type> a) {
  using T = typename R::value_type;
  const std::size_t len = a.size();
  if (len <= 1) return std::vector<T>(a.begin(), a.end());
  const std::size_t top = len - 1;
  std::vector<T> b1(top + 1, ring.zero()), b2(top + 1, ring.zero());
  for (std::size_t j = top; j >= 1; --j) {
    // b2 <- a_j + x b1 - b2, in place; b_j has degree top - j.
    for (std::size_t i = top - j + 1; i-- > 0;) {
      T next = i >= 1 ? b1[i - 1] : ring.zero();
      ring.sub_from(next, b2[i]);
      b2[i] = std::move(next);
    }
    ring.add_to(b2[0], a[j]);
    std::swap(b1, b2);
  }
  // b1 = b_1, b2 = b_2
  std::vector<T> out(len, ring.zero());
  out[0] = a[0];
  for (std::size_t i = 0; i < top; ++i) ring.add_to(out[i + 1], b1[i]);
  for (std::size_t i = 0; i + 1 < top; ++i) ring.sub_from(out[i], ring.twice(b2[i]));
  return out;
}

// Horner's rule in the V-basis, using x V_0 = V_1, x V_1 = V_2 + 2 V_0 and
// x V_j = V_{j+1} + V_{j-1} for j >= 2.
template <class R>
std::vector<typename R::value_type> power_to_v(
    const R& ring, std::span<const typename R::value_type> c) {
  using T = typename R::value_type;
  const std::size_t len = c.size();
  if (len == 0) return {ring.zero()};
  std::vector<T> acc(len, ring.zero()), tmp(len, ring.zero());
  std::size_t deg = 0;
  acc[0] = c[len - 1];
  for (std::size_t i = len - 1; i-- > 0;) {
    ++deg;
    for (std::size_t j = 0; j <= deg; ++j) {
      T v = j >= 1 ? acc[j - 1] : ring.zero();
      if (j + 1 <= deg - 1) ring.add_to(v, j == 0 ? ring.twice(acc[1]) : acc[j + 1]);
      tmp[j] = std::move(v);
    }
    std::swap(acc, tmp);
    ring.add_to(acc[0], c[i]);
  }
  return acc;
}

template <class R>
std::vector<typename R::value_type> power_multiply(
    const R& ring, std::span<const typename R::value_type> a,
    std::span<const typename R::value_type> b) {
  using T = typename R::value_type;
  std::vector<T> out(a.size() + b.size() - 1, ring.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ring.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) ring.addmul(out[i + j], a[i], b[j]);
  }
  return out;
}

// Remainder of a modulo a monic f (f.back() == 1), returned with length
// deg f.
template <class R>
std::vector<typename R::value_type> remainder_monic(
    const R& ring, std::vector<typename R::value_type> a,
    std::span<const typename R::value_type> f) {
  const std::size_t d = f.size() - 1;
  for (std::size_t i = a.size(); i-- > d;) {
    if (ring.is_zero(a[i])) continue;
    const auto lead = a[i];
    for (std::size_t j = 0; j < d; ++j) ring.submul(a[i - d + j], lead, f[j]);
    a[i] = ring.zero();
  }
  a.resize(d, ring.zero());
  return a;
}

PowerPoly to_power_basis(const VPoly& v);
VPoly to_v_basis(const PowerPoly& pw);

std::vector<u64> to_power_basis_mod(std::span<const u64> v, const Modulus& mod);
std::vector<u64> to_v_basis_mod(std::span<const u64> pw, const Modulus& mod);

}  // namespace realcyclo

#endif  // REALCYCLO_BASIS_H_
