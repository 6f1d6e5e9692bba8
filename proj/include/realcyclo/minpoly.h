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

// Conductors n = 2^r p^s and the minimal polynomial Psi_n of 2 cos(2 pi / n).
//
// In the V-basis Psi_n is sparse with k + 1 = (p + 1) / 2 unit terms:
//
//   r = 0:   Psi_n = sum_{i=0..k} V_{i h},               h = p^(s-1)
//   r >= 2:  Psi_n = sum_{i=0..k} (-1)^(k-i) V_{i h},    h = 2^(r-1) p^(s-1)
//
// and has degree m = phi(n) / 2 = k h.

#ifndef REALCYCLO_MINPOLY_H_
#define REALCYCLO_MINPOLY_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "realcyclo/chebyshev.h"
#include "realcyclo/finitefield.h"

namespace realcyclo {

u64 euler_phi(u64 n);

class Conductor {
 public:
  // Validates p (odd prime), s >= 1 and r != 1. Throws InvalidConductor.
  static Conductor create(u64 p, unsigned s, unsigned r);

  u64 p() const { return p_; }
  unsigned s() const { return s_; }
  unsigned r() const { return r_; }
  u64 n() const { return n_; }
  // (p - 1) / 2
  u64 k() const { return (p_ - 1) / 2; }
  // phi(n) / 2
  std::size_t m() const { return m_; }
  // Index spacing h of the sparse V-form.
  std::size_t spacing() const { return spacing_; }
  // Largest index of the cosine grid: (p^s - 1)/2 when r = 0,
  // 2^(r-2) p^s - 1 when r >= 2.
  std::size_t grid_size() const { return grid_; }
  bool prime_power_case() const { return r_ == 0; }
  // m < 2: the quotient ring is Z and most constructions degenerate.
  bool degenerate() const { return m_ < 2; }

  std::string to_string() const;

  bool operator==(const Conductor& o) const {
    return p_ == o.p_ && s_ == o.s_ && r_ == o.r_;
  }

 private:
  Conductor(u64 p, unsigned s, unsigned r);

  u64 p_;
  unsigned s_;
  unsigned r_;
  u64 n_;
  std::size_t m_;
  std::size_t spacing_;
  std::size_t grid_;
};

// Every conductor n = 2^r p^s <= max_n with r = 0 or r >= 2 and m >= 2,
// ordered by n.
std::vector<Conductor> enumerate_conductors(u64 max_n);

struct SparseTerm {
  std::size_t index;
  int sign;  // +1 or -1

  bool operator==(const SparseTerm&) const = default;
};

struct MinimalPolynomial {
  Conductor conductor;
  std::vector<SparseTerm> sparse_v;  // ascending index
  PowerPoly power;                   // monic, degree m

  // Ascending V-basis coefficient vector of length m + 1.
  VPoly dense_v() const;
  // Power-basis coefficients reduced mod q.
  std::vector<u64> power_mod(const Modulus& mod) const;
};

// The k + 1 signed V-indices of Psi_n, without expanding the power form.
std::vector<SparseTerm> sparse_v_form(const Conductor& c);

// Throws InvalidConductor for degenerate (m < 2) conductors.
MinimalPolynomial build_min_poly(const Conductor& c);

// Power form mod q assembled directly from the sparse V-form with word-size
// arithmetic; agrees with build_min_poly(c).power_mod(mod).
std::vector<u64> min_poly_power_mod(const Conductor& c, const Modulus& mod);

struct MinPolyCheck {
  bool roots_vanish = false;     // |Psi(2 cos(2 pi s/n))| small for all s
  bool product_matches = false;  // rounded root product == power form
  double max_residual = 0.0;     // max |Psi(root)| / ||Psi||_1
  unsigned precision_bits = 0;   // MPFR precision used for the product

  bool ok() const { return roots_vanish && product_matches; }
};

// Numerical oracle: (a) Psi vanishes at every Galois conjugate
// 2 cos(2 pi s / n), gcd(s, n) = 1, s <= n/2, to 1e-6 relative to ||Psi||_1;
// (b) the monic product of (x - 2 cos(2 pi s / n)), formed in multiprecision
// floating point and rounded, equals the power form exactly.
MinPolyCheck check_min_poly_numeric(const MinimalPolynomial& mp);

inline bool verify_min_poly_numeric(const MinimalPolynomial& mp) {
  return check_min_poly_numeric(mp).ok();
}

}  // namespace realcyclo

#endif  // REALCYCLO_MINPOLY_H_
