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

// Arithmetic in Z[x]/(Psi_n) and (Z/qZ)[x]/(Psi_n) with elements stored in
// the V-basis {V_0, ..., V_{m-1}}.
//
// The fast product evaluates both factors on the Chebyshev grid
// x_j = 2 cos(2 pi (2j+1) / 4N) with a DCT-III, multiplies pointwise and
// interpolates back with a DCT-II:
//
//   c = (4 / N) dct2(dct3(a) * dct3(b)),   N = smallest power of two >= 2m.
//
// The unreduced product (degree <= 2m - 2) is then folded back to degree
// < m in linear time using V_j = V_{n-j} (or V_{n/2-j} = -V_j, V_{n/4} = 0)
// followed by the sparse form of Psi_n.

#ifndef REALCYCLO_RING_H_
#define REALCYCLO_RING_H_

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "realcyclo/chebyshev.h"
#include "realcyclo/dct.h"
#include "realcyclo/finitefield.h"
#include "realcyclo/minpoly.h"

namespace realcyclo {

enum class DomainKind { kInteger, kPrimeField, kCrt };

class Domain {
 public:
  static Domain integer() { return Domain(DomainKind::kInteger, 0, 0); }
  // q must be an odd prime.
  static Domain prime_field(u64 q);
  // Residues modulo q1 q2. With no arguments the primes are chosen per ring
  // (the two largest primes below 2^31 that are 1 mod 4N).
  static Domain crt() { return Domain(DomainKind::kCrt, 0, 0); }
  static Domain crt(u64 q1, u64 q2);
  // "int", "fq:Q", "crt" or "crt:Q1:Q2".
  static Domain parse(std::string_view spec);

  DomainKind kind() const { return kind_; }
  bool modular() const { return kind_ != DomainKind::kInteger; }
  // Modulus of the residues: q, or q1 q2. Zero for the integers.
  u64 modulus() const;
  u64 q1() const { return q1_; }
  u64 q2() const { return q2_; }
  std::string to_string() const;

  bool operator==(const Domain&) const = default;

 private:
  Domain(DomainKind kind, u64 q1, u64 q2) : kind_(kind), q1_(q1), q2_(q2) {}

  DomainKind kind_;
  u64 q1_;
  u64 q2_;
};

class QuotientRing;
using RingPtr = std::shared_ptr<const QuotientRing>;

// A residue class. Coefficients are V-basis, length m. In modular domains
// they lie in [0, q); in the integer domain they are exact 64-bit values.
class RingElement {
 public:
  RingElement(RingPtr ring, std::vector<i64> coeffs);

  const QuotientRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const std::vector<i64>& coeffs() const { return coeffs_; }
  i64 operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const;

  VPoly to_vpoly() const;
  // Power-basis representative of degree < m; modular residues stay in
  // [0, q).
  PowerPoly to_power() const;

  bool operator==(const RingElement& o) const;

 private:
  RingPtr ring_;
  std::vector<i64> coeffs_;
};

// V-basis coefficients of a product before reduction, length <= 2m - 1.
struct UnreducedProduct {
  RingPtr ring;
  std::vector<i64> coeffs;
};

class QuotientRing {
 public:
  // Cached per (conductor, domain); plans are built once and shared.
  static RingPtr get(const Conductor& c, const Domain& d);
  static RingPtr create(const Conductor& c, const Domain& d);

  const Conductor& conductor() const { return conductor_; }
  const std::vector<SparseTerm>& sparse_psi() const { return sparse_; }
  // Power forms are built on first use; large degrees only pay for them
  // when the schoolbook oracle runs.
  const MinimalPolynomial& min_poly() const;
  // Power form of Psi_n reduced mod the domain modulus.
  const std::vector<u64>& psi_mod() const;
  // Resolved domain (automatic CRT primes filled in).
  const Domain& domain() const { return domain_; }
  std::size_t degree() const { return conductor_.m(); }
  // Padded transform size N.
  std::size_t dct_size() const { return n_; }
  // Modulus of a modular domain.
  const Modulus& modulus() const;
  // True when the fast product is available in this domain.
  bool has_fast_plan() const { return mod_plan_.has_value(); }
  // CRT primes used for exact integer products.
  u64 lift_q1() const { return lift_q1_; }
  u64 lift_q2() const { return lift_q2_; }

  const ModDctPlan* mod_plan() const { return mod_plan_ ? &*mod_plan_ : nullptr; }
  const ModDctPlan& lift_plan(int which) const { return which == 0 ? lift1_ : lift2_; }
  const RealDctPlan& real_plan() const { return real_; }

 private:
  QuotientRing(const Conductor& c, const Domain& d);

  Conductor conductor_;
  std::vector<SparseTerm> sparse_;
  Domain domain_;
  std::size_t n_;
  std::optional<Modulus> mod_;
  std::optional<ModDctPlan> mod_plan_;
  u64 lift_q1_;
  u64 lift_q2_;
  ModDctPlan lift1_;
  ModDctPlan lift2_;
  RealDctPlan real_;
  mutable std::once_flag mp_once_;
  mutable std::unique_ptr<MinimalPolynomial> mp_;
  mutable std::once_flag psi_mod_once_;
  mutable std::vector<u64> psi_mod_;
};

// Element constructors. Coefficients are reduced into the domain.
RingElement make_element(const RingPtr& ring, std::vector<i64> v_coeffs);
RingElement zero(const RingPtr& ring);
RingElement one(const RingPtr& ring);
// Reduces an arbitrary power-basis polynomial modulo Psi_n.
RingElement from_power(const RingPtr& ring, const PowerPoly& pw);
// Uniform coefficients: [-bound, bound] over Z, [0, q) otherwise.
RingElement random_element(const RingPtr& ring, std::mt19937_64& rng,
                           i64 bound = 1000);

RingElement add(const RingElement& a, const RingElement& b);
RingElement sub(const RingElement& a, const RingElement& b);
RingElement neg(const RingElement& a);

// Linear-time fold of an unreduced V-basis product to length m. `ops`
// receives the number of scalar additions performed.
RingElement reduce(const UnreducedProduct& u, OpCount* ops = nullptr);

// DCT convolution without the final reduction.
UnreducedProduct mul_unreduced(const RingElement& a, const RingElement& b);

// Fast product. Integer domain: exact, via two prime-field transforms and
// CRT; throws ModulusUnsuitable if the coefficient bound exceeds the CRT
// range. Prime-field domain: requires q = 1 (mod 4N).
RingElement mul_fast(const RingElement& a, const RingElement& b);
// Floating-point DCT with rounding (integer domain only). Throws Overflow
// when a rounding residual reaches 0.25.
RingElement mul_fast_real(const RingElement& a, const RingElement& b);
// Oracle: power basis, quadratic product, remainder by Psi_n, back to V.
RingElement mul_schoolbook(const RingElement& a, const RingElement& b);
// Dispatcher: the fast path when it applies; otherwise an exact integer
// product of the centered lifts, or the schoolbook product.
RingElement mul(const RingElement& a, const RingElement& b);

struct BenchRow {
  std::size_t m = 0;
  u64 n = 0;
  double ns_fast = 0.0;
  double ns_schoolbook = 0.0;  // negative when skipped
  u64 additions_in_reduce = 0;
};

// Conductor of degree m: n = 3 * 2^r when m is a power of two, otherwise
// the smallest conductor of that degree. Throws InvalidArgument if none.
Conductor conductor_with_degree(std::size_t m);

// Times the fast product (median over `reps`) in a prime field with
// q = 1 (mod 4N); the schoolbook product is timed when m <= schoolbook_max.
BenchRow bench_mul(const Conductor& c, int reps, u64 seed,
                   std::size_t schoolbook_max = 4096);

}  // namespace realcyclo

#endif  // REALCYCLO_RING_H_
