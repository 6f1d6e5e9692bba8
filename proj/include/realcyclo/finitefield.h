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

// Word-size modular arithmetic: odd moduli below 2^63, prime fields, CRT
// composites, multiplicative orders and roots of unity.

#ifndef REALCYCLO_FINITEFIELD_H_
#define REALCYCLO_FINITEFIELD_H_

#include <cstdint>
#include <utility>
#include <vector>

namespace realcyclo {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Residue arithmetic modulo an odd q < 2^63. Residues are kept in [0, q).
// Moduli below 2^32 use a Barrett reduction of the 64-bit product; larger
// moduli fall back to a 128-bit remainder.
class Modulus {
 public:
  explicit Modulus(u64 q);

  u64 value() const { return q_; }

  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + q_ - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : q_ - a; }
  u64 mul(u64 a, u64 b) const {
    if (small_) {
      u64 x = a * b;
      u64 quot = static_cast<u64>((static_cast<u128>(x) * barrett_) >> 64);
      u64 r = x - quot * q_;
      return r >= q_ ? r - q_ : r;
    }
    return static_cast<u64>(static_cast<u128>(a) * b % q_);
  }
  u64 half(u64 a) const { return (a & 1) ? (a >> 1) + half_q_ + 1 : a >> 1; }

  u64 pow(u64 base, u64 exp) const;
  // Inverse of a unit; throws ZeroElement for non-units.
  u64 inv(u64 a) const;

  // Maps any signed integer onto its residue.
  u64 from_signed(i64 v) const;
  u64 from_signed(i128 v) const;
  // Representative in (-q/2, q/2].
  i64 centered(u64 a) const {
    return a > (q_ >> 1) ? static_cast<i64>(a) - static_cast<i64>(q_)
                         : static_cast<i64>(a);
  }

  bool operator==(const Modulus& o) const { return q_ == o.q_; }

 private:
  u64 q_;
  u64 half_q_;  // (q - 1) / 2
  u64 barrett_;
  bool small_;
};

// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime_u64(u64 n);

// Prime factorisation by trial division plus Pollard-Brent rho. Returned as
// sorted (prime, exponent) pairs.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

// An odd prime modulus. Construction validates primality.
class PrimeField {
 public:
  explicit PrimeField(u64 q);

  u64 q() const { return mod_.value(); }
  const Modulus& modulus() const { return mod_; }

 private:
  Modulus mod_;
};

// Least t >= 1 with a^t = 1 (mod q). Computed from the factorisation of q-1
// by stripping prime factors off the group order while the power stays 1.
u64 mul_order(u64 a, const PrimeField& field);

// Smallest generator of F_q^*.
u64 primitive_root(const PrimeField& field);

// Element of exact multiplicative order m. Throws NoSuchRoot unless
// q = 1 (mod m).
u64 root_of_unity(u64 m, const PrimeField& field);

// True iff a^m = 1 and a^(m/l) != 1 for every prime l | m.
bool has_exact_order(u64 a, u64 m, const Modulus& mod);

// Two distinct primes that both admit an m-th root of unity, with an element
// of the composite ring reducing to an exact-order-m root modulo each prime.
struct CrtModulus {
  u64 q1 = 0;
  u64 q2 = 0;
  u64 order = 0;  // M
  u64 omega = 0;  // residue mod q1*q2

  u64 composite() const { return q1 * q2; }
};

CrtModulus make_crt_modulus(u64 q1, u64 q2, u64 order);

// Unique y mod q1*q2 with y = x1 (mod q1) and y = x2 (mod q2). The moduli
// must be coprime and their product must stay below 2^63.
u64 crt_combine(u64 x1, u64 q1, u64 x2, u64 q2);

// Primes p with p = 1 (mod step), scanned downward from below `limit`.
std::vector<u64> primes_congruent_one_below(u64 step, u64 limit, int count);

// Smallest prime p >= lower with p = 1 (mod step).
u64 prime_congruent_one_above(u64 step, u64 lower);

}  // namespace realcyclo

#endif  // REALCYCLO_FINITEFIELD_H_
