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

// Non-scaled DCT-II and DCT-III of power-of-two size N:
//
//   dct3(a)_j = a_0 / 2 + sum_{i>=1} a_i cos(2 pi (2j+1) i / 4N)
//   dct2(a)_j = sum_i a_i cos(2 pi (2i+1) j / 4N)
//
// so that dct2(dct3(a)) = (N/2) a. The same division-free recursion runs
// over doubles and over Z/qZ, where cos(2 pi t / 4N) is replaced by
// (w^t + w^-t) / 2 for w of exact order 4N.

#ifndef REALCYCLO_DCT_H_
#define REALCYCLO_DCT_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "realcyclo/finitefield.h"

namespace realcyclo {

struct OpCount {
  u64 multiplications = 0;
  u64 additions = 0;
};

class RealArith {
 public:
  using value_type = double;

  double zero() const { return 0.0; }
  double add(double a, double b) const { return a + b; }
  double sub(double a, double b) const { return a - b; }
  double mul(double a, double b) const { return a * b; }
  double half(double a) const { return 0.5 * a; }
  bool operator==(const RealArith&) const { return true; }
};

class ModArith {
 public:
  using value_type = u64;

  explicit ModArith(const Modulus& mod) : mod_(mod) {}

  u64 zero() const { return 0; }
  u64 add(u64 a, u64 b) const { return mod_.add(a, b); }
  u64 sub(u64 a, u64 b) const { return mod_.sub(a, b); }
  u64 mul(u64 a, u64 b) const { return mod_.mul(a, b); }
  u64 half(u64 a) const { return mod_.half(a); }
  const Modulus& modulus() const { return mod_; }
  bool operator==(const ModArith& o) const { return mod_ == o.mod_; }

 private:
  Modulus mod_;
};

template <class A>
class DctPlan {
 public:
  using T = typename A::value_type;

  // `cosines` holds cos(2 pi t / 4N) for t in [0, 4N).
  DctPlan(std::size_t n, A arith, std::vector<T> cosines, std::string domain);

  std::size_t size() const { return n_; }
  const A& arith() const { return arith_; }
  const std::string& domain() const { return domain_; }
  // cos(2 pi t / 4N), any t.
  T cosine(u64 t) const { return cos_[t % cos_.size()]; }

  // O(N log N) kernels. `ops`, when given, accumulates the scalar work.
  std::vector<T> dct2(std::span<const T> a, OpCount* ops = nullptr) const;
  std::vector<T> dct3(std::span<const T> a, OpCount* ops = nullptr) const;

  // O(N^2) reference sums.
  std::vector<T> dct2_direct(std::span<const T> a) const;
  std::vector<T> dct3_direct(std::span<const T> a) const;

 private:
  void c2(const T* x, T* out, std::size_t n, T* tmp, OpCount* ops) const;
  void c2t(const T* y, T* out, std::size_t n, T* tmp, OpCount* ops) const;
  void dct4(const T* v, T* out, std::size_t n, T* tmp, OpCount* ops) const;
  void check_size(std::size_t got) const;

  std::size_t n_;
  A arith_;
  std::vector<T> cos_;
  std::vector<T> two_cos_;  // 2 cos(2 pi t / 4N), t < N
  std::string domain_;
};

using RealDctPlan = DctPlan<RealArith>;
using ModDctPlan = DctPlan<ModArith>;

RealDctPlan make_real_plan(std::size_t n);
// Requires q = 1 (mod 4N); throws ModulusUnsuitable otherwise.
ModDctPlan make_mod_plan(std::size_t n, const PrimeField& field);
// Twiddles from the CRT-combined root of unity; crt.order must equal 4N.
ModDctPlan make_crt_plan(std::size_t n, const CrtModulus& crt);

bool is_power_of_two(std::size_t n);
// Smallest power of two >= n (n >= 1).
std::size_t next_power_of_two(std::size_t n);

// Published closed-form counts for N = 2^l, l >= 2:
// (l-2) 2^(l-2) multiplications and 3(l-2) 2^(l-3) - 2^(l-2) + 1 additions.
// Reported as reference figures; see the README for how they compare with
// the instrumented kernel.
struct OpFormula {
  i64 multiplications;
  i64 additions;
};
OpFormula operation_count(std::size_t n);

// Instrumented counts of one fast dct3 of size n (real domain).
OpCount measured_dct3_ops(std::size_t n);

}  // namespace realcyclo

#endif  // REALCYCLO_DCT_H_
