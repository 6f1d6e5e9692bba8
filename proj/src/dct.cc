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

#include <cmath>
#include <numbers>
#include <string>

#include "realcyclo/error.h"

namespace realcyclo {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

template <class A>
DctPlan<A>::DctPlan(std::size_t n, A arith, std::vector<T> cosines,
                    std::string domain)
    : n_(n), arith_(std::move(arith)), cos_(std::move(cosines)),
      domain_(std::move(domain)) {
  if (!is_power_of_two(n) || n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "DCT size must be a power of two >= 2: " + std::to_string(n));
  }
  if (cos_.size() != 4 * n) {
    throw Error(ErrorCode::kInvalidArgument, "twiddle table has wrong size");
  }
  two_cos_.resize(n);
  for (std::size_t t = 0; t < n; ++t) two_cos_[t] = arith_.add(cos_[t], cos_[t]);
}

template <class A>
void DctPlan<A>::check_size(std::size_t got) const {
  if (got != n_) {
    throw Error(ErrorCode::kSizeMismatch, "expected " + std::to_string(n_) +
                                              " inputs, got " +
                                              std::to_string(got));
  }
}

// DCT-II of size n: even outputs are a half-size DCT-II of the folded sums,
// odd outputs a half-size DCT-IV of the folded differences.
template <class A>
void DctPlan<A>::c2(const T* x, T* out, std::size_t n, T* tmp,
                    OpCount* ops) const {
  if (n == 1) {
    out[0] = x[0];
    return;
  }
  const std::size_t h = n / 2;
  T* u = tmp;
  T* v = tmp + h;
  T* even = tmp + n;
  T* odd = tmp + n + h;
  for (std::size_t i = 0; i < h; ++i) {
    u[i] = arith_.add(x[i], x[n - 1 - i]);
    v[i] = arith_.sub(x[i], x[n - 1 - i]);
  }
  if (ops) ops->additions += n;
  c2(u, even, h, tmp + 2 * n, ops);
  dct4(v, odd, h, tmp + 2 * n, ops);
  for (std::size_t k = 0; k < h; ++k) {
    out[2 * k] = even[k];
    out[2 * k + 1] = odd[k];
  }
}

// Transpose of c2; with a halved leading entry this is the DCT-III.
template <class A>
void DctPlan<A>::c2t(const T* y, T* out, std::size_t n, T* tmp,
                     OpCount* ops) const {
  if (n == 1) {
    out[0] = y[0];
    return;
  }
  const std::size_t h = n / 2;
  T* ye = tmp;
  T* yo = tmp + h;
  T* even = tmp + n;
  T* odd = tmp + n + h;
  for (std::size_t k = 0; k < h; ++k) {
    ye[k] = y[2 * k];
    yo[k] = y[2 * k + 1];
  }
  c2t(ye, even, h, tmp + 2 * n, ops);
  dct4(yo, odd, h, tmp + 2 * n, ops);  // the DCT-IV matrix is symmetric
  for (std::size_t j = 0; j < h; ++j) {
    out[j] = arith_.add(even[j], odd[j]);
    out[n - 1 - j] = arith_.sub(even[j], odd[j]);
  }
  if (ops) ops->additions += n;
}

// DCT-IV of size n via 2 cos(a) cos(b) = cos(a+b) + cos(a-b): scale by
// 2 cos(pi (2i+1) / 4n), take a DCT-II, then undo the pairwise sums with
// Y_0 = Z_0 / 2 and Y_k = Z_k - Y_{k-1}. No divisions other than the half.
template <class A>
void DctPlan<A>::dct4(const T* v, T* out, std::size_t n, T* tmp,
                      OpCount* ops) const {
  const u64 unit = n_ / (2 * n);  // cos index of pi / 4n is N / 2n
  if (n == 1) {
    out[0] = arith_.mul(v[0], cos_[unit]);
    if (ops) ops->multiplications += 1;
    return;
  }
  T* scaled = tmp;
  for (std::size_t i = 0; i < n; ++i) {
    scaled[i] = arith_.mul(v[i], two_cos_[(2 * i + 1) * unit]);
  }
  c2(scaled, out, n, tmp + n, ops);
  out[0] = arith_.half(out[0]);
  for (std::size_t k = 1; k < n; ++k) out[k] = arith_.sub(out[k], out[k - 1]);
  if (ops) {
    ops->multiplications += n + 1;
    ops->additions += n - 1;
  }
}

template <class A>
std::vector<typename DctPlan<A>::T> DctPlan<A>::dct2(std::span<const T> a,
                                                     OpCount* ops) const {
  check_size(a.size());
  std::vector<T> out(n_), tmp(6 * n_);
  c2(a.data(), out.data(), n_, tmp.data(), ops);
  return out;
}

template <class A>
std::vector<typename DctPlan<A>::T> DctPlan<A>::dct3(std::span<const T> a,
                                                     OpCount* ops) const {
  check_size(a.size());
  std::vector<T> in(a.begin(), a.end()), out(n_), tmp(6 * n_);
  in[0] = arith_.half(in[0]);
  if (ops) ops->multiplications += 1;
  c2t(in.data(), out.data(), n_, tmp.data(), ops);
  return out;
}

template <class A>
std::vector<typename DctPlan<A>::T> DctPlan<A>::dct2_direct(
    std::span<const T> a) const {
  check_size(a.size());
  std::vector<T> out(n_, arith_.zero());
  for (std::size_t j = 0; j < n_; ++j) {
    for (std::size_t i = 0; i < n_; ++i) {
      out[j] = arith_.add(out[j], arith_.mul(a[i], cosine((2 * i + 1) * j)));
    }
  }
  return out;
}

template <class A>
std::vector<typename DctPlan<A>::T> DctPlan<A>::dct3_direct(
    std::span<const T> a) const {
  check_size(a.size());
  std::vector<T> out(n_, arith_.zero());
  for (std::size_t j = 0; j < n_; ++j) {
    T acc = arith_.half(a[0]);
    for (std::size_t i = 1; i < n_; ++i) {
      acc = arith_.add(acc, arith_.mul(a[i], cosine((2 * j + 1) * i)));
    }
    out[j] = acc;
  }
  return out;
}

template class DctPlan<RealArith>;
template class DctPlan<ModArith>;

namespace {

std::vector<u64> modular_cosines(std::size_t n, const Modulus& mod, u64 omega) {
  const std::size_t order = 4 * n;
  std::vector<u64> pw(order);
  pw[0] = 1;
  for (std::size_t t = 1; t < order; ++t) pw[t] = mod.mul(pw[t - 1], omega);
  std::vector<u64> cos(order);
  for (std::size_t t = 0; t < order; ++t) {
    cos[t] = mod.half(mod.add(pw[t], pw[(order - t) % order]));
  }
  return cos;
}

}  // namespace

RealDctPlan make_real_plan(std::size_t n) {
  std::vector<double> cos(4 * n);
  for (std::size_t t = 0; t < cos.size(); ++t) {
    cos[t] = std::cos(2.0 * std::numbers::pi * static_cast<double>(t) /
                      static_cast<double>(4 * n));
  }
  return RealDctPlan(n, RealArith{}, std::move(cos), "real");
}

ModDctPlan make_mod_plan(std::size_t n, const PrimeField& field) {
  if (!is_power_of_two(n) || n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "DCT size must be a power of two >= 2: " + std::to_string(n));
  }
  if ((field.q() - 1) % (4 * n) != 0) {
    throw Error(ErrorCode::kModulusUnsuitable,
                "q = " + std::to_string(field.q()) + " is not 1 mod " +
                    std::to_string(4 * n));
  }
  const u64 omega = root_of_unity(4 * n, field);
  return ModDctPlan(n, ModArith(field.modulus()),
                    modular_cosines(n, field.modulus(), omega),
                    "fq:" + std::to_string(field.q()));
}

ModDctPlan make_crt_plan(std::size_t n, const CrtModulus& crt) {
  if (crt.order != 4 * n) {
    throw Error(ErrorCode::kModulusUnsuitable,
                "CRT root order must be 4N = " + std::to_string(4 * n));
  }
  Modulus mod(crt.composite());
  return ModDctPlan(n, ModArith(mod), modular_cosines(n, mod, crt.omega),
                    "crt:" + std::to_string(crt.q1) + "*" +
                        std::to_string(crt.q2));
}

OpFormula operation_count(std::size_t n) {
  if (!is_power_of_two(n) || n < 4) {
    throw Error(ErrorCode::kInvalidArgument,
                "operation count needs N = 2^l with l >= 2");
  }
  i64 l = 0;
  while ((std::size_t{1} << l) < n) ++l;
  const i64 quarter = static_cast<i64>(n) / 4;
  return {(l - 2) * quarter, (3 * (l - 2) * static_cast<i64>(n)) / 8 - quarter + 1};
}

OpCount measured_dct3_ops(std::size_t n) {
  RealDctPlan plan = make_real_plan(n);
  std::vector<double> a(n, 1.0);
  OpCount ops;
  plan.dct3(a, &ops);
  return ops;
}

}  // namespace realcyclo
