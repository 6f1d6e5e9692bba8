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

#include "realcyclo/finitefield.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "realcyclo/error.h"

namespace realcyclo {

namespace {

u64 mulmod64(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod64(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, b, m);
    b = mulmod64(b, b, m);
    e >>= 1;
  }
  return r;
}

u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  // Fixed seeds keep the factorisation deterministic.
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    const u64 m = 128;
    u64 r = 1;
    auto f = [&](u64 v) { return (mulmod64(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod64(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(u64 n, std::map<u64, unsigned>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    ++out[n];
    return;
  }
  u64 d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

Modulus::Modulus(u64 q) : q_(q) {
  if (q < 3 || (q & 1) == 0 || q >= (u64{1} << 63)) {
    throw Error(ErrorCode::kInvalidArgument,
                "modulus must be odd and in [3, 2^63): " + std::to_string(q));
  }
  half_q_ = q >> 1;
  small_ = q < (u64{1} << 32);
  barrett_ = small_ ? ~u64{0} / q : 0;
}

u64 Modulus::pow(u64 base, u64 exp) const {
  u64 r = 1;
  base %= q_;
  while (exp) {
    if (exp & 1) r = mul(r, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return r;
}

u64 Modulus::inv(u64 a) const {
  i128 t = 0, new_t = 1;
  i128 r = q_, new_r = a % q_;
  while (new_r != 0) {
    i128 quot = r / new_r;
    std::swap(t, new_t);
    new_t -= quot * t;
    std::swap(r, new_r);
    new_r -= quot * r;
  }
  if (r != 1) {
    throw Error(ErrorCode::kZeroElement,
                "element is not invertible modulo " + std::to_string(q_));
  }
  if (t < 0) t += q_;
  return static_cast<u64>(t);
}

u64 Modulus::from_signed(i64 v) const {
  i64 r = v % static_cast<i64>(q_);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(q_) : r);
}

u64 Modulus::from_signed(i128 v) const {
  i128 r = v % static_cast<i128>(q_);
  return static_cast<u64>(r < 0 ? r + static_cast<i128>(q_) : r);
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::map<u64, unsigned> acc;
  for (u64 p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      ++acc[p];
      n /= p;
    }
  }
  factor_into(n, acc);
  return {acc.begin(), acc.end()};
}

PrimeField::PrimeField(u64 q) : mod_(q) {
  if (!is_prime_u64(q)) {
    throw Error(ErrorCode::kInvalidArgument,
                "field modulus is not prime: " + std::to_string(q));
  }
}

u64 mul_order(u64 a, const PrimeField& field) {
  const Modulus& mod = field.modulus();
  a %= mod.value();
  if (a == 0) throw Error(ErrorCode::kZeroElement, "zero has no order");
  u64 order = mod.value() - 1;
  for (auto [prime, exp] : factorize(order)) {
    for (unsigned i = 0; i < exp; ++i) {
      if (mod.pow(a, order / prime) != 1) break;
      order /= prime;
    }
  }
  return order;
}

u64 primitive_root(const PrimeField& field) {
  const Modulus& mod = field.modulus();
  const u64 group = mod.value() - 1;
  const auto factors = factorize(group);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (auto [prime, exp] : factors) {
      if (mod.pow(g, group / prime) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
}

u64 root_of_unity(u64 m, const PrimeField& field) {
  const u64 q = field.q();
  if (m == 0 || (q - 1) % m != 0) {
    throw Error(ErrorCode::kNoSuchRoot,
                "q = " + std::to_string(q) + " is not 1 mod " +
                    std::to_string(m));
  }
  return field.modulus().pow(primitive_root(field), (q - 1) / m);
}

bool has_exact_order(u64 a, u64 m, const Modulus& mod) {
  if (mod.pow(a, m) != 1) return false;
  for (auto [prime, exp] : factorize(m)) {
    if (mod.pow(a, m / prime) == 1) return false;
  }
  return true;
}

u64 crt_combine(u64 x1, u64 q1, u64 x2, u64 q2) {
  if (std::gcd(q1, q2) != 1) {
    throw Error(ErrorCode::kInvalidArgument, "CRT moduli are not coprime");
  }
  const u64 n = q1 * q2;
  // y = x1 + q1 * ((x2 - x1) * q1^{-1} mod q2)
  const Modulus m2(q2);
  u64 t = m2.mul(m2.sub(x2 % q2, x1 % q2), m2.inv(q1 % q2));
  return static_cast<u64>((static_cast<u128>(t) * q1 + x1 % q1) % n);
}

CrtModulus make_crt_modulus(u64 q1, u64 q2, u64 order) {
  if (q1 == q2) {
    throw Error(ErrorCode::kInvalidArgument, "CRT primes must be distinct");
  }
  if (static_cast<u128>(q1) * q2 >= (u128{1} << 63)) {
    throw Error(ErrorCode::kInvalidArgument, "CRT composite exceeds 2^63");
  }
  PrimeField f1(q1), f2(q2);
  CrtModulus out;
  out.q1 = q1;
  out.q2 = q2;
  out.order = order;
  out.omega = crt_combine(root_of_unity(order, f1), q1,
                          root_of_unity(order, f2), q2);
  return out;
}

std::vector<u64> primes_congruent_one_below(u64 step, u64 limit, int count) {
  std::vector<u64> out;
  if (limit <= step) return out;
  u64 cand = (limit - 1) / step * step + 1;
  if (cand >= limit) cand -= step;
  for (; cand > step && static_cast<int>(out.size()) < count; cand -= step) {
    if (is_prime_u64(cand)) out.push_back(cand);
  }
  return out;
}

u64 prime_congruent_one_above(u64 step, u64 lower) {
  u64 cand = lower <= 1 ? 1 : (lower - 1 + step - 1) / step * step + 1;
  if (cand < 3) cand += step;
  while (!is_prime_u64(cand)) cand += step;
  return cand;
}

}  // namespace realcyclo
