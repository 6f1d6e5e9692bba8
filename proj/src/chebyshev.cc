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

#include "realcyclo/chebyshev.h"

#include <cmath>
#include <cstdlib>

namespace realcyclo {

PowerPoly v_poly(std::size_t j) {
  if (j == 0) return PowerPoly({BigInt(1)});
  if (j == 1) return PowerPoly({BigInt(0), BigInt(1)});
  std::vector<BigInt> prev{BigInt(0), BigInt(1)};             // V_1
  std::vector<BigInt> cur{BigInt(-2), BigInt(0), BigInt(1)};  // V_2
  for (std::size_t k = 2; k < j; ++k) {
    // V_{k+1} = x V_k - V_{k-1}
    std::vector<BigInt> next(k + 2);
    for (std::size_t i = 0; i <= k; ++i) next[i + 1] = cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return PowerPoly(std::move(cur));
}

VPoly v_product_indices(std::size_t n, std::size_t m) {
  VPoly out = VPoly::monomial(n + m);
  if (n == m) {
    out[0] += 2;
  } else {
    out[n > m ? n - m : m - n] += 1;
  }
  return out;
}

double v_value(std::size_t j, double t) {
  if (j == 0) return 1.0;
  double prev = 2.0;  // V_0 in the recurrence sense: V_1 * t - V_2 = 2
  double cur = t;
  for (std::size_t k = 1; k < j; ++k) {
    double next = t * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

bool v_compose_check(std::size_t n, std::size_t m,
                     std::span<const double> samples, double tol) {
  for (double t : samples) {
    double lhs = v_value(n, v_value(m, t));
    double rhs = v_value(n * m, t);
    if (std::abs(lhs - rhs) > tol) return false;
  }
  return true;
}

double eval_at(std::span<const double> a, double t) {
  const std::size_t len = a.size();
  if (len == 0) return 0.0;
  if (len == 1) return a[0];
  if (len == 2) return a[0] + a[1] * t;
  // b_k = a_k + t b_{k+1} - b_{k+2} for k >= 2; the recurrence does not hold
  // at k = 1 (V_2 = x V_1 - 2 V_0), so the last two steps are unrolled.
  double b1 = 0.0, b2 = 0.0;  // b_{k+1}, b_{k+2}
  for (std::size_t k = len - 1; k >= 2; --k) {
    double bk = a[k] + t * b1 - b2;
    b2 = b1;
    b1 = bk;
  }
  // b1 = b_2, b2 = b_3
  return a[0] + a[1] * t + b1 * (t * t - 2.0) - b2 * t;
}

double eval_at(const VPoly& poly, double t) {
  std::vector<double> a(poly.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = poly[i].get_d();
  return eval_at(a, t);
}

PowerPoly multiply(const PowerPoly& a, const PowerPoly& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return PowerPoly(std::move(out));
}

}  // namespace realcyclo
