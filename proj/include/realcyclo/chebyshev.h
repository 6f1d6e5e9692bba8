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

// Modified Chebyshev polynomials V_j(x) = 2 T_j(x/2), V_0 = 1.
//
// They satisfy V_j(2 cos t) = 2 cos(j t), V_{j+1} = x V_j - V_{j-1} for
// j >= 2, and V_i V_j = V_{i+j} + V_{|i-j|}. Coefficient vectors are stored
// in ascending order in both bases.

#ifndef REALCYCLO_CHEBYSHEV_H_
#define REALCYCLO_CHEBYSHEV_H_

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace realcyclo {

using BigInt = mpz_class;

enum class Basis { kPower, kChebyshevV };

// Dense coefficient vector tagged with its basis so power-basis and V-basis
// data cannot be mixed up. Always holds at least one coefficient.
template <Basis B, class T>
class Poly {
 public:
  Poly() : coeffs_(1, T(0)) {}
  explicit Poly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(T(0));
  }

  static Poly monomial(std::size_t j, T c = T(1)) {
    std::vector<T> v(j + 1, T(0));
    v[j] = std::move(c);
    return Poly(std::move(v));
  }

  std::size_t size() const { return coeffs_.size(); }
  // -1 for the zero polynomial.
  long degree() const {
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      if (coeffs_[i] != 0) return static_cast<long>(i);
    }
    return -1;
  }
  void trim() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  }
  void resize(std::size_t n) { coeffs_.resize(n == 0 ? 1 : n, T(0)); }

  const T& operator[](std::size_t i) const { return coeffs_[i]; }
  T& operator[](std::size_t i) { return coeffs_[i]; }
  std::span<const T> coeffs() const { return coeffs_; }
  std::vector<T>& mutable_coeffs() { return coeffs_; }

  bool operator==(const Poly& o) const {
    std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    for (std::size_t i = 0; i < n; ++i) {
      const T zero(0);
      const T& a = i < coeffs_.size() ? coeffs_[i] : zero;
      const T& b = i < o.coeffs_.size() ? o.coeffs_[i] : zero;
      if (a != b) return false;
    }
    return true;
  }

 private:
  std::vector<T> coeffs_;
};

using PowerPoly = Poly<Basis::kPower, BigInt>;
using VPoly = Poly<Basis::kChebyshevV, BigInt>;

// Power-basis expansion of V_j from the three-term recurrence.
PowerPoly v_poly(std::size_t j);

// V-basis expansion of V_n * V_m (n, m >= 1).
VPoly v_product_indices(std::size_t n, std::size_t m);

// V_j(t) for a scalar t.
double v_value(std::size_t j, double t);

// Self-test of V_n(V_m(t)) = V_{nm}(t) on every sample.
bool v_compose_check(std::size_t n, std::size_t m, std::span<const double> samples,
                     double tol = 1e-9);

// sum_j a_j V_j(t), by a backward recurrence in O(degree).
double eval_at(std::span<const double> v_coeffs, double t);
double eval_at(const VPoly& poly, double t);

// Naive power-basis product; used by tests and the schoolbook path.
PowerPoly multiply(const PowerPoly& a, const PowerPoly& b);

}  // namespace realcyclo

#endif  // REALCYCLO_CHEBYSHEV_H_
