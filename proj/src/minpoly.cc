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

#include "realcyclo/minpoly.h"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "realcyclo/error.h"

namespace realcyclo {

namespace {

constexpr u64 kMaxConductor = u64{1} << 40;

u64 ipow(u64 b, unsigned e) {
  u64 r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > kMaxConductor / b) {
      throw Error(ErrorCode::kInvalidConductor, "conductor too large");
    }
    r *= b;
  }
  return r;
}

class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~MpfrValue() { mpfr_clear(v_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  MpfrValue(MpfrValue&& o) noexcept {
    // mpfr_t is an array type; steal the limbs by swapping with a fresh value.
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

// Builds sum_i sign_i V_{index_i} in the power basis over an arbitrary
// coefficient type by running the V recurrence up to the top index.
template <class T, class Sub, class AddSigned>
std::vector<T> sparse_v_to_power(const std::vector<SparseTerm>& terms,
                                 std::size_t top, Sub sub, AddSigned add_signed,
                                 T zero, T one, T two) {
  std::vector<T> out(top + 1, zero);
  std::vector<T> prev(top + 2, zero), cur(top + 2, zero), next(top + 2, zero);
  std::size_t ti = 0;
  auto absorb = [&](std::size_t j, const std::vector<T>& vj) {
    while (ti < terms.size() && terms[ti].index == j) {
      for (std::size_t i = j % 2; i <= j; i += 2) {
        add_signed(out[i], vj[i], terms[ti].sign);
      }
      ++ti;
    }
  };
  prev[0] = one;  // V_0
  absorb(0, prev);
  if (top == 0) return out;
  cur[1] = one;  // V_1
  absorb(1, cur);
  for (std::size_t j = 1; j < top; ++j) {
    // V_{j+1} = x V_j - c V_{j-1}, with c = 2 only for j = 1.
    for (std::size_t i = (j + 1) % 2; i <= j + 1; i += 2) {
      const T& shifted = i >= 1 ? cur[i - 1] : zero;
      if (i + 1 <= j) {
        next[i] = sub(shifted, j == 1 ? two : prev[i]);
      } else {
        next[i] = shifted;
      }
    }
    std::swap(prev, cur);
    std::swap(cur, next);
    absorb(j + 1, cur);
  }
  return out;
}

}  // namespace

u64 euler_phi(u64 n) {
  u64 result = n;
  for (auto [prime, exp] : factorize(n)) result = result / prime * (prime - 1);
  return result;
}

Conductor::Conductor(u64 p, unsigned s, unsigned r) : p_(p), s_(s), r_(r) {
  const u64 ps1 = ipow(p, s - 1);
  const u64 ps = ps1 * p;
  if (r >= 40 || ps > (kMaxConductor >> r)) {
    throw Error(ErrorCode::kInvalidConductor, "conductor too large");
  }
  n_ = ps << r;
  if (r == 0) {
    m_ = static_cast<std::size_t>((p - 1) * ps1 / 2);
    spacing_ = static_cast<std::size_t>(ps1);
    grid_ = static_cast<std::size_t>((ps - 1) / 2);
  } else {
    m_ = static_cast<std::size_t>(((p - 1) * ps1) << (r - 2));
    spacing_ = static_cast<std::size_t>(ps1 << (r - 1));
    grid_ = static_cast<std::size_t>((ps << (r - 2)) - 1);
  }
}

Conductor Conductor::create(u64 p, unsigned s, unsigned r) {
  if (p < 3 || !is_prime_u64(p)) {
    throw Error(ErrorCode::kInvalidConductor,
                "p must be an odd prime, got " + std::to_string(p));
  }
  if (s < 1) throw Error(ErrorCode::kInvalidConductor, "s must be >= 1");
  if (r == 1) {
    throw Error(ErrorCode::kInvalidConductor,
                "r = 1 (n = 2 p^s) is not supported; use r = 0 or r >= 2");
  }
  Conductor c(p, s, r);
  if (2 * c.m_ != euler_phi(c.n_)) {
    throw Error(ErrorCode::kInvalidConductor, "degree mismatch with phi(n)/2");
  }
  return c;
}

std::string Conductor::to_string() const {
  return "(p=" + std::to_string(p_) + ", s=" + std::to_string(s_) +
         ", r=" + std::to_string(r_) + ", n=" + std::to_string(n_) + ")";
}

std::vector<Conductor> enumerate_conductors(u64 max_n) {
  std::vector<Conductor> out;
  for (u64 p = 3; p <= max_n; p += 2) {
    if (!is_prime_u64(p)) continue;
    u64 ps = p;
    for (unsigned s = 1; ps <= max_n; ++s, ps *= p) {
      for (unsigned r = 0; (ps << r) <= max_n; ++r) {
        if (r == 1) continue;
        Conductor c = Conductor::create(p, s, r);
        if (!c.degenerate()) out.push_back(c);
      }
      if (ps > max_n / p) break;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Conductor& a, const Conductor& b) { return a.n() < b.n(); });
  return out;
}

VPoly MinimalPolynomial::dense_v() const {
  std::vector<BigInt> v(conductor.m() + 1);
  for (const auto& t : sparse_v) v[t.index] = t.sign;
  return VPoly(std::move(v));
}

std::vector<u64> MinimalPolynomial::power_mod(const Modulus& mod) const {
  std::vector<u64> out(power.size());
  BigInt q(static_cast<unsigned long>(mod.value()));
  BigInt r;
  for (std::size_t i = 0; i < out.size(); ++i) {
    mpz_fdiv_r(r.get_mpz_t(), power[i].get_mpz_t(), q.get_mpz_t());
    out[i] = r.get_ui();
  }
  return out;
}

std::vector<SparseTerm> sparse_v_form(const Conductor& c) {
  std::vector<SparseTerm> terms;
  const u64 k = c.k();
  for (u64 i = 0; i <= k; ++i) {
    int sign = 1;
    if (!c.prime_power_case() && ((k - i) & 1)) sign = -1;
    terms.push_back({static_cast<std::size_t>(i * c.spacing()), sign});
  }
  return terms;
}

MinimalPolynomial build_min_poly(const Conductor& c) {
  if (c.degenerate()) {
    throw Error(ErrorCode::kInvalidConductor,
                "degenerate conductor (degree < 2): " + c.to_string());
  }
  MinimalPolynomial mp{c, sparse_v_form(c), PowerPoly()};
  auto sub = [](const BigInt& a, const BigInt& b) { return BigInt(a - b); };
  auto add_signed = [](BigInt& acc, const BigInt& v, int sign) {
    if (sign > 0) {
      acc += v;
    } else {
      acc -= v;
    }
  };
  mp.power = PowerPoly(sparse_v_to_power<BigInt>(
      mp.sparse_v, c.m(), sub, add_signed, BigInt(0), BigInt(1), BigInt(2)));
  return mp;
}

std::vector<u64> min_poly_power_mod(const Conductor& c, const Modulus& mod) {
  if (c.degenerate()) {
    throw Error(ErrorCode::kInvalidConductor,
                "degenerate conductor (degree < 2): " + c.to_string());
  }
  auto sub = [&mod](u64 a, u64 b) { return mod.sub(a, b); };
  auto add_signed = [&mod](u64& acc, u64 v, int sign) {
    acc = sign > 0 ? mod.add(acc, v) : mod.sub(acc, v);
  };
  return sparse_v_to_power<u64>(sparse_v_form(c), c.m(), sub, add_signed, 0, 1,
                                2 % mod.value());
}

MinPolyCheck check_min_poly_numeric(const MinimalPolynomial& mp) {
  const Conductor& c = mp.conductor;
  const u64 n = c.n();
  MinPolyCheck result;

  std::vector<u64> sigmas;
  for (u64 s = 1; 2 * s <= n; ++s) {
    if (std::gcd(s, n) == 1) sigmas.push_back(s);
  }

  // (a) vanishing at the conjugates, evaluated on the sparse form.
  double l1 = static_cast<double>(mp.sparse_v.size());
  double worst = 0.0;
  double log_bound = 0.0;
  for (u64 s : sigmas) {
    double value = 0.0;
    for (const auto& t : mp.sparse_v) {
      u64 phase = static_cast<u64>(static_cast<u128>(s) * t.index % n);
      double term = t.index == 0
                        ? 1.0
                        : 2.0 * std::cos(2.0 * std::numbers::pi *
                                         static_cast<double>(phase) /
                                         static_cast<double>(n));
      value += t.sign * term;
    }
    worst = std::max(worst, std::abs(value) / l1);
    log_bound += std::log2(1.0 + std::abs(2.0 * std::cos(
                                     2.0 * std::numbers::pi *
                                     static_cast<double>(s) /
                                     static_cast<double>(n))));
  }
  result.max_residual = worst;
  result.roots_vanish = worst <= 1e-6;

  // (b) multiprecision root product. Every coefficient is bounded by
  // prod (1 + |root|), so that many bits plus guard bits keep the absolute
  // error of each coefficient far below 1/2.
  const std::size_t m = sigmas.size();
  const auto prec = static_cast<mpfr_prec_t>(
      std::ceil(log_bound) + 2 * std::ceil(std::log2(m + 1.0)) + 64);
  result.precision_bits = static_cast<unsigned>(prec);

  std::vector<MpfrValue> coeffs;
  coeffs.reserve(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    coeffs.emplace_back(prec);
    mpfr_set_ui(coeffs.back().get(), 0, MPFR_RNDN);
  }
  mpfr_set_ui(coeffs[0].get(), 1, MPFR_RNDN);
  MpfrValue root(prec), pi(prec);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  for (std::size_t t = 0; t < m; ++t) {
    // root = 2 cos(2 pi s / n)
    mpfr_mul_ui(root.get(), pi.get(), 2 * sigmas[t], MPFR_RNDN);
    mpfr_div_ui(root.get(), root.get(), n, MPFR_RNDN);
    mpfr_cos(root.get(), root.get(), MPFR_RNDN);
    mpfr_mul_2ui(root.get(), root.get(), 1, MPFR_RNDN);
    // Multiply the degree-t partial product by (x - root).
    mpfr_set(coeffs[t + 1].get(), coeffs[t].get(), MPFR_RNDN);
    for (std::size_t i = t; i >= 1; --i) {
      mpfr_fms(coeffs[i].get(), root.get(), coeffs[i].get(),
               coeffs[i - 1].get(), MPFR_RNDN);
      mpfr_neg(coeffs[i].get(), coeffs[i].get(), MPFR_RNDN);
    }
    mpfr_mul(coeffs[0].get(), coeffs[0].get(), root.get(), MPFR_RNDN);
    mpfr_neg(coeffs[0].get(), coeffs[0].get(), MPFR_RNDN);
  }

  bool match = mp.power.size() == m + 1;
  BigInt rounded;
  MpfrValue diff(prec);
  for (std::size_t i = 0; match && i <= m; ++i) {
    mpfr_get_z(rounded.get_mpz_t(), coeffs[i].get(), MPFR_RNDN);
    mpfr_sub_z(diff.get(), coeffs[i].get(), rounded.get_mpz_t(), MPFR_RNDN);
    if (mpfr_cmp_d(diff.get(), 0.25) > 0 || mpfr_cmp_d(diff.get(), -0.25) < 0) {
      match = false;
    }
    if (rounded != mp.power[i]) match = false;
  }
  result.product_matches = match;
  return result;
}

}  // namespace realcyclo
