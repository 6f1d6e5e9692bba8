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

#include "realcyclo/ring.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <tuple>

#include "realcyclo/basis.h"
#include "realcyclo/error.h"

namespace realcyclo {

namespace {

constexpr u64 kLiftLimit = u64{1} << 31;

i64 narrow(i128 v) {
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min()) {
    throw Error(ErrorCode::kOverflow, "coefficient does not fit in 64 bits");
  }
  return static_cast<i64>(v);
}

i64 narrow(const BigInt& v) {
  if (!v.fits_slong_p()) {
    throw Error(ErrorCode::kOverflow, "coefficient does not fit in 64 bits");
  }
  return v.get_si();
}

void require_same_ring(const RingElement& a, const RingElement& b) {
  if (a.ring_ptr() == b.ring_ptr()) return;
  if (!(a.ring().conductor() == b.ring().conductor()) ||
      !(a.ring().domain() == b.ring().domain())) {
    throw Error(ErrorCode::kDomainMismatch,
                "operands live in different rings: " +
                    a.ring().conductor().to_string() + " " +
                    a.ring().domain().to_string() + " vs " +
                    b.ring().conductor().to_string() + " " +
                    b.ring().domain().to_string());
  }
}

// Accumulators for the reduction: exact 128-bit integers or residues.
struct WideOps {
  using T = i128;
  void add_to(i128& acc, i128 v) const { acc += v; }
  void sub_from(i128& acc, i128 v) const { acc -= v; }
};

struct ModOps {
  using T = u64;
  const Modulus* mod;
  void add_to(u64& acc, u64 v) const { acc = mod->add(acc, v); }
  void sub_from(u64& acc, u64 v) const { acc = mod->sub(acc, v); }
};

// Folds c (V-basis, degree <= 2m - 2) to length m. Returns the number of
// scalar additions.
template <class Ops>
u64 fold(std::vector<typename Ops::T>& c, const Conductor& cond, const Ops& ops) {
  const std::size_t m = cond.m();
  if (c.size() > 2 * m - 1) {
    throw Error(ErrorCode::kDegreeTooLarge,
                "unreduced product has length " + std::to_string(c.size()) +
                    " > 2m - 1 = " + std::to_string(2 * m - 1));
  }
  if (c.size() <= m) {
    c.resize(m, typename Ops::T{});
    return 0;
  }
  const std::size_t deg = c.size() - 1;
  const std::size_t grid = cond.grid_size();
  const std::size_t h = cond.spacing();
  const std::size_t k = cond.k();
  const std::size_t n = cond.n();
  u64 adds = 0;

  // Phase 1: fold indices above the grid.
  if (cond.prime_power_case()) {
    for (std::size_t j = grid + 1; j <= deg; ++j) {
      ops.add_to(c[n - j], c[j]);  // V_j = V_{n-j}
      c[j] = typename Ops::T{};
      ++adds;
    }
  } else {
    if (grid + 1 <= deg) c[grid + 1] = typename Ops::T{};  // V_{n/4} = 0
    for (std::size_t j = grid + 2; j <= deg; ++j) {
      ops.sub_from(c[n / 2 - j], c[j]);  // V_{n/2-j} = -V_j
      c[j] = typename Ops::T{};
      ++adds;
    }
  }

  // Phase 2: eliminate m..grid with Psi_n * V_l; every target is below m.
  const std::size_t top = std::min(grid, deg);
  for (std::size_t j = top + 1; j-- > m;) {
    const auto t = c[j];
    const std::size_t l = j - m;
    if (cond.prime_power_case()) {
      for (std::size_t i = 0; i < k; ++i) ops.sub_from(c[i * h + l], t);
      if (l > 0) {
        for (std::size_t i = 1; i <= k; ++i) ops.sub_from(c[i * h - l], t);
      }
    } else {
      // V_{kh+l} = sum_{i<k} (-1)^(k-1-i) V_{ih+l} + sum_{i=1..k} (-1)^(k+1-i) V_{ih-l}
      for (std::size_t i = 0; i < k; ++i) {
        if ((k - 1 - i) % 2 == 0) {
          ops.add_to(c[i * h + l], t);
        } else {
          ops.sub_from(c[i * h + l], t);
        }
      }
      if (l > 0) {
        for (std::size_t i = 1; i <= k; ++i) {
          if ((k + 1 - i) % 2 == 0) {
            ops.add_to(c[i * h - l], t);
          } else {
            ops.sub_from(c[i * h - l], t);
          }
        }
      }
    }
    adds += l > 0 ? 2 * k : k;
  }
  c.resize(m);
  return adds;
}

// The phase-2 targets {ih + l} and {ih - l} must be pairwise distinct and
// below m for each l; otherwise in-place accumulation would double count.
void check_fold_targets(const Conductor& c) {
  const std::size_t m = c.m(), h = c.spacing(), k = c.k();
  std::vector<std::size_t> seen(m, 0);
  for (std::size_t l = 1; m + l <= c.grid_size(); ++l) {
    auto mark = [&](std::size_t idx) {
      if (idx >= m || seen[idx] == l) {
        throw Error(ErrorCode::kInvalidConductor,
                    "reduction targets collide for " + c.to_string());
      }
      seen[idx] = l;
    };
    for (std::size_t i = 0; i < k; ++i) mark(i * h + l);
    for (std::size_t i = 1; i <= k; ++i) mark(i * h - l);
  }
}

std::vector<u64> to_residues(const std::vector<i64>& v, std::size_t len,
                             const Modulus& mod) {
  std::vector<u64> out(len, 0);
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = mod.from_signed(v[i]);
  return out;
}

// (4/N) dct2(dct3(a) * dct3(b)), truncated to length 2m - 1.
std::vector<u64> modular_convolution(const ModDctPlan& plan,
                                     const std::vector<u64>& a,
                                     const std::vector<u64>& b, std::size_t m) {
  const Modulus& mod = plan.arith().modulus();
  auto fa = plan.dct3(a);
  auto fb = plan.dct3(b);
  for (std::size_t i = 0; i < fa.size(); ++i) fa[i] = mod.mul(fa[i], fb[i]);
  auto c = plan.dct2(fa);
  const u64 scale = mod.inv(plan.size() / 4);
  c.resize(2 * m - 1);
  for (auto& v : c) v = mod.mul(v, scale);
  return c;
}

i64 max_abs(const std::vector<i64>& v) {
  i64 out = 0;
  for (i64 x : v) out = std::max(out, x < 0 ? -x : x);
  return out;
}

// Exact V-basis product of integer vectors (length m) through two prime
// transforms and CRT. Empty when the coefficient bound (2m+1)|a||b| does
// not fit in half the CRT range.
std::optional<std::vector<i64>> exact_unreduced(const QuotientRing& ring,
                                                const std::vector<i64>& a,
                                                const std::vector<i64>& b) {
  const std::size_t m = ring.degree();
  const u64 q1 = ring.lift_q1(), q2 = ring.lift_q2();
  const long double bound = static_cast<long double>(2 * m + 1) *
                            static_cast<long double>(max_abs(a)) *
                            static_cast<long double>(max_abs(b));
  const u128 composite = static_cast<u128>(q1) * q2;
  if (2.0L * bound >= static_cast<long double>(composite)) return std::nullopt;

  const std::size_t n = ring.dct_size();
  std::vector<u64> r1, r2;
  for (int which = 0; which < 2; ++which) {
    const ModDctPlan& plan = ring.lift_plan(which);
    const Modulus& mod = plan.arith().modulus();
    auto c = modular_convolution(plan, to_residues(a, n, mod),
                                 to_residues(b, n, mod), m);
    (which == 0 ? r1 : r2) = std::move(c);
  }
  const i128 q = static_cast<i128>(composite);
  std::vector<i64> out(r1.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    i128 y = crt_combine(r1[i], q1, r2[i], q2);
    if (y > q / 2) y -= q;
    out[i] = static_cast<i64>(y);
  }
  return out;
}

RingElement reduce_mod_from_integers(const RingPtr& ring, std::vector<i64> c) {
  return reduce(UnreducedProduct{ring, std::move(c)});
}

}  // namespace

// ---------------------------------------------------------------- Domain

Domain Domain::prime_field(u64 q) {
  PrimeField field(q);  // validates
  return Domain(DomainKind::kPrimeField, q, 0);
}

Domain Domain::crt(u64 q1, u64 q2) {
  PrimeField f1(q1), f2(q2);
  if (q1 == q2) {
    throw Error(ErrorCode::kInvalidArgument, "CRT primes must be distinct");
  }
  if (static_cast<u128>(q1) * q2 >= (u128{1} << 62)) {
    throw Error(ErrorCode::kInvalidArgument, "CRT composite must be below 2^62");
  }
  return Domain(DomainKind::kCrt, q1, q2);
}

Domain Domain::parse(std::string_view spec) {
  auto to_u64 = [&](std::string_view s) -> u64 {
    try {
      std::size_t used = 0;
      u64 v = std::stoull(std::string(s), &used);
      if (used != s.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bad number in domain '" + std::string(spec) + "'");
    }
  };
  if (spec == "int" || spec == "integer") return integer();
  if (spec == "crt") return crt();
  if (spec.starts_with("fq:")) return prime_field(to_u64(spec.substr(3)));
  if (spec.starts_with("crt:")) {
    auto rest = spec.substr(4);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::kInvalidArgument, "expected crt:Q1:Q2");
    }
    return crt(to_u64(rest.substr(0, colon)), to_u64(rest.substr(colon + 1)));
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown domain '" + std::string(spec) +
                  "' (expected int, fq:Q, crt or crt:Q1:Q2)");
}

u64 Domain::modulus() const {
  switch (kind_) {
    case DomainKind::kInteger:
      return 0;
    case DomainKind::kPrimeField:
      return q1_;
    case DomainKind::kCrt:
      return q1_ * q2_;
  }
  return 0;
}

std::string Domain::to_string() const {
  switch (kind_) {
    case DomainKind::kInteger:
      return "int";
    case DomainKind::kPrimeField:
      return "fq:" + std::to_string(q1_);
    case DomainKind::kCrt:
      if (q1_ == 0) return "crt";
      return "crt:" + std::to_string(q1_) + ":" + std::to_string(q2_);
  }
  return "?";
}

// ---------------------------------------------------------- QuotientRing

namespace {

std::pair<u64, u64> lift_primes(std::size_t n) {
  auto primes = primes_congruent_one_below(4 * n, kLiftLimit, 2);
  if (primes.size() < 2) {
    throw Error(ErrorCode::kModulusUnsuitable,
                "no CRT primes below 2^31 for transform size " + std::to_string(n));
  }
  return {primes[0], primes[1]};
}

std::size_t transform_size(const Conductor& c) {
  if (c.degenerate()) {
    throw Error(ErrorCode::kInvalidConductor,
                "degenerate conductor (degree < 2): " + c.to_string());
  }
  return next_power_of_two(2 * c.m());
}

}  // namespace

QuotientRing::QuotientRing(const Conductor& c, const Domain& d)
    : conductor_(c),
      sparse_(sparse_v_form(c)),
      domain_(d),
      n_(transform_size(c)),
      lift_q1_(lift_primes(n_).first),
      lift_q2_(lift_primes(n_).second),
      lift1_(make_mod_plan(n_, PrimeField(lift_q1_))),
      lift2_(make_mod_plan(n_, PrimeField(lift_q2_))),
      real_(make_real_plan(n_)) {
  check_fold_targets(c);
  switch (d.kind()) {
    case DomainKind::kInteger:
      break;
    case DomainKind::kPrimeField: {
      mod_.emplace(d.modulus());
      if ((d.modulus() - 1) % (4 * n_) == 0) {
        mod_plan_.emplace(make_mod_plan(n_, PrimeField(d.modulus())));
      }
      break;
    }
    case DomainKind::kCrt: {
      if (d.q1() == 0) domain_ = Domain::crt(lift_q1_, lift_q2_);
      mod_.emplace(domain_.modulus());
      const u64 order = 4 * n_;
      if ((domain_.q1() - 1) % order == 0 && (domain_.q2() - 1) % order == 0) {
        mod_plan_.emplace(
            make_crt_plan(n_, make_crt_modulus(domain_.q1(), domain_.q2(), order)));
      }
      break;
    }
  }
}

RingPtr QuotientRing::create(const Conductor& c, const Domain& d) {
  return RingPtr(new QuotientRing(c, d));
}

RingPtr QuotientRing::get(const Conductor& c, const Domain& d) {
  using Key = std::tuple<u64, unsigned, unsigned, int, u64, u64>;
  static std::mutex mu;
  static std::map<Key, RingPtr> cache;
  Key key{c.p(), c.s(), c.r(), static_cast<int>(d.kind()), d.q1(), d.q2()};
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  RingPtr ring = create(c, d);
  cache.emplace(key, ring);
  return ring;
}

const MinimalPolynomial& QuotientRing::min_poly() const {
  std::call_once(mp_once_, [this] {
    mp_ = std::make_unique<MinimalPolynomial>(build_min_poly(conductor_));
  });
  return *mp_;
}

const std::vector<u64>& QuotientRing::psi_mod() const {
  std::call_once(psi_mod_once_, [this] {
    psi_mod_ = min_poly_power_mod(conductor_, modulus());
  });
  return psi_mod_;
}

const Modulus& QuotientRing::modulus() const {
  if (!mod_) {
    throw Error(ErrorCode::kDomainMismatch, "the integer domain has no modulus");
  }
  return *mod_;
}

// ----------------------------------------------------------- RingElement

RingElement::RingElement(RingPtr ring, std::vector<i64> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != ring_->degree()) {
    throw Error(ErrorCode::kSizeMismatch,
                "ring element needs " + std::to_string(ring_->degree()) +
                    " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

bool RingElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](i64 v) { return v == 0; });
}

VPoly RingElement::to_vpoly() const {
  std::vector<BigInt> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<long>(coeffs_[i]);
  return VPoly(std::move(v));
}

PowerPoly RingElement::to_power() const {
  if (ring_->domain().modular()) {
    std::vector<u64> v(coeffs_.begin(), coeffs_.end());
    auto pw = to_power_basis_mod(v, ring_->modulus());
    std::vector<BigInt> out(pw.size());
    for (std::size_t i = 0; i < pw.size(); ++i) {
      out[i] = static_cast<unsigned long>(pw[i]);
    }
    return PowerPoly(std::move(out));
  }
  PowerPoly out = to_power_basis(to_vpoly());
  out.resize(coeffs_.size());
  return out;
}

bool RingElement::operator==(const RingElement& o) const {
  return ring_->conductor() == o.ring_->conductor() &&
         ring_->domain() == o.ring_->domain() && coeffs_ == o.coeffs_;
}

RingElement make_element(const RingPtr& ring, std::vector<i64> v) {
  const std::size_t m = ring->degree();
  if (v.size() > m) {
    throw Error(ErrorCode::kDegreeTooLarge,
                "element has " + std::to_string(v.size()) +
                    " V-coefficients; the ring has degree " + std::to_string(m));
  }
  v.resize(m, 0);
  if (ring->domain().modular()) {
    const Modulus& mod = ring->modulus();
    for (auto& x : v) x = static_cast<i64>(mod.from_signed(x));
  }
  return RingElement(ring, std::move(v));
}

RingElement zero(const RingPtr& ring) { return make_element(ring, {}); }

RingElement one(const RingPtr& ring) { return make_element(ring, {1}); }

RingElement from_power(const RingPtr& ring, const PowerPoly& pw) {
  const std::size_t m = ring->degree();
  if (ring->domain().modular()) {
    const Modulus& mod = ring->modulus();
    BigInt q(static_cast<unsigned long>(mod.value())), r;
    std::vector<u64> c(pw.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      mpz_fdiv_r(r.get_mpz_t(), pw[i].get_mpz_t(), q.get_mpz_t());
      c[i] = r.get_ui();
    }
    const auto& psi = ring->psi_mod();
    auto rem = remainder_monic(ModCoeffs(mod), std::move(c), psi);
    auto v = to_v_basis_mod(rem, mod);
    return RingElement(ring, std::vector<i64>(v.begin(), v.end()));
  }
  std::vector<BigInt> c(pw.coeffs().begin(), pw.coeffs().end());
  auto rem = remainder_monic(IntegerCoeffs{}, std::move(c),
                             ring->min_poly().power.coeffs());
  auto v = power_to_v(IntegerCoeffs{}, std::span<const BigInt>(rem));
  std::vector<i64> out(m, 0);
  for (std::size_t i = 0; i < m; ++i) out[i] = narrow(v[i]);
  return RingElement(ring, std::move(out));
}

RingElement random_element(const RingPtr& ring, std::mt19937_64& rng, i64 bound) {
  std::vector<i64> v(ring->degree());
  if (ring->domain().modular()) {
    std::uniform_int_distribution<u64> dist(0, ring->modulus().value() - 1);
    for (auto& x : v) x = static_cast<i64>(dist(rng));
  } else {
    std::uniform_int_distribution<i64> dist(-bound, bound);
    for (auto& x : v) x = dist(rng);
  }
  return RingElement(ring, std::move(v));
}

RingElement add(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  std::vector<i64> out(a.coeffs().size());
  if (a.ring().domain().modular()) {
    const Modulus& mod = a.ring().modulus();
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = static_cast<i64>(mod.add(a[i], b[i]));
    }
  } else {
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = narrow(static_cast<i128>(a[i]) + b[i]);
    }
  }
  return RingElement(a.ring_ptr(), std::move(out));
}

RingElement neg(const RingElement& a) {
  std::vector<i64> out(a.coeffs().size());
  if (a.ring().domain().modular()) {
    const Modulus& mod = a.ring().modulus();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<i64>(mod.neg(a[i]));
  } else {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = narrow(-static_cast<i128>(a[i]));
  }
  return RingElement(a.ring_ptr(), std::move(out));
}

RingElement sub(const RingElement& a, const RingElement& b) { return add(a, neg(b)); }

// ------------------------------------------------------------ products

RingElement reduce(const UnreducedProduct& u, OpCount* ops) {
  const QuotientRing& ring = *u.ring;
  u64 adds = 0;
  std::vector<i64> out;
  if (ring.domain().modular()) {
    const Modulus& mod = ring.modulus();
    std::vector<u64> c(u.coeffs.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod.from_signed(u.coeffs[i]);
    adds = fold(c, ring.conductor(), ModOps{&mod});
    out.assign(c.begin(), c.end());
  } else {
    std::vector<i128> c(u.coeffs.begin(), u.coeffs.end());
    adds = fold(c, ring.conductor(), WideOps{});
    out.resize(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = narrow(c[i]);
  }
  if (ops) ops->additions += adds;
  return RingElement(u.ring, std::move(out));
}

UnreducedProduct mul_unreduced(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  const QuotientRing& ring = a.ring();
  const std::size_t m = ring.degree();
  if (ring.domain().kind() == DomainKind::kInteger) {
    auto c = exact_unreduced(ring, a.coeffs(), b.coeffs());
    if (!c) {
      throw Error(ErrorCode::kModulusUnsuitable,
                  "coefficient bound exceeds the CRT range q1*q2/2");
    }
    return {a.ring_ptr(), std::move(*c)};
  }
  const ModDctPlan* plan = ring.mod_plan();
  if (plan == nullptr) {
    throw Error(ErrorCode::kModulusUnsuitable,
                "modulus " + ring.domain().to_string() + " is not 1 mod 4N = " +
                    std::to_string(4 * ring.dct_size()));
  }
  const std::size_t n = ring.dct_size();
  std::vector<u64> fa(n, 0), fb(n, 0);
  std::copy(a.coeffs().begin(), a.coeffs().end(), fa.begin());
  std::copy(b.coeffs().begin(), b.coeffs().end(), fb.begin());
  auto c = modular_convolution(*plan, fa, fb, m);
  return {a.ring_ptr(), std::vector<i64>(c.begin(), c.end())};
}

RingElement mul_fast(const RingElement& a, const RingElement& b) {
  return reduce(mul_unreduced(a, b));
}

RingElement mul_fast_real(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  const QuotientRing& ring = a.ring();
  if (ring.domain().modular()) {
    throw Error(ErrorCode::kDomainMismatch,
                "the floating-point product is defined over the integers only");
  }
  const std::size_t n = ring.dct_size(), m = ring.degree();
  const RealDctPlan& plan = ring.real_plan();
  std::vector<double> fa(n, 0.0), fb(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    fa[i] = static_cast<double>(a[i]);
    fb[i] = static_cast<double>(b[i]);
  }
  auto ta = plan.dct3(fa);
  auto tb = plan.dct3(fb);
  for (std::size_t i = 0; i < n; ++i) ta[i] *= tb[i];
  auto c = plan.dct2(ta);
  const double scale = 4.0 / static_cast<double>(n);
  std::vector<i64> rounded(2 * m - 1);
  for (std::size_t i = 0; i < rounded.size(); ++i) {
    const double v = c[i] * scale;
    const double r = std::nearbyint(v);
    if (!(std::abs(v - r) < 0.25) || std::abs(r) >= 0x1p53) {
      throw Error(ErrorCode::kOverflow,
                  "floating-point product lost precision at index " +
                      std::to_string(i));
    }
    rounded[i] = static_cast<i64>(r);
  }
  return reduce(UnreducedProduct{a.ring_ptr(), std::move(rounded)});
}

RingElement mul_schoolbook(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  const QuotientRing& ring = a.ring();
  if (ring.domain().modular()) {
    const Modulus& mod = ring.modulus();
    ModCoeffs coeffs(mod);
    std::vector<u64> va(a.coeffs().begin(), a.coeffs().end());
    std::vector<u64> vb(b.coeffs().begin(), b.coeffs().end());
    auto pa = to_power_basis_mod(va, mod);
    auto pb = to_power_basis_mod(vb, mod);
    auto prod = power_multiply(coeffs, std::span<const u64>(pa), std::span<const u64>(pb));
    auto rem = remainder_monic(coeffs, std::move(prod), ring.psi_mod());
    auto v = to_v_basis_mod(rem, mod);
    return RingElement(a.ring_ptr(), std::vector<i64>(v.begin(), v.end()));
  }
  IntegerCoeffs coeffs;
  auto pa = to_power_basis(a.to_vpoly());
  auto pb = to_power_basis(b.to_vpoly());
  auto prod = power_multiply(coeffs, pa.coeffs(), pb.coeffs());
  auto rem = remainder_monic(coeffs, std::move(prod), ring.min_poly().power.coeffs());
  auto v = power_to_v(coeffs, std::span<const BigInt>(rem));
  std::vector<i64> out(ring.degree(), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = narrow(v[i]);
  return RingElement(a.ring_ptr(), std::move(out));
}

RingElement mul(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  const QuotientRing& ring = a.ring();
  if (ring.domain().kind() == DomainKind::kInteger) {
    if (auto c = exact_unreduced(ring, a.coeffs(), b.coeffs())) {
      return reduce(UnreducedProduct{a.ring_ptr(), std::move(*c)});
    }
    return mul_schoolbook(a, b);
  }
  if (ring.has_fast_plan()) return mul_fast(a, b);
  // Unsuitable modulus: multiply the centered lifts exactly, then reduce.
  const Modulus& mod = ring.modulus();
  std::vector<i64> la(a.coeffs().size()), lb(b.coeffs().size());
  for (std::size_t i = 0; i < la.size(); ++i) {
    la[i] = mod.centered(static_cast<u64>(a[i]));
    lb[i] = mod.centered(static_cast<u64>(b[i]));
  }
  if (auto c = exact_unreduced(ring, la, lb)) {
    return reduce_mod_from_integers(a.ring_ptr(), std::move(*c));
  }
  return mul_schoolbook(a, b);
}

// --------------------------------------------------------------- bench

Conductor conductor_with_degree(std::size_t m) {
  if (m >= 2 && is_power_of_two(m)) {
    unsigned r = 1;
    while ((std::size_t{1} << (r - 1)) < m) ++r;
    return Conductor::create(3, 1, r);
  }
  for (const Conductor& c : enumerate_conductors(6 * m + 6)) {
    if (c.m() == m) return c;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "no conductor 2^r p^s has degree " + std::to_string(m));
}

BenchRow bench_mul(const Conductor& c, int reps, u64 seed, std::size_t schoolbook_max) {
  using Clock = std::chrono::steady_clock;
  const std::size_t n = next_power_of_two(2 * c.m());
  const u64 q = primes_congruent_one_below(4 * n, kLiftLimit, 1).at(0);
  RingPtr ring = QuotientRing::get(c, Domain::prime_field(q));
  std::mt19937_64 rng(seed);
  RingElement a = random_element(ring, rng), b = random_element(ring, rng);
  reps = std::max(reps, 1);

  auto median_ns = [&](auto&& fn, int count) {
    std::vector<double> samples;
    for (int i = 0; i < count; ++i) {
      auto t0 = Clock::now();
      fn();
      samples.push_back(std::chrono::duration<double, std::nano>(Clock::now() - t0).count());
    }
    std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
    return samples[samples.size() / 2];
  };

  BenchRow row;
  row.m = c.m();
  row.n = c.n();
  volatile i64 sink = 0;
  row.ns_fast = median_ns([&] { sink = sink + mul_fast(a, b)[0]; }, reps);
  OpCount ops;
  reduce(mul_unreduced(a, b), &ops);
  row.additions_in_reduce = ops.additions;
  if (c.m() <= schoolbook_max) {
    ring->psi_mod();  // exclude the one-off power form from the timing
    row.ns_schoolbook =
        median_ns([&] { sink = sink + mul_schoolbook(a, b)[0]; }, std::min(reps, 3));
  } else {
    row.ns_schoolbook = -1.0;
  }
  return row;
}

}  // namespace realcyclo
