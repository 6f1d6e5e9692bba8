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

// PLWE sampling over (Z/qZ)[x]/(Psi_n) and the root-based attack audit:
// roots of Psi_n in F_q, divisors of the form x^k + a, the
// evaluation-at-root distinguisher and the vulnerability campaign.

#ifndef REALCYCLO_ATTACKS_H_
#define REALCYCLO_ATTACKS_H_

#include <array>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "realcyclo/finitefield.h"
#include "realcyclo/minpoly.h"
#include "realcyclo/ring.h"

namespace realcyclo {

struct PlweParams {
  Conductor conductor;
  u64 q = 0;
  double sigma = 0.0;

  // Throws InvalidArgument unless q is an odd prime and sigma > 0.
  void validate() const;
  RingPtr ring() const;
};

struct PlweSample {
  RingElement a;
  RingElement b;
};

// Below this sigma the error term is identically zero.
inline constexpr double kZeroSigma = 1e-9;

// Centered discrete Gaussian on [-ceil(6 sigma), ceil(6 sigma)] by
// rejection against exp(-z^2 / (2 sigma^2)).
class DiscreteGaussian {
 public:
  explicit DiscreteGaussian(double sigma);
  i64 operator()(std::mt19937_64& rng) const;
  i64 tail() const { return tail_; }

 private:
  double sigma_;
  i64 tail_;
};

// a uniform in the power basis, b = a s + e with power-basis error
// coefficients from DiscreteGaussian(sigma).
std::vector<PlweSample> sample_plwe(const PlweParams& params, const RingElement& s,
                                    std::size_t count, u64 seed);

// Uniform (a, b) pairs over the same ring, for distinguisher baselines.
std::vector<PlweSample> sample_uniform(const PlweParams& params, std::size_t count,
                                       u64 seed);

struct RootInfo {
  u64 alpha = 0;
  u64 order = 0;
  bool operator==(const RootInfo&) const = default;
};

struct KIdealFactor {
  unsigned k = 0;
  u64 a = 0;
  u64 order = 0;  // multiplicative order of -a; 0 when a = 0
  bool operator==(const KIdealFactor&) const = default;
};

// All roots of the monic power-form polynomial f (coefficients mod q,
// ascending) in F_q^*, by Horner evaluation at every point; sorted by
// order, then alpha.
std::vector<RootInfo> find_roots(std::span<const u64> f, const PrimeField& field);
std::vector<RootInfo> find_roots(const MinimalPolynomial& psi, const PrimeField& field);

// Every (k, a) with 2 <= k <= k_max and (x^k + a) | f over F_q. Writing
// f = sum_r x^r g_r(x^k), x^k + a divides f exactly when every g_r
// vanishes at -a. Throws InvalidK unless 2 <= k_max <= 4 and k_max <= deg f.
std::vector<KIdealFactor> find_k_ideal_factors(std::span<const u64> f,
                                               const PrimeField& field,
                                               unsigned k_max);
std::vector<KIdealFactor> find_k_ideal_factors(const MinimalPolynomial& psi,
                                               const PrimeField& field,
                                               unsigned k_max);

// Schoolbook long division of f by x^k + a; true iff the remainder is zero.
bool binomial_divides(std::span<const u64> f, unsigned k, u64 a, const Modulus& mod);

// Horner evaluation of an ascending coefficient vector.
u64 eval_poly_mod(std::span<const u64> f, u64 x, const Modulus& mod);

enum class Verdict { kPlwe, kUniform, kInconclusive };
std::string_view verdict_name(Verdict v);

struct DistinguisherResult {
  Verdict verdict = Verdict::kInconclusive;
  std::size_t passing_guesses = 0;
  double tau = 0.0;
};

// Evaluates each sample at alpha and counts guesses g of s(alpha) for
// which every b_i(alpha) - g a_i(alpha) has centered size <= 6 sigma
// sqrt(m). Throws NotARoot if Psi_n(alpha) != 0 mod q.
DistinguisherResult distinguish(std::span<const PlweSample> samples, u64 alpha,
                                u64 order, double sigma);
inline Verdict distinguisher(std::span<const PlweSample> samples, u64 alpha,
                             u64 order, double sigma) {
  return distinguish(samples, alpha, order, sigma).verdict;
}

// Phi_n in the power basis, ascending, by products and exact quotients of
// x^d - 1 over the divisors d of n.
std::vector<i64> cyclotomic_poly(u64 n);

struct ScanConfig {
  unsigned k_max = 4;
  u64 small_order = 5;      // roots / factors with order < this are flagged
  u64 small_set_order = 2;  // order <= this counts for the small-set rows
};

enum class PolyFamily { kMaxReal, kCyclotomic };

struct ScanReport {
  Conductor conductor;
  PolyFamily family = PolyFamily::kMaxReal;
  u64 q = 0;
  std::size_t degree = 0;
  std::vector<RootInfo> roots;
  std::optional<u64> smallest_root_order;
  std::vector<KIdealFactor> k_ideal;
  std::optional<u64> smallest_kideal_order;
};

// The scanned polynomial: Psi_n, or Phi_{n/2} (same degree when r >= 2).
std::vector<u64> family_poly_mod(const Conductor& c, PolyFamily family,
                                 const Modulus& mod);

// Roots and k-ideal factors of one (polynomial, q) pair. Every hit is
// re-verified (Psi(alpha) = 0 and exact order; zero remainder by long
// division); a failed check throws Error(kInvalidArgument).
ScanReport scan(const Conductor& c, u64 q, const ScanConfig& cfg = {},
                PolyFamily family = PolyFamily::kMaxReal);

enum class Preset { kMlKem, kMlDsa, kFnDsa512, kFnDsa1024 };
Preset parse_preset(std::string_view name);
std::string_view preset_name(Preset p);
struct PresetSpec {
  Conductor conductor;
  u64 q;
};
PresetSpec preset_spec(Preset p);
ScanReport preset_check(Preset p, const ScanConfig& cfg = {});

struct CampaignConfig {
  u64 qmin = 2048;
  u64 qmax = 4192;
  std::size_t sample = 0;  // 0: every prime in range
  u64 seed = 1;
  std::vector<double> sigmas = {2, 3, 4, 5, 6, 7};
  ScanConfig scan;
  PolyFamily family = PolyFamily::kMaxReal;
};

// Table 1 rows.
enum class AttackRow { kSmallSetRoots, kSmallErrorRoots, kSmallSetKIdeal, kSmallErrorKIdeal };
inline constexpr int kAttackRows = 4;
std::string_view attack_row_name(AttackRow r);

struct CampaignSummary {
  std::vector<Conductor> conductors;
  std::vector<u64> primes;
  std::vector<double> sigmas;
  std::size_t pair_count = 0;
  std::size_t instance_count = 0;  // pairs * sigmas
  // Pairs flagged (roots rows) or (pair, k) flagged (k-ideal rows). The
  // criteria do not depend on sigma, so each sigma column repeats it.
  std::array<std::size_t, kAttackRows> counts{};
  std::array<std::size_t, kAttackRows> denominators{};
  std::vector<ScanReport> reports;     // every pair, in (conductor, q) order
  std::vector<std::size_t> vulnerable; // indices into reports
  std::vector<std::string> failures;    // pairs whose scan threw

  double ratio(AttackRow r) const;
};

// S = {(p, s, r): 5 <= p <= 50 prime, 2 <= r <= 9, 1 <= s <= 3,
// 256 <= m <= 512}, sorted by n.
std::vector<Conductor> campaign_conductors();

// Primes in [qmin, qmax]; with sample > 0, that many drawn without
// replacement by a seeded partial Fisher-Yates shuffle, then sorted.
std::vector<u64> campaign_primes(const CampaignConfig& cfg);

CampaignSummary run_campaign(const CampaignConfig& cfg);

// {conductor:{p,s,r,n,degree}, q, roots:[{alpha,order}], k_ideal:[{k,a,order}]}
std::string scan_report_json(const ScanReport& r);
std::string campaign_json(const CampaignSummary& s, const CampaignConfig& cfg);
// Four rows by one column per sigma.
std::string campaign_csv(const CampaignSummary& s);

}  // namespace realcyclo

#endif  // REALCYCLO_ATTACKS_H_
