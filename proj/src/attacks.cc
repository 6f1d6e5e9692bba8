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

#include "realcyclo/attacks.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <utility>

#include "json.hpp"
#include "realcyclo/basis.h"
#include "realcyclo/error.h"
#include "realcyclo/parallel.h"

namespace realcyclo {
namespace {

using json = nlohmann::ordered_json;

// Unbiased draw from [0, n).
u64 uniform_below(std::mt19937_64& rng, u64 n) {
  const u64 limit = std::numeric_limits<u64>::max() -
                    std::numeric_limits<u64>::max() % n;
  u64 x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

constexpr std::size_t kLanes = 8;

// Evaluates f at x, x+1, ..., x+count-1 (count <= kLanes). The lanes are
// independent Horner chains, which keeps the multiplier busy.
void horner_lanes(std::span<const u64> f, u64 x, std::size_t count,
                  const Modulus& mod, u64* out) {
  u64 pt[kLanes], acc[kLanes];
  for (std::size_t l = 0; l < kLanes; ++l) {
    pt[l] = l < count ? x + l : 0;
    acc[l] = 0;
  }
  for (std::size_t i = f.size(); i-- > 0;) {
    const u64 c = f[i];
    for (std::size_t l = 0; l < kLanes; ++l) acc[l] = mod.add(mod.mul(acc[l], pt[l]), c);
  }
  std::copy(acc, acc + count, out);
}

// Calls hit(x) for every x in [from, q) with f(x) = 0.
template <class Hit>
void for_each_zero(std::span<const u64> f, u64 from, const Modulus& mod, Hit&& hit) {
  const u64 q = mod.value();
  u64 vals[kLanes];
  for (u64 x = from; x < q; x += kLanes) {
    const std::size_t count = static_cast<std::size_t>(std::min<u64>(kLanes, q - x));
    horner_lanes(f, x, count, mod, vals);
    for (std::size_t l = 0; l < count; ++l) {
      if (vals[l] == 0) hit(x + l);
    }
  }
}

std::vector<u64> to_residues(const std::vector<i64>& v, const Modulus& mod) {
  std::vector<u64> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = mod.from_signed(v[i]);
  return out;
}

RingElement element_from_power_mod(const RingPtr& ring, const std::vector<u64>& pw,
                                   const Modulus& mod) {
  std::vector<u64> v = to_v_basis_mod(pw, mod);
  return make_element(ring, std::vector<i64>(v.begin(), v.end()));
}

std::vector<u64> uniform_power(std::size_t m, const Modulus& mod, std::mt19937_64& rng) {
  std::vector<u64> out(m);
  for (auto& c : out) c = uniform_below(rng, mod.value());
  return out;
}

int mobius(u64 n) {
  int mu = 1;
  for (auto [prime, exp] : factorize(n)) {
    if (exp > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::optional<u64> min_order(auto begin, auto end) {
  std::optional<u64> best;
  for (auto it = begin; it != end; ++it) {
    if (it->order == 0) continue;
    if (!best || it->order < *best) best = it->order;
  }
  return best;
}

}  // namespace

void PlweParams::validate() const {
  if (q < 3 || !is_prime_u64(q)) {
    throw Error(ErrorCode::kInvalidArgument, "PLWE modulus must be an odd prime");
  }
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw Error(ErrorCode::kInvalidArgument, "sigma must be positive");
  }
}

RingPtr PlweParams::ring() const {
  validate();
  return QuotientRing::get(conductor, Domain::prime_field(q));
}

DiscreteGaussian::DiscreteGaussian(double sigma)
    : sigma_(sigma),
      tail_(sigma < kZeroSigma ? 0 : static_cast<i64>(std::ceil(6.0 * sigma))) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw Error(ErrorCode::kInvalidArgument, "sigma must be positive");
  }
}

i64 DiscreteGaussian::operator()(std::mt19937_64& rng) const {
  if (tail_ == 0) return 0;
  const u64 width = static_cast<u64>(2 * tail_ + 1);
  const double scale = -0.5 / (sigma_ * sigma_);
  for (;;) {
    const i64 z = static_cast<i64>(uniform_below(rng, width)) - tail_;
    if (uniform01(rng) < std::exp(scale * static_cast<double>(z * z))) return z;
  }
}

std::vector<PlweSample> sample_plwe(const PlweParams& params, const RingElement& s,
                                    std::size_t count, u64 seed) {
  const RingPtr ring = params.ring();
  if (!(s.ring().conductor() == params.conductor) ||
      !(s.ring().domain() == ring->domain())) {
    throw Error(ErrorCode::kDomainMismatch, "secret is not in the PLWE ring");
  }
  const Modulus& mod = ring->modulus();
  const std::size_t m = ring->degree();
  const DiscreteGaussian chi(params.sigma);
  std::mt19937_64 rng(seed);
  std::vector<PlweSample> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    RingElement a = element_from_power_mod(ring, uniform_power(m, mod, rng), mod);
    std::vector<u64> e(m);
    for (auto& c : e) c = mod.from_signed(chi(rng));
    RingElement b = add(mul(a, s), element_from_power_mod(ring, e, mod));
    out.push_back({std::move(a), std::move(b)});
  }
  return out;
}

std::vector<PlweSample> sample_uniform(const PlweParams& params, std::size_t count,
                                       u64 seed) {
  const RingPtr ring = params.ring();
  const Modulus& mod = ring->modulus();
  const std::size_t m = ring->degree();
  std::mt19937_64 rng(seed);
  std::vector<PlweSample> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    RingElement a = element_from_power_mod(ring, uniform_power(m, mod, rng), mod);
    RingElement b = element_from_power_mod(ring, uniform_power(m, mod, rng), mod);
    out.push_back({std::move(a), std::move(b)});
  }
  return out;
}

u64 eval_poly_mod(std::span<const u64> f, u64 x, const Modulus& mod) {
  u64 acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = mod.add(mod.mul(acc, x), f[i]);
  return acc;
}

std::vector<RootInfo> find_roots(std::span<const u64> f, const PrimeField& field) {
  if (field.q() < 3) throw Error(ErrorCode::kInvalidArgument, "q must be > 2");
  std::vector<RootInfo> roots;
  for_each_zero(f, 1, field.modulus(), [&](u64 x) {
    roots.push_back({x, mul_order(x, field)});
  });
  std::sort(roots.begin(), roots.end(), [](const RootInfo& a, const RootInfo& b) {
    return std::pair(a.order, a.alpha) < std::pair(b.order, b.alpha);
  });
  return roots;
}

std::vector<RootInfo> find_roots(const MinimalPolynomial& psi, const PrimeField& field) {
  return find_roots(psi.power_mod(field.modulus()), field);
}

std::vector<KIdealFactor> find_k_ideal_factors(std::span<const u64> f,
                                               const PrimeField& field,
                                               unsigned k_max) {
  const std::size_t deg = f.size() - 1;
  if (k_max < 2 || k_max > 4 || k_max > deg) {
    throw Error(ErrorCode::kInvalidK,
                "k_max must lie in [2, min(4, deg)], got " + std::to_string(k_max));
  }
  const Modulus& mod = field.modulus();
  std::vector<KIdealFactor> out;
  for (unsigned k = 2; k <= k_max; ++k) {
    // g[r][t] = f[t k + r]
    std::vector<std::vector<u64>> g(k);
    for (std::size_t i = 0; i <= deg; ++i) g[i % k].push_back(f[i]);
    for_each_zero(g[0], 0, mod, [&](u64 y) {
      for (unsigned r = 1; r < k; ++r) {
        if (eval_poly_mod(g[r], y, mod) != 0) return;
      }
      out.push_back({k, mod.neg(y), y == 0 ? 0 : mul_order(y, field)});
    });
  }
  std::sort(out.begin(), out.end(), [](const KIdealFactor& a, const KIdealFactor& b) {
    return std::pair(a.k, a.a) < std::pair(b.k, b.a);
  });
  return out;
}

std::vector<KIdealFactor> find_k_ideal_factors(const MinimalPolynomial& psi,
                                               const PrimeField& field,
                                               unsigned k_max) {
  return find_k_ideal_factors(psi.power_mod(field.modulus()), field, k_max);
}

bool binomial_divides(std::span<const u64> f, unsigned k, u64 a, const Modulus& mod) {
  if (k == 0 || f.size() <= k) return false;
  std::vector<u64> rem(f.begin(), f.end());
  // x^k = (x^k + a) - a: each leading term t x^i leaves -a t x^(i-k).
  for (std::size_t i = rem.size(); i-- > k;) {
    const u64 t = rem[i];
    rem[i] = 0;
    rem[i - k] = mod.sub(rem[i - k], mod.mul(t, a));
  }
  return std::all_of(rem.begin(), rem.begin() + k, [](u64 c) { return c == 0; });
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPlwe:
      return "plwe";
    case Verdict::kUniform:
      return "uniform";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

DistinguisherResult distinguish(std::span<const PlweSample> samples, u64 alpha,
                                u64 order, double sigma) {
  if (samples.empty()) throw Error(ErrorCode::kInvalidArgument, "no samples");
  const QuotientRing& ring = samples[0].a.ring();
  for (const auto& s : samples) {
    if (&s.a.ring() != &ring || &s.b.ring() != &ring) {
      throw Error(ErrorCode::kDomainMismatch, "samples do not share a ring");
    }
  }
  if (ring.domain().kind() != DomainKind::kPrimeField) {
    throw Error(ErrorCode::kDomainMismatch, "samples must live over a prime field");
  }
  const Modulus& mod = ring.modulus();
  const u64 q = mod.value();
  alpha %= q;
  if (eval_poly_mod(ring.psi_mod(), alpha, mod) != 0) {
    throw Error(ErrorCode::kNotARoot,
                std::to_string(alpha) + " is not a root of Psi mod " + std::to_string(q));
  }
  const std::size_t m = ring.degree();

  // V_j(alpha), from V_0 = 1, V_1 = x, V_2 = x^2 - 2, V_{j+1} = x V_j - V_{j-1}.
  std::vector<u64> v(m);
  v[0] = 1;
  if (m > 1) v[1] = alpha;
  for (std::size_t j = 1; j + 1 < m; ++j) {
    const u64 prev = j == 1 ? mod.add(v[0], v[0]) : v[j - 1];
    v[j + 1] = mod.sub(mod.mul(alpha, v[j]), prev);
  }
  auto evaluate = [&](const RingElement& e) {
    u64 acc = 0;
    for (std::size_t j = 0; j < m; ++j) {
      acc = mod.add(acc, mod.mul(static_cast<u64>(e[j]), v[j]));
    }
    return acc;
  };
  std::vector<u64> av(samples.size()), bv(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    av[i] = evaluate(samples[i].a);
    bv[i] = evaluate(samples[i].b);
  }

  DistinguisherResult res;
  res.tau = 6.0 * sigma * std::sqrt(static_cast<double>(m));
  if (res.tau >= static_cast<double>(q) / 2.0) {
    res.passing_guesses = q;
  } else {
    const i64 tau = static_cast<i64>(std::floor(res.tau));
    for (u64 g = 0; g < q; ++g) {
      bool pass = true;
      for (std::size_t i = 0; i < samples.size() && pass; ++i) {
        const i64 r = mod.centered(mod.sub(bv[i], mod.mul(g, av[i])));
        pass = r <= tau && r >= -tau;
      }
      if (pass) ++res.passing_guesses;
    }
  }
  if (res.passing_guesses == 0) {
    res.verdict = Verdict::kUniform;
  } else if (res.passing_guesses <= order) {
    res.verdict = Verdict::kPlwe;
  } else {
    res.verdict = Verdict::kInconclusive;
  }
  return res;
}

std::vector<i64> cyclotomic_poly(u64 n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "Phi_0 is undefined");
  std::vector<u64> up, down;
  for (u64 d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = mobius(n / d);
    if (mu > 0) up.push_back(d);
    if (mu < 0) down.push_back(d);
  }
  std::vector<i64> p{1};
  for (u64 d : up) {
    // p (x^d - 1)
    std::vector<i64> next(p.size() + d, 0);
    for (std::size_t i = 0; i < next.size(); ++i) {
      if (i >= d) next[i] += p[i - d];
      if (i < p.size()) next[i] -= p[i];
    }
    p = std::move(next);
  }
  for (u64 d : down) {
    // p = quot (x^d - 1), so quot[i] = quot[i - d] - p[i].
    std::vector<i64> quot(p.size() - d, 0);
    for (std::size_t i = 0; i < quot.size(); ++i) {
      quot[i] = (i >= d ? quot[i - d] : 0) - p[i];
    }
    p = std::move(quot);
  }
  return p;
}

std::vector<u64> family_poly_mod(const Conductor& c, PolyFamily family,
                                 const Modulus& mod) {
  if (family == PolyFamily::kMaxReal) return min_poly_power_mod(c, mod);
  if (c.r() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "the matching cyclotomic polynomial needs r >= 2");
  }
  return to_residues(cyclotomic_poly(c.n() / 2), mod);
}

ScanReport scan(const Conductor& c, u64 q, const ScanConfig& cfg, PolyFamily family) {
  const PrimeField field(q);
  if (q < 3) throw Error(ErrorCode::kInvalidArgument, "q must be > 2");
  const Modulus& mod = field.modulus();
  const std::vector<u64> f = family_poly_mod(c, family, mod);

  ScanReport rep{c, family, q, f.size() - 1, {}, std::nullopt, {}, std::nullopt};
  rep.roots = find_roots(f, field);
  const unsigned k_max = std::min<unsigned>(cfg.k_max, static_cast<unsigned>(rep.degree));
  if (k_max >= 2) rep.k_ideal = find_k_ideal_factors(f, field, k_max);

  for (const auto& r : rep.roots) {
    if (eval_poly_mod(f, r.alpha, mod) != 0 || !has_exact_order(r.alpha, r.order, mod)) {
      throw Error(ErrorCode::kInvalidArgument, "root check failed at " + std::to_string(r.alpha));
    }
  }
  for (const auto& kf : rep.k_ideal) {
    if (!binomial_divides(f, kf.k, kf.a, mod)) {
      throw Error(ErrorCode::kInvalidArgument, "factor check failed for x^" +
                                                   std::to_string(kf.k) + " + " +
                                                   std::to_string(kf.a));
    }
  }
  rep.smallest_root_order = min_order(rep.roots.begin(), rep.roots.end());
  rep.smallest_kideal_order = min_order(rep.k_ideal.begin(), rep.k_ideal.end());
  return rep;
}

Preset parse_preset(std::string_view name) {
  if (name == "ml-kem") return Preset::kMlKem;
  if (name == "ml-dsa") return Preset::kMlDsa;
  if (name == "fn-dsa-512") return Preset::kFnDsa512;
  if (name == "fn-dsa-1024") return Preset::kFnDsa1024;
  throw Error(ErrorCode::kInvalidArgument, "unknown preset: " + std::string(name));
}

std::string_view preset_name(Preset p) {
  switch (p) {
    case Preset::kMlKem:
      return "ml-kem";
    case Preset::kMlDsa:
      return "ml-dsa";
    case Preset::kFnDsa512:
      return "fn-dsa-512";
    case Preset::kFnDsa1024:
      return "fn-dsa-1024";
  }
  return "";
}

PresetSpec preset_spec(Preset p) {
  switch (p) {
    case Preset::kMlKem:
      return {Conductor::create(5, 1, 8), 3329};
    case Preset::kMlDsa:
      return {Conductor::create(5, 1, 8), 8380417};
    case Preset::kFnDsa512:
      return {Conductor::create(5, 1, 9), 12289};
    case Preset::kFnDsa1024:
      return {Conductor::create(5, 1, 10), 12289};
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown preset");
}

ScanReport preset_check(Preset p, const ScanConfig& cfg) {
  const PresetSpec spec = preset_spec(p);
  return scan(spec.conductor, spec.q, cfg);
}

std::string_view attack_row_name(AttackRow r) {
  switch (r) {
    case AttackRow::kSmallSetRoots:
      return "Small set (roots)";
    case AttackRow::kSmallErrorRoots:
      return "Small error (roots)";
    case AttackRow::kSmallSetKIdeal:
      return "Small set (k-ideal)";
    case AttackRow::kSmallErrorKIdeal:
      return "Small error (k-ideal)";
  }
  return "";
}

double CampaignSummary::ratio(AttackRow r) const {
  const auto i = static_cast<std::size_t>(r);
  return denominators[i] == 0 ? 0.0
                              : static_cast<double>(counts[i]) /
                                    static_cast<double>(denominators[i]);
}

std::vector<Conductor> campaign_conductors() {
  std::vector<Conductor> out;
  for (u64 p = 5; p <= 50; ++p) {
    if (!is_prime_u64(p)) continue;
    for (unsigned s = 1; s <= 3; ++s) {
      for (unsigned r = 2; r <= 9; ++r) {
        // m = (p - 1) p^(s-1) 2^(r-2)
        u64 m = (p - 1) << (r - 2);
        for (unsigned i = 1; i < s; ++i) m *= p;
        if (m >= 256 && m <= 512) out.push_back(Conductor::create(p, s, r));
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Conductor& a, const Conductor& b) { return a.n() < b.n(); });
  return out;
}

std::vector<u64> campaign_primes(const CampaignConfig& cfg) {
  if (cfg.qmin > cfg.qmax) throw Error(ErrorCode::kInvalidArgument, "qmin > qmax");
  std::vector<u64> primes;
  for (u64 q = std::max<u64>(cfg.qmin, 3); q <= cfg.qmax; ++q) {
    if (is_prime_u64(q)) primes.push_back(q);
  }
  if (cfg.sample == 0 || cfg.sample >= primes.size()) return primes;
  std::mt19937_64 rng(cfg.seed);
  for (std::size_t i = 0; i < cfg.sample; ++i) {
    std::swap(primes[i], primes[i + uniform_below(rng, primes.size() - i)]);
  }
  primes.resize(cfg.sample);
  std::sort(primes.begin(), primes.end());
  return primes;
}

CampaignSummary run_campaign(const CampaignConfig& cfg) {
  CampaignSummary sum;
  sum.conductors = campaign_conductors();
  sum.primes = campaign_primes(cfg);
  sum.sigmas = cfg.sigmas;
  const std::size_t pairs = sum.conductors.size() * sum.primes.size();

  std::vector<std::optional<ScanReport>> slots(pairs);
  std::vector<std::string> errors(pairs);
  parallel_for(pairs, [&](std::size_t t) {
    const Conductor& c = sum.conductors[t / sum.primes.size()];
    const u64 q = sum.primes[t % sum.primes.size()];
    try {
      slots[t] = scan(c, q, cfg.scan, cfg.family);
    } catch (const std::exception& e) {
      errors[t] = c.to_string() + " q=" + std::to_string(q) + ": " + e.what();
    }
  });

  const unsigned kinds = cfg.scan.k_max >= 2 ? cfg.scan.k_max - 1 : 0;
  for (std::size_t t = 0; t < pairs; ++t) {
    if (!slots[t]) {
      sum.failures.push_back(std::move(errors[t]));
      continue;
    }
    ScanReport& rep = *slots[t];
    std::array<std::size_t, kAttackRows> hits{};
    auto flag = [&](AttackRow row) { ++hits[static_cast<std::size_t>(row)]; };
    auto small_set = [&](u64 ord) { return ord >= 1 && ord <= cfg.scan.small_set_order; };
    auto small = [&](u64 ord) { return ord >= 1 && ord < cfg.scan.small_order; };
    if (rep.smallest_root_order) {
      if (small_set(*rep.smallest_root_order)) flag(AttackRow::kSmallSetRoots);
      if (small(*rep.smallest_root_order)) flag(AttackRow::kSmallErrorRoots);
    }
    for (unsigned k = 2; k <= cfg.scan.k_max; ++k) {
      std::optional<u64> best;
      for (const auto& f : rep.k_ideal) {
        if (f.k == k && f.order != 0 && (!best || f.order < *best)) best = f.order;
      }
      if (!best) continue;
      if (small_set(*best)) flag(AttackRow::kSmallSetKIdeal);
      if (small(*best)) flag(AttackRow::kSmallErrorKIdeal);
    }
    bool any = false;
    for (int i = 0; i < kAttackRows; ++i) {
      sum.counts[i] += hits[i];
      any = any || hits[i] > 0;
    }
    if (any) sum.vulnerable.push_back(sum.reports.size());
    sum.reports.push_back(std::move(rep));
  }
  sum.pair_count = sum.reports.size();
  sum.instance_count = sum.pair_count * sum.sigmas.size();
  sum.denominators = {sum.pair_count, sum.pair_count, sum.pair_count * kinds,
                      sum.pair_count * kinds};
  return sum;
}

namespace {

json report_to_json(const ScanReport& r) {
  json j;
  j["conductor"] = {{"p", r.conductor.p()},
                    {"s", r.conductor.s()},
                    {"r", r.conductor.r()},
                    {"n", r.conductor.n()},
                    {"degree", r.degree}};
  j["family"] = r.family == PolyFamily::kMaxReal ? "max-real" : "cyclotomic";
  j["q"] = r.q;
  j["roots"] = json::array();
  for (const auto& x : r.roots) j["roots"].push_back({{"alpha", x.alpha}, {"order", x.order}});
  j["k_ideal"] = json::array();
  for (const auto& f : r.k_ideal) {
    j["k_ideal"].push_back({{"k", f.k}, {"a", f.a}, {"order", f.order}});
  }
  j["smallest_root_order"] =
      r.smallest_root_order ? json(*r.smallest_root_order) : json(nullptr);
  j["smallest_kideal_order"] =
      r.smallest_kideal_order ? json(*r.smallest_kideal_order) : json(nullptr);
  return j;
}

}  // namespace

std::string scan_report_json(const ScanReport& r) { return report_to_json(r).dump(); }

std::string campaign_json(const CampaignSummary& s, const CampaignConfig& cfg) {
  json j;
  j["config"] = {{"qmin", cfg.qmin},
                 {"qmax", cfg.qmax},
                 {"sample", cfg.sample},
                 {"seed", cfg.seed},
                 {"k_max", cfg.scan.k_max},
                 {"small_order_below", cfg.scan.small_order},
                 {"small_set_order_at_most", cfg.scan.small_set_order},
                 {"family", cfg.family == PolyFamily::kMaxReal ? "max-real" : "cyclotomic"}};
  j["conductor_count"] = s.conductors.size();
  j["primes"] = s.primes;
  j["sigmas"] = s.sigmas;
  j["pair_count"] = s.pair_count;
  j["instance_count"] = s.instance_count;
  j["rows"] = json::array();
  for (int i = 0; i < kAttackRows; ++i) {
    const auto row = static_cast<AttackRow>(i);
    j["rows"].push_back({{"attack", attack_row_name(row)},
                         {"count", s.counts[i]},
                         {"denominator", s.denominators[i]},
                         {"ratio", s.ratio(row)}});
  }
  j["vulnerable"] = json::array();
  for (std::size_t idx : s.vulnerable) j["vulnerable"].push_back(report_to_json(s.reports[idx]));
  j["failures"] = s.failures;
  return j.dump(2);
}

std::string campaign_csv(const CampaignSummary& s) {
  std::string out = "attack";
  char buf[64];
  for (double sigma : s.sigmas) {
    std::snprintf(buf, sizeof buf, ",sigma=%g", sigma);
    out += buf;
  }
  out += '\n';
  for (int i = 0; i < kAttackRows; ++i) {
    const auto row = static_cast<AttackRow>(i);
    out += attack_row_name(row);
    for (std::size_t k = 0; k < s.sigmas.size(); ++k) {
      std::snprintf(buf, sizeof buf, ",%.6f", s.ratio(row));
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace realcyclo
