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

// Acceptance suite. Prints one PASS/FAIL line per criterion; `--criterion N`
// runs a single one. Exit status is nonzero if any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "realcyclo/attacks.h"
#include "realcyclo/dct.h"
#include "realcyclo/embedding.h"
#include "realcyclo/minpoly.h"
#include "realcyclo/parallel.h"
#include "realcyclo/ring.h"

namespace realcyclo {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// 1. Minimal polynomials for n <= 2000: exact rounded root product and
// degree phi(n)/2, in under 30 s.
Outcome minimal_polynomials() {
  Stopwatch sw;
  const auto conductors = enumerate_conductors(2000);
  std::vector<char> ok(conductors.size(), 0);
  std::vector<double> residual(conductors.size(), 0.0);
  parallel_for(conductors.size(), [&](std::size_t i) {
    const MinimalPolynomial mp = build_min_poly(conductors[i]);
    const MinPolyCheck check = check_min_poly_numeric(mp);
    residual[i] = check.max_residual;
    ok[i] = check.ok() && mp.power.degree() == static_cast<long>(conductors[i].m()) &&
            2 * conductors[i].m() == euler_phi(conductors[i].n());
  });
  const auto bad = std::count(ok.begin(), ok.end(), 0);
  const double t = sw.seconds();
  return {bad == 0 && t < 30.0,
          fmt("%zu conductors, %td failures, max residual %.2e, %.1f s (limit 30 s)",
              conductors.size(), bad, *std::max_element(residual.begin(), residual.end()), t)};
}

// 2. dct2(dct3(a)) = (N/2) a to 1e-8 relative for N = 2..4096, 100 vectors
// each; exact over a prime field and over the CRT ring. Under 60 s.
Outcome dct_roundtrip() {
  Stopwatch sw;
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  std::size_t mod_failures = 0;
  for (std::size_t n = 2; n <= 4096; n *= 2) {
    const RealDctPlan real = make_real_plan(n);
    const u64 q = primes_congruent_one_below(4 * n, 1ULL << 31, 1).front();
    const ModDctPlan field = make_mod_plan(n, PrimeField(q));
    const auto lift = primes_congruent_one_below(4 * n, 1ULL << 31, 2);
    const CrtModulus crt = make_crt_modulus(lift[0], lift[1], 4 * n);
    const ModDctPlan crt_plan = make_crt_plan(n, crt);
    const Modulus fm(q), cm(crt.composite());
    for (int v = 0; v < 100; ++v) {
      std::vector<double> a(n);
      for (auto& x : a) x = u(rng);
      const auto back = real.dct2(real.dct3(a));
      double err = 0, scale = 0;
      for (std::size_t i = 0; i < n; ++i) {
        err = std::max(err, std::abs(back[i] - 0.5 * n * a[i]));
        scale = std::max(scale, std::abs(0.5 * n * a[i]));
      }
      worst = std::max(worst, err / scale);

      std::vector<u64> b(n), c(n);
      for (auto& x : b) x = rng() % q;
      for (auto& x : c) x = rng() % crt.composite();
      const auto bb = field.dct2(field.dct3(b));
      const auto cc = crt_plan.dct2(crt_plan.dct3(c));
      for (std::size_t i = 0; i < n; ++i) {
        mod_failures += bb[i] != fm.mul(b[i], n / 2);
        mod_failures += cc[i] != cm.mul(c[i], n / 2);
      }
    }
  }
  const double t = sw.seconds();
  return {worst <= 1e-8 && mod_failures == 0 && t < 60.0,
          fmt("max relative error %.2e (limit 1e-8), %zu modular mismatches, %.1f s (limit 60 s)",
              worst, mod_failures, t)};
}

std::vector<Conductor> oracle_conductors() {
  // Twenty-two conductors covering m from 2 to 1024.
  const std::size_t degrees[] = {2,  3,  4,  6,   8,   10,  12,  16,  20,  30,  32,
                                 48, 64, 96, 128, 160, 256, 300, 512, 640, 768, 1024};
  std::vector<Conductor> out;
  for (std::size_t m : degrees) out.push_back(conductor_with_degree(m));
  return out;
}

// 3. mul_fast equals mul_schoolbook on 200 random pairs for each of at least
// 20 conductors with m in [2, 1024], in a prime field and over Z via CRT.
Outcome oracle_equivalence() {
  Stopwatch sw;
  const auto conductors = oracle_conductors();
  std::size_t mismatches = 0, products = 0;
  std::size_t min_m = ~std::size_t{0}, max_m = 0;
  for (const auto& c : conductors) {
    min_m = std::min(min_m, c.m());
    max_m = std::max(max_m, c.m());
    const RingPtr integer = QuotientRing::get(c, Domain::integer());
    const u64 q = primes_congruent_one_below(4 * integer->dct_size(), 1ULL << 31, 1).front();
    const RingPtr field = QuotientRing::get(c, Domain::prime_field(q));
    if (!field->has_fast_plan()) ++mismatches;
    for (const RingPtr& ring : {field, integer}) {
      std::mt19937_64 rng(c.n() * 31 + ring->domain().modular());
      for (int t = 0; t < 200; ++t) {
        const RingElement a = random_element(ring, rng), b = random_element(ring, rng);
        mismatches += !(mul_fast(a, b) == mul_schoolbook(a, b));
        ++products;
      }
    }
  }
  const double t = sw.seconds();
  return {mismatches == 0 && conductors.size() >= 20 && min_m == 2 && max_m == 1024 &&
              t < 300.0,
          fmt("%zu conductors (m %zu..%zu), %zu products, %zu mismatches, %.1f s (limit 300 s)",
              conductors.size(), min_m, max_m, products, mismatches, t)};
}

// 4. Additions in reduce <= 2m, and the fold equals the schoolbook remainder.
Outcome reduction_cost() {
  Stopwatch sw;
  const auto conductors = enumerate_conductors(2000);
  std::vector<char> cost_ok(conductors.size(), 0), match(conductors.size(), 0);
  std::vector<double> ratio(conductors.size(), 0.0);
  parallel_for(conductors.size(), [&](std::size_t i) {
    const Conductor& c = conductors[i];
    const RingPtr ring = QuotientRing::get(c, Domain::integer());
    std::mt19937_64 rng(c.n());
    bool all_match = true, all_cost = true;
    for (int t = 0; t < 2; ++t) {
      const RingElement a = random_element(ring, rng), b = random_element(ring, rng);
      OpCount ops;
      const RingElement r = reduce(mul_unreduced(a, b), &ops);
      all_cost = all_cost && ops.additions <= 2 * c.m();
      ratio[i] = std::max(ratio[i], static_cast<double>(ops.additions) / (2.0 * c.m()));
      all_match = all_match && r == mul_schoolbook(a, b);
    }
    cost_ok[i] = all_cost;
    match[i] = all_match;
  });
  const auto over = std::count(cost_ok.begin(), cost_ok.end(), 0);
  const auto wrong = std::count(match.begin(), match.end(), 0);
  return {over == 0 && wrong == 0,
          fmt("%zu conductors, max additions / 2m = %.3f, %td over budget, %td mismatches, %.1f s",
              conductors.size(), *std::max_element(ratio.begin(), ratio.end()), over, wrong,
              sw.seconds())};
}

// 5. Gram closed forms and condition numbers of C for every conductor
// with N <= 1500.
Outcome gram_closed_forms() {
  Stopwatch sw;
  std::vector<Conductor> conductors;
  for (const auto& c : enumerate_conductors(6004)) {
    if (c.grid_size() <= 1500) conductors.push_back(c);
  }
  struct Row {
    double dev = 0, k2_err = 0, k2_sqrt2 = 0, kf_margin = 0;
    bool ok = false;
  };
  std::vector<Row> rows(conductors.size());
  parallel_for(conductors.size(), [&](std::size_t i) {
    const Conductor& c = conductors[i];
    const CosineReport rep = analyze_cosine(c);
    const CosineCondition& k = rep.condition;
    const double N = static_cast<double>(rep.grid);
    Row& row = rows[i];
    row.dev = rep.gram_deviation / N;
    row.k2_err = std::abs(k.kappa2_numeric - k.kappa2) / k.kappa2;
    row.kf_margin = k.kappaF / k.kappaF_bound;
    bool kappa_shape;
    if (c.prime_power_case()) {
      kappa_shape = k.kappa2 < std::sqrt(2.0) &&
                    std::abs(k.kappa2 - std::sqrt((2 * N + 1) / (N + 1))) <= 1e-12;
    } else {
      row.k2_sqrt2 = std::abs(k.kappa2 - std::sqrt(2.0));
      kappa_shape = row.k2_sqrt2 <= 1e-9;
    }
    row.ok = rep.gram_deviation <= 1e-8 * N && row.k2_err <= 1e-6 && kappa_shape &&
             k.kappaF < k.kappaF_bound;
  });
  Row worst;
  std::size_t bad = 0;
  for (const auto& r : rows) {
    worst.dev = std::max(worst.dev, r.dev);
    worst.k2_err = std::max(worst.k2_err, r.k2_err);
    worst.k2_sqrt2 = std::max(worst.k2_sqrt2, r.k2_sqrt2);
    worst.kf_margin = std::max(worst.kf_margin, r.kf_margin);
    bad += !r.ok;
  }
  return {bad == 0,
          fmt("%zu conductors, max dev/N %.2e (limit 1e-8), max kappa2 rel err %.2e (limit "
              "1e-6), max |kappa2 - sqrt2| %.2e, max kappaF/bound %.4f, %zu failures, %.1f s",
              conductors.size(), worst.dev, worst.k2_err, worst.k2_sqrt2, worst.kf_margin, bad,
              sw.seconds())};
}

// 6. ||F||_F^2 closed forms, block elimination and kappa_F(M)^2 / n^3 over
// n <= 1500. The trend test fits log(ratio) against log(n).
Outcome equivalence_machinery() {
  Stopwatch sw;
  const auto rows = condition_sweep(1500);
  std::size_t f_bad = 0;
  double block = 0, max_ratio = 0;
  u64 argmax = 0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : rows) {
    f_bad += r.f_frobenius_sq != r.f_closed_form;
    block = std::max(block, r.block_residual);
    if (r.ratio > max_ratio) {
      max_ratio = r.ratio;
      argmax = r.conductor.n();
    }
    const double x = std::log(static_cast<double>(r.conductor.n())), y = std::log(r.ratio);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double cnt = static_cast<double>(rows.size());
  const double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
  // Max ratio over the upper half of the n range versus the lower half.
  double lo_max = 0, hi_max = 0;
  for (const auto& r : rows) {
    (r.conductor.n() <= 750 ? lo_max : hi_max) = std::max(
        r.conductor.n() <= 750 ? lo_max : hi_max, r.ratio);
  }
  const bool trend_ok = slope <= 0.0 && hi_max <= lo_max;
  return {f_bad == 0 && block <= 1e-8 && max_ratio <= 10.0 && trend_ok,
          fmt("%zu conductors, %zu F mismatches, max block residual %.2e (limit 1e-8), max "
              "kappaF(M)^2/n^3 %.4f at n=%llu (limit 10), log-log slope %.3f, max ratio n<=750 "
              "%.2e vs n>750 %.2e, %.1f s",
              rows.size(), f_bad, block, max_ratio, static_cast<unsigned long long>(argmax),
              slope, lo_max, hi_max, sw.seconds())};
}

// 7. The four standard-scheme presets have no roots and no k-ideal factors.
Outcome presets() {
  Stopwatch sw;
  std::string detail;
  bool ok = true;
  for (Preset p : {Preset::kMlKem, Preset::kMlDsa, Preset::kFnDsa512, Preset::kFnDsa1024}) {
    Stopwatch one;
    const ScanReport rep = preset_check(p);
    ok = ok && rep.roots.empty() && rep.k_ideal.empty();
    detail += fmt("%s m=%zu q=%llu roots=%zu k-ideal=%zu (%.1f s); ",
                  std::string(preset_name(p)).c_str(), rep.degree,
                  static_cast<unsigned long long>(rep.q), rep.roots.size(), rep.k_ideal.size(),
                  one.seconds());
  }
  const double t = sw.seconds();
  detail += fmt("total %.1f s (limit 300 s)", t);
  return {ok && t < 300.0, detail};
}

// 8. (19, 2, 2) at q = 2887 has the root 698 of order 3.
Outcome known_instance() {
  Stopwatch sw;
  const ScanReport rep = scan(Conductor::create(19, 2, 2), 2887);
  const bool found = std::any_of(rep.roots.begin(), rep.roots.end(), [](const RootInfo& r) {
    return r.alpha == 698 && r.order == 3;
  });
  const double t = sw.seconds();
  return {found && t < 10.0,
          fmt("%zu roots, smallest order %llu, root 698 of order 3 %s, %.2f s (limit 10 s)",
              rep.roots.size(),
              static_cast<unsigned long long>(rep.smallest_root_order.value_or(0)),
              found ? "present" : "absent", t)};
}

std::string counts_line(const CampaignSummary& s) {
  std::string out;
  for (int i = 0; i < kAttackRows; ++i) {
    out += fmt("%s %zu/%zu; ", std::string(attack_row_name(static_cast<AttackRow>(i))).c_str(),
               s.counts[i], s.denominators[i]);
  }
  return out;
}

// 9. Campaign in sampled mode lands in the expected bands; the full prime
// list is reported and contains the known instance.
Outcome campaign(u64 seed) {
  Stopwatch sw;
  CampaignConfig sampled;
  sampled.sample = 150;
  sampled.seed = seed;
  const CampaignSummary s = run_campaign(sampled);
  const std::size_t roots = s.counts[static_cast<int>(AttackRow::kSmallErrorRoots)];
  const std::size_t kideal = s.counts[static_cast<int>(AttackRow::kSmallErrorKIdeal)];

  const CampaignSummary full = run_campaign(CampaignConfig{});
  const bool has_known =
      std::any_of(full.vulnerable.begin(), full.vulnerable.end(), [&](std::size_t idx) {
        const ScanReport& r = full.reports[idx];
        return r.conductor == Conductor::create(19, 2, 2) && r.q == 2887;
      });
  const bool ok = s.conductors.size() == 24 && s.pair_count == 3600 && roots <= 4 &&
                  kideal >= 3 && kideal <= 20 && has_known && s.failures.empty() &&
                  full.failures.empty();
  return {ok, fmt("|S|=%zu; sampled (150 primes, seed %llu, %zu pairs): small-error roots %zu "
                  "(band 0..4), small-error k-ideal %zu (band 3..20) | full list (%zu primes, "
                  "%zu pairs): %sknown instance %s; %.1f s",
                  s.conductors.size(), static_cast<unsigned long long>(seed), s.pair_count,
                  roots, kideal, full.primes.size(), full.pair_count, counts_line(full).c_str(),
                  has_known ? "included" : "missing", sw.seconds())};
}

// 10. Fast product time ratio per doubling of m, averaged over the top three
// doublings, is at most 2.6.
Outcome quasilinearity(const std::string& csv_path) {
  Stopwatch sw;
  const std::size_t sizes[] = {256, 512, 1024, 2048, 4096, 8192};
  std::vector<BenchRow> rows;
  for (std::size_t m : sizes) rows.push_back(bench_mul(conductor_with_degree(m), 9, 7, 8192));
  std::ostringstream csv;
  csv << "m,n,ns_fast,ns_schoolbook,additions_in_reduce\n";
  for (const auto& r : rows) {
    csv << r.m << "," << r.n << "," << fmt("%.0f", r.ns_fast) << ","
        << fmt("%.0f", r.ns_schoolbook) << "," << r.additions_in_reduce << "\n";
  }
  if (!csv_path.empty()) std::ofstream(csv_path) << csv.str();
  double fast = 0, school = 0;
  const std::size_t k = rows.size();
  for (std::size_t i = k - 3; i < k; ++i) {
    fast += rows[i].ns_fast / rows[i - 1].ns_fast / 3.0;
    school += rows[i].ns_schoolbook / rows[i - 1].ns_schoolbook / 3.0;
  }
  std::string table;
  for (const auto& r : rows) table += fmt("m=%zu %.0f/%.0f ns; ", r.m, r.ns_fast, r.ns_schoolbook);
  return {fast <= 2.6,
          fmt("fast ratio %.3f (limit 2.6), schoolbook ratio %.3f; %s%.1f s", fast, school,
              table.c_str(), sw.seconds())};
}

// 11. The same campaign on Phi_{n/2} of matching degree finds nothing.
Outcome cyclotomic_comparison() {
  Stopwatch sw;
  CampaignConfig cfg;
  cfg.family = PolyFamily::kCyclotomic;
  const CampaignSummary full = run_campaign(cfg);
  cfg.sample = 150;
  const CampaignSummary sampled = run_campaign(cfg);
  const bool ok = full.vulnerable.empty() && sampled.vulnerable.empty() &&
                  full.failures.empty() && sampled.failures.empty();
  return {ok, fmt("full list %zu pairs: %zu vulnerable; sampled %zu pairs: %zu vulnerable; %.1f s",
                  full.pair_count, full.vulnerable.size(), sampled.pair_count,
                  sampled.vulnerable.size(), sw.seconds())};
}

}  // namespace
}  // namespace realcyclo

int main(int argc, char** argv) {
  using namespace realcyclo;
  CLI::App app{"realcyclo acceptance suite"};
  std::vector<int> selected;
  realcyclo::u64 seed = 1;
  std::string bench_csv = "acceptance_bench.csv";
  app.add_option("--criterion", selected, "criteria to run (default: all)")
      ->check(CLI::Range(1, 11));
  app.add_option("--seed", seed, "prime-sampling seed for criterion 9")->capture_default_str();
  app.add_option("--bench-csv", bench_csv, "where criterion 10 writes its CSV");
  CLI11_PARSE(app, argc, argv);
  if (selected.empty()) {
    for (int i = 1; i <= 11; ++i) selected.push_back(i);
  }

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"minimal polynomials n <= 2000", minimal_polynomials},
      {"DCT round trip", dct_roundtrip},
      {"fast product equals schoolbook", oracle_equivalence},
      {"reduction cost and exactness", reduction_cost},
      {"Gram closed forms and kappa(C)", gram_closed_forms},
      {"elimination, block identity, kappa(M)", equivalence_machinery},
      {"standard-scheme presets", presets},
      {"known vulnerable instance", known_instance},
      {"campaign reproduction", [seed] { return campaign(seed); }},
      {"quasilinear fast product", [bench_csv] { return quasilinearity(bench_csv); }},
      {"cyclotomic comparison", cyclotomic_comparison},
  };

  int failures = 0;
  for (int id : selected) {
    const auto& [name, fn] = criteria[id - 1];
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << "criterion " << id << " " << (o.pass ? "PASS" : "FAIL") << " [" << name
              << "] " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
