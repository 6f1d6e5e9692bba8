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

#include "realcyclo/cli.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "realcyclo/attacks.h"
#include "realcyclo/embedding.h"
#include "realcyclo/error.h"
#include "realcyclo/minpoly.h"
#include "realcyclo/ring.h"

namespace realcyclo {
namespace {

using json = nlohmann::ordered_json;

struct ConductorArgs {
  u64 p = 0;
  unsigned s = 1;
  unsigned r = 0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--p", p, "odd prime p")->required();
    cmd->add_option("--s", s, "prime exponent s >= 1")->capture_default_str();
    cmd->add_option("--r", r, "power of two r (0 or >= 2)")->capture_default_str();
  }
  Conductor get() const { return Conductor::create(p, s, r); }
};

json conductor_json(const Conductor& c) {
  return {{"p", c.p()}, {"s", c.s()}, {"r", c.r()}, {"n", c.n()}, {"degree", c.m()}};
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

std::vector<std::string> big_strings(std::span<const BigInt> c) {
  std::vector<std::string> out;
  for (const auto& x : c) out.push_back(x.get_str());
  return out;
}

// Trailing zeros dropped, one coefficient kept.
std::vector<std::string> trimmed(std::vector<std::string> v) {
  while (v.size() > 1 && v.back() == "0") v.pop_back();
  return v;
}

json big_json(std::span<const BigInt> c) {
  json a = json::array();
  for (const auto& x : c) {
    if (x.fits_slong_p()) {
      a.push_back(x.get_si());
    } else {
      a.push_back(x.get_str());
    }
  }
  return a;
}

std::vector<i64> parse_coeffs(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream is(s);
  std::vector<i64> out;
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument, "bad coefficient '" + tok + "'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::kInvalidArgument, "empty coefficient list");
  return out;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  f << body;
}

// ---------------------------------------------------------------- minpoly

struct MinpolyCmd {
  ConductorArgs c;
  std::string basis = "v";
  bool sparse = false;
  bool as_json = false;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("minpoly", "minimal polynomial Psi_n");
    c.add_to(cmd);
    cmd->add_option("--basis", basis, "v or power")
        ->check(CLI::IsMember({"v", "power"}))
        ->capture_default_str();
    cmd->add_flag("--sparse", sparse, "signed V-indices only");
    cmd->add_flag("--json", as_json, "JSON output");
    cmd->callback([] {});
  }

  void run(std::ostream& out) const {
    const Conductor cond = c.get();
    const MinimalPolynomial mp = build_min_poly(cond);
    if (as_json) {
      json j;
      j["conductor"] = conductor_json(cond);
      j["sparse_v"] = json::array();
      for (const auto& t : mp.sparse_v) {
        j["sparse_v"].push_back({{"index", t.index}, {"sign", t.sign}});
      }
      j["basis"] = basis;
      j["coefficients"] =
          basis == "power" ? big_json(mp.power.coeffs()) : big_json(mp.dense_v().coeffs());
      out << j.dump() << "\n";
      return;
    }
    if (sparse) {
      for (std::size_t i = 0; i < mp.sparse_v.size(); ++i) {
        out << (i ? " " : "") << (mp.sparse_v[i].sign > 0 ? "+" : "-") << "V"
            << mp.sparse_v[i].index;
      }
      out << "\n";
      return;
    }
    const auto coeffs =
        basis == "power" ? big_strings(mp.power.coeffs()) : big_strings(mp.dense_v().coeffs());
    out << join(coeffs) << "\n";
  }
};

// -------------------------------------------------------------------- mul

struct MulCmd {
  ConductorArgs c;
  std::string domain = "int";
  u64 seed = 1;
  std::string a_text, b_text, input_file;
  std::string input_basis = "power";
  std::string method = "auto";
  bool as_json = false;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("mul", "multiply two ring elements");
    c.add_to(cmd);
    cmd->add_option("--domain", domain, "int, fq:Q, crt or crt:Q1:Q2")->capture_default_str();
    cmd->add_option("--seed", seed, "seed for random operands")->capture_default_str();
    cmd->add_option("--a", a_text, "first operand, ascending coefficients");
    cmd->add_option("--b", b_text, "second operand, ascending coefficients");
    cmd->add_option("--input", input_file, "file with one operand per line");
    cmd->add_option("--input-basis", input_basis, "power or v")
        ->check(CLI::IsMember({"power", "v"}))
        ->capture_default_str();
    cmd->add_option("--method", method, "auto, fast or schoolbook")
        ->check(CLI::IsMember({"auto", "fast", "schoolbook"}))
        ->capture_default_str();
    cmd->add_flag("--json", as_json, "JSON output");
  }

  RingElement operand(const RingPtr& ring, const std::string& text) const {
    const std::vector<i64> v = parse_coeffs(text);
    if (input_basis == "v") return make_element(ring, v);
    std::vector<BigInt> big(v.begin(), v.end());
    return from_power(ring, PowerPoly(std::move(big)));
  }

  void run(std::ostream& out) const {
    const RingPtr ring = QuotientRing::get(c.get(), Domain::parse(domain));
    std::string ta = a_text, tb = b_text;
    if (!input_file.empty()) {
      std::ifstream f(input_file);
      if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot read " + input_file);
      std::getline(f, ta);
      std::getline(f, tb);
    }
    std::mt19937_64 rng(seed);
    const RingElement a = ta.empty() ? random_element(ring, rng) : operand(ring, ta);
    const RingElement b = tb.empty() ? random_element(ring, rng) : operand(ring, tb);
    const RingElement prod = method == "fast"         ? mul_fast(a, b)
                             : method == "schoolbook" ? mul_schoolbook(a, b)
                                                      : mul(a, b);
    const PowerPoly pw = prod.to_power();
    if (as_json) {
      json j;
      j["conductor"] = conductor_json(ring->conductor());
      j["domain"] = ring->domain().to_string();
      j["a_v"] = a.coeffs();
      j["b_v"] = b.coeffs();
      j["product_v"] = prod.coeffs();
      j["product_power"] = big_json(pw.coeffs());
      out << j.dump() << "\n";
      return;
    }
    out << "power: " << join(trimmed(big_strings(pw.coeffs()))) << "\n";
    std::vector<std::string> v;
    for (i64 x : prod.coeffs()) v.push_back(std::to_string(x));
    out << "v: " << join(trimmed(v)) << "\n";
  }
};

// ------------------------------------------------------------------ bench

struct BenchCmd {
  std::vector<std::size_t> sizes = {64, 128, 256, 512, 1024, 2048, 4096, 8192};
  int reps = 5;
  u64 seed = 1;
  std::size_t schoolbook_max = 4096;
  std::string csv_path;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("bench", "time fast and schoolbook products");
    cmd->add_option("--sizes", sizes, "degrees m")->delimiter(',');
    cmd->add_option("--reps", reps, "repetitions (median)")->capture_default_str();
    cmd->add_option("--seed", seed)->capture_default_str();
    cmd->add_option("--schoolbook-max", schoolbook_max, "largest m timed by schoolbook")
        ->capture_default_str();
    cmd->add_option("--csv", csv_path, "write CSV here instead of stdout");
  }

  void run(std::ostream& out) const {
    std::string body = "m,n,ns_fast,ns_schoolbook,additions_in_reduce\n";
    char line[160];
    for (std::size_t m : sizes) {
      const BenchRow row = bench_mul(conductor_with_degree(m), reps, seed, schoolbook_max);
      std::snprintf(line, sizeof line, "%zu,%llu,%.0f,%.0f,%llu\n", row.m,
                    static_cast<unsigned long long>(row.n), row.ns_fast, row.ns_schoolbook,
                    static_cast<unsigned long long>(row.additions_in_reduce));
      body += line;
    }
    if (csv_path.empty()) {
      out << body;
    } else {
      write_file(csv_path, body);
    }
  }
};

// ------------------------------------------------------------------- cond

struct CondCmd {
  u64 max_n = 1500;
  std::string csv_path;
  bool as_json = false;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("cond", "condition numbers of C and M");
    cmd->add_option("--max-n", max_n, "largest conductor")->capture_default_str();
    cmd->add_option("--csv", csv_path, "write CSV here");
    cmd->add_flag("--json", as_json, "JSON output");
  }

  void run(std::ostream& out) const {
    const auto rows = condition_sweep(max_n);
    std::string csv = "n,m,N,kappa2_C,kappaF_C,kappaF_M_sq,ratio\n";
    char line[256];
    for (const auto& r : rows) {
      std::snprintf(line, sizeof line, "%llu,%zu,%zu,%.12g,%.12g,%.12g,%.12g\n",
                    static_cast<unsigned long long>(r.conductor.n()), r.conductor.m(),
                    r.grid, r.kappa2_C, r.kappaF_C, r.kappaF_M_sq, r.ratio);
      csv += line;
    }
    if (!csv_path.empty()) write_file(csv_path, csv);
    if (as_json) {
      json a = json::array();
      for (const auto& r : rows) {
        a.push_back({{"conductor", conductor_json(r.conductor)},
                     {"N", r.grid},
                     {"kappa2_C", r.kappa2_C},
                     {"kappaF_C", r.kappaF_C},
                     {"kappaF_M_sq", r.kappaF_M_sq},
                     {"ratio", r.ratio},
                     {"gram_deviation", r.gram_deviation},
                     {"block_residual", r.block_residual},
                     {"f_frobenius_sq", r.f_frobenius_sq},
                     {"f_closed_form", r.f_closed_form}});
      }
      out << a.dump() << "\n";
      return;
    }
    if (!csv_path.empty()) {
      out << rows.size() << " conductors written to " << csv_path << "\n";
      return;
    }
    std::snprintf(line, sizeof line, "%6s %5s %5s %10s %12s %14s %10s\n", "n", "m", "N",
                  "kappa2_C", "kappaF_C", "kappaF_M^2", "ratio");
    out << line;
    for (const auto& r : rows) {
      std::snprintf(line, sizeof line, "%6llu %5zu %5zu %10.6f %12.4f %14.6g %10.3e\n",
                    static_cast<unsigned long long>(r.conductor.n()), r.conductor.m(),
                    r.grid, r.kappa2_C, r.kappaF_C, r.kappaF_M_sq, r.ratio);
      out << line;
    }
  }
};

// ------------------------------------------------------------------- scan

struct ScanCmd {
  std::string preset;
  bool campaign = false;
  bool cyclotomic = false;
  u64 p = 0, q = 0;
  unsigned s = 1, r = 0;
  u64 qmin = 2048, qmax = 4192;
  std::size_t sample = 0;
  u64 seed = 1;
  unsigned k_max = 4;
  std::string out_path, csv_path;
  bool as_json = false;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("scan", "roots and k-ideal factors mod q");
    auto* pre = cmd->add_option("--preset", preset, "ml-kem, ml-dsa, fn-dsa-512, fn-dsa-1024")
                    ->check(CLI::IsMember({"ml-kem", "ml-dsa", "fn-dsa-512", "fn-dsa-1024"}));
    auto* camp = cmd->add_flag("--campaign", campaign, "statistical campaign over S");
    pre->excludes(camp);
    cmd->add_flag("--cyclotomic", cyclotomic, "scan Phi_{n/2} instead of Psi_n");
    cmd->add_option("--p", p, "single scan: odd prime p");
    cmd->add_option("--s", s, "single scan: exponent s")->capture_default_str();
    cmd->add_option("--r", r, "single scan: power of two r")->capture_default_str();
    cmd->add_option("--q", q, "single scan: prime modulus");
    cmd->add_option("--qmin", qmin)->capture_default_str();
    cmd->add_option("--qmax", qmax)->capture_default_str();
    cmd->add_option("--sample", sample, "random primes drawn from the range (0: all)")
        ->capture_default_str();
    cmd->add_option("--seed", seed)->capture_default_str();
    cmd->add_option("--k-max", k_max, "largest factor degree k")->capture_default_str();
    cmd->add_option("--out", out_path, "campaign JSON report");
    cmd->add_option("--csv", csv_path, "campaign CSV table");
    cmd->add_flag("--json", as_json, "JSON output");
  }

  void print_report(std::ostream& out, const ScanReport& rep) const {
    if (as_json) {
      out << scan_report_json(rep) << "\n";
      return;
    }
    out << rep.conductor.to_string() << " degree " << rep.degree << " q " << rep.q << "\n";
    out << "roots: " << rep.roots.size();
    if (rep.smallest_root_order) out << " (smallest order " << *rep.smallest_root_order << ")";
    out << "\n";
    for (const auto& x : rep.roots) {
      if (x.order < 5) out << "  alpha " << x.alpha << " order " << x.order << "\n";
    }
    out << "k-ideal factors: " << rep.k_ideal.size();
    if (rep.smallest_kideal_order) {
      out << " (smallest order " << *rep.smallest_kideal_order << ")";
    }
    out << "\n";
    for (const auto& f : rep.k_ideal) {
      if (f.order != 0 && f.order < 5) {
        out << "  x^" << f.k << " + " << f.a << " order " << f.order << "\n";
      }
    }
  }

  void run(std::ostream& out) const {
    ScanConfig cfg;
    cfg.k_max = k_max;
    const PolyFamily family = cyclotomic ? PolyFamily::kCyclotomic : PolyFamily::kMaxReal;
    if (!preset.empty()) {
      print_report(out, preset_check(parse_preset(preset), cfg));
      return;
    }
    if (!campaign) {
      if (p == 0 || q == 0) {
        throw Error(ErrorCode::kInvalidArgument,
                    "scan needs --preset, --campaign or --p/--s/--r/--q");
      }
      print_report(out, scan(Conductor::create(p, s, r), q, cfg, family));
      return;
    }
    CampaignConfig cc;
    cc.qmin = qmin;
    cc.qmax = qmax;
    cc.sample = sample;
    cc.seed = seed;
    cc.scan = cfg;
    cc.family = family;
    const CampaignSummary sum = run_campaign(cc);
    if (!out_path.empty()) write_file(out_path, campaign_json(sum, cc));
    if (!csv_path.empty()) write_file(csv_path, campaign_csv(sum));
    if (as_json) {
      out << campaign_json(sum, cc) << "\n";
      return;
    }
    out << sum.conductors.size() << " conductors x " << sum.primes.size() << " primes = "
        << sum.pair_count << " pairs, " << sum.instance_count << " instances\n";
    for (int i = 0; i < kAttackRows; ++i) {
      const auto row = static_cast<AttackRow>(i);
      out << "  " << attack_row_name(row) << ": " << sum.counts[i] << " / "
          << sum.denominators[i] << " = " << sum.ratio(row) << "\n";
    }
    for (std::size_t idx : sum.vulnerable) {
      const ScanReport& rep = sum.reports[idx];
      out << "  vulnerable " << rep.conductor.to_string() << " q=" << rep.q;
      if (rep.smallest_root_order) out << " root order " << *rep.smallest_root_order;
      if (rep.smallest_kideal_order) out << " k-ideal order " << *rep.smallest_kideal_order;
      out << "\n";
    }
    if (!sum.failures.empty()) out << "  failures: " << sum.failures.size() << "\n";
  }
};

// ----------------------------------------------------------------- sample

struct SampleCmd {
  ConductorArgs c;
  u64 q = 0;
  double sigma = 3.0;
  std::size_t count = 1;
  u64 seed = 1;
  u64 alpha = 0;
  bool distinguish_flag = false;
  bool uniform = false;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("sample", "PLWE samples (JSON)");
    c.add_to(cmd);
    cmd->add_option("--q", q, "prime modulus")->required();
    cmd->add_option("--sigma", sigma, "error standard deviation")->capture_default_str();
    cmd->add_option("--count", count)->capture_default_str();
    cmd->add_option("--seed", seed)->capture_default_str();
    cmd->add_flag("--uniform", uniform, "uniform pairs instead of PLWE samples");
    auto* al = cmd->add_option("--alpha", alpha, "root for the distinguisher");
    cmd->add_flag("--distinguish", distinguish_flag, "run the distinguisher at --alpha")
        ->needs(al);
  }

  void run(std::ostream& out) const {
    const PlweParams params{c.get(), q, sigma};
    const RingPtr ring = params.ring();
    std::mt19937_64 rng(seed);
    const RingElement secret = random_element(ring, rng);
    const auto samples = uniform ? sample_uniform(params, count, seed + 1)
                                 : sample_plwe(params, secret, count, seed + 1);
    json j;
    j["conductor"] = conductor_json(params.conductor);
    j["q"] = q;
    j["sigma"] = sigma;
    j["basis"] = "v";
    if (!uniform) j["secret"] = secret.coeffs();
    j["samples"] = json::array();
    for (const auto& smp : samples) {
      j["samples"].push_back({{"a", smp.a.coeffs()}, {"b", smp.b.coeffs()}});
    }
    if (distinguish_flag) {
      const PrimeField field(q);
      const u64 order = alpha % q == 0 ? 0 : mul_order(alpha, field);
      const DistinguisherResult res = distinguish(samples, alpha, order, sigma);
      j["distinguisher"] = {{"alpha", alpha},
                            {"order", order},
                            {"tau", res.tau},
                            {"passing_guesses", res.passing_guesses},
                            {"verdict", verdict_name(res.verdict)}};
    }
    out << j.dump() << "\n";
  }
};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"realcyclo: arithmetic and attack audit for Z[x]/(Psi_n)", "realcyclo"};
  app.require_subcommand(1);
  MinpolyCmd minpoly;
  MulCmd mul_cmd;
  BenchCmd bench;
  CondCmd cond;
  ScanCmd scan_cmd;
  SampleCmd sample;
  minpoly.attach(app);
  mul_cmd.attach(app);
  bench.attach(app);
  cond.attach(app);
  scan_cmd.attach(app);
  sample.attach(app);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "minpoly") minpoly.run(out);
    if (name == "mul") mul_cmd.run(out);
    if (name == "bench") bench.run(out);
    if (name == "cond") cond.run(out);
    if (name == "scan") scan_cmd.run(out);
    if (name == "sample") sample.run(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return dispatch(args, out, err);
}

}  // namespace realcyclo
