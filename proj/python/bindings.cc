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

// Python bindings. Polynomials cross the boundary as lists of Python ints
// (ascending coefficients); reports come back as dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "realcyclo/attacks.h"
#include "realcyclo/dct.h"
#include "realcyclo/embedding.h"
#include "realcyclo/error.h"
#include "realcyclo/minpoly.h"
#include "realcyclo/ring.h"

namespace py = pybind11;
using namespace realcyclo;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

template <class P>
py::list to_py(const P& poly) {
  py::list out;
  for (const BigInt& c : poly.coeffs()) out.append(to_py(c));
  return out;
}

Conductor conductor(u64 p, unsigned s, unsigned r) { return Conductor::create(p, s, r); }

py::dict report_dict(const ScanReport& r) {
  py::dict d;
  d["n"] = r.conductor.n();
  d["q"] = r.q;
  d["degree"] = r.degree;
  py::list roots, factors;
  for (const auto& x : r.roots) roots.append(py::make_tuple(x.alpha, x.order));
  for (const auto& f : r.k_ideal) factors.append(py::make_tuple(f.k, f.a, f.order));
  d["roots"] = roots;
  d["k_ideal"] = factors;
  return d;
}

RingElement element(const RingPtr& ring, const std::vector<i64>& v) {
  return make_element(ring, v);
}

}  // namespace

PYBIND11_MODULE(_realcyclo, m) {
  m.doc() = "Maximal real cyclotomic rings in the Chebyshev V basis";

  py::register_exception<realcyclo::Error>(m, "RealcycloError", PyExc_ValueError);

  py::class_<Conductor>(m, "Conductor")
      .def(py::init(&conductor), py::arg("p"), py::arg("s") = 1, py::arg("r") = 0)
      .def_property_readonly("p", &Conductor::p)
      .def_property_readonly("s", &Conductor::s)
      .def_property_readonly("r", &Conductor::r)
      .def_property_readonly("n", &Conductor::n)
      .def_property_readonly("m", &Conductor::m)
      .def_property_readonly("grid_size", &Conductor::grid_size)
      .def("__repr__", &Conductor::to_string)
      .def("__eq__", &Conductor::operator==);

  m.def("enumerate_conductors", &enumerate_conductors, py::arg("max_n"));
  m.def("conductor_with_degree", &conductor_with_degree, py::arg("m"));

  m.def(
      "min_poly",
      [](const Conductor& c, const std::string& basis) {
        const MinimalPolynomial mp = build_min_poly(c);
        if (basis == "power") return to_py(mp.power);
        if (basis == "v") return to_py(mp.dense_v());
        throw realcyclo::Error(realcyclo::ErrorCode::kInvalidArgument,
                               "basis must be 'power' or 'v'");
      },
      py::arg("conductor"), py::arg("basis") = "power",
      "Ascending coefficients of Psi_n in the power or V basis.");
  m.def(
      "sparse_v",
      [](const Conductor& c) {
        std::vector<std::pair<std::size_t, int>> out;
        for (const auto& t : sparse_v_form(c)) out.emplace_back(t.index, t.sign);
        return out;
      },
      py::arg("conductor"), "Nonzero (index, sign) terms of Psi_n in the V basis.");
  m.def(
      "verify_min_poly",
      [](const Conductor& c) { return verify_min_poly_numeric(build_min_poly(c)); },
      py::arg("conductor"));

  m.def(
      "mul",
      [](const Conductor& c, const std::vector<i64>& a, const std::vector<i64>& b,
         const std::string& domain, const std::string& method) {
        const RingPtr ring = QuotientRing::get(c, Domain::parse(domain));
        const RingElement x = element(ring, a), y = element(ring, b);
        if (method == "auto") return mul(x, y).coeffs();
        if (method == "fast") return mul_fast(x, y).coeffs();
        if (method == "schoolbook") return mul_schoolbook(x, y).coeffs();
        throw realcyclo::Error(realcyclo::ErrorCode::kInvalidArgument,
                               "method must be auto, fast or schoolbook");
      },
      py::arg("conductor"), py::arg("a"), py::arg("b"), py::arg("domain") = "int",
      py::arg("method") = "auto",
      "Product of two V-basis coefficient vectors in Z[x]/(Psi_n) or a quotient of it.");

  m.def(
      "dct2", [](const std::vector<double>& a) { return make_real_plan(a.size()).dct2(a); },
      py::arg("a"));
  m.def(
      "dct3", [](const std::vector<double>& a) { return make_real_plan(a.size()).dct3(a); },
      py::arg("a"));

  m.def(
      "cosine_condition",
      [](const Conductor& c) {
        const CosineReport r = analyze_cosine(c);
        py::dict d;
        d["grid"] = r.grid;
        d["gram_deviation"] = r.gram_deviation;
        d["kappa2"] = r.condition.kappa2;
        d["kappa2_numeric"] = r.condition.kappa2_numeric;
        d["kappaF"] = r.condition.kappaF;
        d["kappaF_bound"] = r.condition.kappaF_bound;
        return d;
      },
      py::arg("conductor"));
  m.def(
      "embedding_condition",
      [](const Conductor& c) {
        const EmbeddingCondition e = embedding_condition(c);
        const EliminationF f = elimination_f(c);
        py::dict d;
        d["kappaF_M_sq"] = e.kappaF_M_sq;
        d["ratio"] = e.ratio;
        d["block_residual"] = e.block_residual;
        d["f_frobenius_sq"] = f.frobenius_sq();
        d["f_closed_form"] = f.closed_form();
        return d;
      },
      py::arg("conductor"));

  m.def(
      "scan",
      [](const Conductor& c, u64 q, unsigned k_max, bool cyclotomic) {
        ScanConfig cfg;
        cfg.k_max = k_max;
        return report_dict(
            scan(c, q, cfg, cyclotomic ? PolyFamily::kCyclotomic : PolyFamily::kMaxReal));
      },
      py::arg("conductor"), py::arg("q"), py::arg("k_max") = 4, py::arg("cyclotomic") = false);
  m.def(
      "preset_check",
      [](const std::string& name) { return report_dict(preset_check(parse_preset(name))); },
      py::arg("name"));
  m.def(
      "campaign",
      [](std::size_t sample, u64 seed, bool cyclotomic) {
        CampaignConfig cfg;
        cfg.sample = sample;
        cfg.seed = seed;
        cfg.family = cyclotomic ? PolyFamily::kCyclotomic : PolyFamily::kMaxReal;
        const CampaignSummary s = run_campaign(cfg);
        py::dict counts;
        for (int i = 0; i < kAttackRows; ++i) {
          const auto row = static_cast<AttackRow>(i);
          counts[py::str(std::string(attack_row_name(row)))] =
              py::make_tuple(s.counts[i], s.denominators[i]);
        }
        py::list vulnerable;
        for (std::size_t idx : s.vulnerable) vulnerable.append(report_dict(s.reports[idx]));
        py::dict d;
        d["pairs"] = s.pair_count;
        d["primes"] = s.primes;
        d["counts"] = counts;
        d["vulnerable"] = vulnerable;
        return d;
      },
      py::arg("sample") = 0, py::arg("seed") = 1, py::arg("cyclotomic") = false);

  m.def(
      "distinguish",
      [](const Conductor& c, u64 q, double sigma, u64 alpha, std::size_t count, u64 seed,
         bool uniform) {
        PlweParams params{c, q, sigma};
        const RingPtr ring = params.ring();
        std::mt19937_64 rng(seed ^ 0x5eedULL);
        const RingElement s = random_element(ring, rng);
        const auto samples = uniform ? sample_uniform(params, count, seed)
                                     : sample_plwe(params, s, count, seed);
        const u64 order = mul_order(alpha, PrimeField(q));
        const DistinguisherResult r = distinguish(samples, alpha, order, sigma);
        return std::string(verdict_name(r.verdict));
      },
      py::arg("conductor"), py::arg("q"), py::arg("sigma"), py::arg("alpha"),
      py::arg("count") = 20, py::arg("seed") = 1, py::arg("uniform") = false,
      "Draws PLWE (or uniform) samples and returns the evaluation-at-root verdict.");
}
