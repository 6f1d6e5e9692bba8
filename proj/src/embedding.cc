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

#include "realcyclo/embedding.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>

#include "realcyclo/error.h"
#include "realcyclo/parallel.h"

namespace realcyclo {

namespace {

// 2 cos(2 pi t / n) for t in [0, n).
std::vector<double> twice_cos_table(u64 n) {
  std::vector<double> out(n);
  for (u64 t = 0; t < n; ++t) {
    out[t] = 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(t) /
                            static_cast<double>(n));
  }
  return out;
}

// Row of V_j(2 cos(2 pi sigma / n)), j < cols.
void fill_row(Eigen::MatrixXd& mat, Eigen::Index row, u64 sigma, u64 n,
              const std::vector<double>& table) {
  mat(row, 0) = 1.0;
  u64 phase = 0;
  for (Eigen::Index j = 1; j < mat.cols(); ++j) {
    phase = (phase + sigma) % n;
    mat(row, j) = table[phase];
  }
}

void require_grid(const Conductor& c) {
  if (c.r() == 1 || c.degenerate()) {
    throw Error(ErrorCode::kInvalidConductor,
                "cosine matrices need r = 0 or r >= 2 and degree >= 2: " +
                    c.to_string());
  }
}

// Lower triangle of C C^T or C^T C, mirrored to a full matrix.
Eigen::MatrixXd computed_gram(const CosineMatrix& c) {
  const Eigen::Index dim = c.entries.rows();
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(dim, dim);
  if (c.kind == CosineCase::kPrimePower) {
    g.selfadjointView<Eigen::Lower>().rankUpdate(c.entries);
  } else {
    g.selfadjointView<Eigen::Lower>().rankUpdate(c.entries.transpose());
  }
  g.triangularView<Eigen::StrictlyUpper>() = g.transpose();
  return g;
}

// Extreme eigenvalues of a symmetric matrix. Small inputs use a dense
// solver; larger ones Lanczos with full reorthogonalisation, which for the
// clustered spectra here terminates after a handful of steps.
std::pair<double, double> extreme_eigenvalues(const Eigen::MatrixXd& g) {
  const Eigen::Index dim = g.rows();
  if (dim <= 400) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g, Eigen::EigenvaluesOnly);
    return {es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()};
  }
  const Eigen::Index steps = std::min<Eigen::Index>(dim, 60);
  Eigen::MatrixXd q(dim, steps + 1);
  std::mt19937_64 rng(1);
  std::normal_distribution<double> normal;
  Eigen::VectorXd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = normal(rng);
  q.col(0) = v.normalized();
  std::vector<double> alpha, beta;
  const double scale = g.cwiseAbs().rowwise().sum().maxCoeff();
  for (Eigen::Index j = 0; j < steps; ++j) {
    Eigen::VectorXd w = g * q.col(j);
    alpha.push_back(q.col(j).dot(w));
    for (int pass = 0; pass < 2; ++pass) {
      w -= q.leftCols(j + 1) * (q.leftCols(j + 1).transpose() * w);
    }
    const double b = w.norm();
    if (b <= 1e-12 * scale || j + 1 == steps) break;
    beta.push_back(b);
    q.col(j + 1) = w / b;
  }
  const Eigen::Index k = static_cast<Eigen::Index>(alpha.size());
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    t(i, i) = alpha[i];
    if (i + 1 < k) t(i, i + 1) = t(i + 1, i) = beta[i];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t, Eigen::EigenvaluesOnly);
  return {es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()};
}

CosineCondition condition_from_gram(const CosineMatrix& c, const Eigen::MatrixXd& g) {
  const double n1 = static_cast<double>(c.entries.rows());  // N + 1
  const double grid = n1 - 1.0;
  CosineCondition out;
  double inv_trace;
  if (c.kind == CosineCase::kPrimePower) {
    out.lambda_min = n1;
    out.lambda_max = 2.0 * grid + 1.0;
    inv_trace = 2.0 / n1 + (grid - 1.0) / (2.0 * grid + 1.0);
  } else {
    out.lambda_min = n1;
    out.lambda_max = 2.0 * n1;
    inv_trace = 1.0 / n1 + grid / (2.0 * n1);
  }
  out.kappa2 = std::sqrt(out.lambda_max / out.lambda_min);
  auto [lo, hi] = extreme_eigenvalues(g);
  if (!(lo > 0.0)) {
    throw Error(ErrorCode::kSingularMatrix,
                "cosine matrix is singular for " + c.conductor.to_string());
  }
  out.kappa2_numeric = std::sqrt(hi / lo);
  out.kappaF = c.entries.norm() * std::sqrt(inv_trace);
  out.kappaF_bound = std::sqrt(2.0) * n1;
  return out;
}

double gram_deviation(const CosineMatrix& c, const Eigen::MatrixXd& g) {
  return (g - gram_closed_form(c)).cwiseAbs().maxCoeff();
}

}  // namespace

CosineMatrix cosine_matrix(const Conductor& c) {
  require_grid(c);
  const std::size_t grid = c.grid_size();
  const Eigen::Index dim = static_cast<Eigen::Index>(grid + 1);
  CosineMatrix out{c,
                   c.prime_power_case() ? CosineCase::kPrimePower : CosineCase::kTwoPower,
                   Eigen::MatrixXd(dim, dim), std::vector<u64>(grid + 1)};
  const auto table = twice_cos_table(c.n());
  if (c.prime_power_case()) {
    for (std::size_t i = 1; i <= grid; ++i) {
      out.sigma[i - 1] = i;
      fill_row(out.entries, static_cast<Eigen::Index>(i - 1), i, c.n(), table);
    }
    // The last row is all ones; it is not an evaluation row and carries
    // the label 0, which is never coprime to n.
    out.entries.row(dim - 1).setOnes();
    out.sigma[grid] = 0;
  } else {
    for (std::size_t i = 0; i <= grid; ++i) {
      out.sigma[i] = 2 * i + 1;
      fill_row(out.entries, static_cast<Eigen::Index>(i), 2 * i + 1, c.n(), table);
    }
  }
  return out;
}

Eigen::MatrixXd gram_closed_form(const CosineMatrix& c) {
  const Eigen::Index dim = c.entries.rows();
  const double grid = static_cast<double>(dim - 1);
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(dim, dim);
  if (c.kind == CosineCase::kPrimePower) {
    g.topLeftCorner(dim - 1, dim - 1).setConstant(-1.0);
    g.topLeftCorner(dim - 1, dim - 1).diagonal().setConstant(2.0 * grid);
    g(dim - 1, dim - 1) = grid + 1.0;
  } else {
    g.diagonal().setConstant(2.0 * (grid + 1.0));
    g(0, 0) = grid + 1.0;
  }
  return g;
}

double gram_check(const CosineMatrix& c) { return gram_deviation(c, computed_gram(c)); }

CosineCondition cosine_condition(const CosineMatrix& c) {
  return condition_from_gram(c, computed_gram(c));
}

CosineReport analyze_cosine(const Conductor& c) {
  CosineMatrix cm = cosine_matrix(c);
  Eigen::MatrixXd g = computed_gram(cm);
  return {c.grid_size(), gram_deviation(cm, g), condition_from_gram(cm, g)};
}

Eigen::MatrixXd embedding_matrix(const Conductor& c) {
  if (c.degenerate()) {
    throw Error(ErrorCode::kInvalidConductor, "degenerate conductor " + c.to_string());
  }
  const u64 n = c.n();
  const Eigen::Index m = static_cast<Eigen::Index>(c.m());
  Eigen::MatrixXd out(m, m);
  const auto table = twice_cos_table(n);
  Eigen::Index row = 0;
  for (u64 sigma = 1; 2 * sigma <= n; ++sigma) {
    if (std::gcd(sigma, n) != 1) continue;
    fill_row(out, row++, sigma, n, table);
  }
  return out;
}

i64 EliminationF::frobenius_sq() const {
  return entries.cast<i64>().cwiseAbs2().sum();
}

i64 EliminationF::closed_form() const {
  const Conductor& c = conductor;
  if (c.prime_power_case()) return static_cast<i64>(c.m());
  return static_cast<i64>(c.k()) * static_cast<i64>(c.spacing() - 1);
}

EliminationF elimination_f(const Conductor& c) {
  require_grid(c);
  const std::size_t m = c.m(), grid = c.grid_size(), h = c.spacing(), k = c.k();
  EliminationF f{c, Eigen::Matrix<std::int8_t, Eigen::Dynamic, Eigen::Dynamic>::Zero(
                        static_cast<Eigen::Index>(m),
                        static_cast<Eigen::Index>(grid + 1 - m))};
  for (std::size_t l = 0; m + l <= grid; ++l) {
    for (std::size_t i = 0; i <= k; ++i) {
      // Column l is minus the reduction of V_{m+l}; the entry attached to
      // V_{ih +- l} is 1 (r = 0) or (-1)^(k-i) (r >= 2).
      const std::int8_t v = c.prime_power_case() || (k - i) % 2 == 0 ? 1 : -1;
      const auto col = static_cast<Eigen::Index>(l);
      if (i < k) f.entries(static_cast<Eigen::Index>(i * h + l), col) = v;
      if (l > 0 && i >= 1) f.entries(static_cast<Eigen::Index>(i * h - l), col) = v;
    }
  }
  return f;
}

std::vector<std::size_t> coprime_first_rows(const CosineMatrix& c) {
  const u64 n = c.conductor.n();
  std::vector<std::size_t> rows(c.sigma.size());
  std::iota(rows.begin(), rows.end(), 0);
  std::stable_partition(rows.begin(), rows.end(),
                        [&](std::size_t i) { return std::gcd(c.sigma[i], n) == 1; });
  return rows;
}

double block_identity_residual(const CosineMatrix& c, const EliminationF& f) {
  const auto rows = coprime_first_rows(c);
  const Eigen::Index m = static_cast<Eigen::Index>(c.conductor.m());
  const Eigen::Index extra = f.entries.cols();
  // Sparse view of F by column.
  std::vector<std::vector<std::pair<Eigen::Index, double>>> cols(extra);
  for (Eigen::Index l = 0; l < extra; ++l) {
    for (Eigen::Index i = 0; i < m; ++i) {
      if (f.entries(i, l) != 0) cols[l].push_back({i, f.entries(i, l)});
    }
  }
  const Eigen::MatrixXd emb = embedding_matrix(c.conductor);
  double worst = 0.0;
  for (Eigen::Index r = 0; r < m; ++r) {
    const auto src = static_cast<Eigen::Index>(rows[r]);
    // The leading block of P C must be M itself.
    worst = std::max(worst,
                     (c.entries.row(src).head(m) - emb.row(r)).cwiseAbs().maxCoeff());
    for (Eigen::Index l = 0; l < extra; ++l) {
      double v = c.entries(src, m + l);
      for (auto [i, w] : cols[l]) v += c.entries(src, i) * w;
      worst = std::max(worst, std::abs(v));
    }
  }
  return worst;
}

EmbeddingCondition embedding_condition(const Conductor& c) {
  const Eigen::MatrixXd mat = embedding_matrix(c);
  const Eigen::Index m = mat.rows();
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(mat);
  if (!(lu.rcond() > 1e-15)) {
    throw Error(ErrorCode::kSingularMatrix,
                "embedding matrix is numerically singular for " + c.to_string());
  }
  Eigen::MatrixXd x = lu.inverse();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(m, m);
  Eigen::MatrixXd residual = id - mat * x;
  x += x * residual;  // one step of Newton-Schulz refinement
  residual.noalias() = id - mat * x;

  EmbeddingCondition out;
  out.inverse_residual = residual.cwiseAbs().maxCoeff();
  if (!(out.inverse_residual <= 1e-8)) {
    throw Error(ErrorCode::kIllConditioned,
                "refined inverse residual " + std::to_string(out.inverse_residual) +
                    " for " + c.to_string());
  }
  out.kappaF_M = mat.norm() * x.norm();
  out.kappaF_M_sq = out.kappaF_M * out.kappaF_M;
  const double n = static_cast<double>(c.n());
  out.ratio = out.kappaF_M_sq / (n * n * n);
  if (c.r() != 1) {
    out.block_residual = block_identity_residual(cosine_matrix(c), elimination_f(c));
  }
  return out;
}

double orthogonality_residual(const Conductor& c) {
  require_grid(c);
  const u64 n = c.n();
  const u64 grid = c.grid_size();
  const auto table = twice_cos_table(n);
  double worst = 0.0;
  if (c.prime_power_case()) {
    for (u64 sigma = 1; sigma < n; ++sigma) {
      double s = 1.0;
      u64 phase = 0;
      for (u64 j = 1; j <= grid; ++j) {
        phase = (phase + sigma) % n;
        s += table[phase];
      }
      worst = std::max(worst, std::abs(s));
    }
  } else {
    for (u64 j = 1; j <= grid; ++j) {
      double s = 0.0;
      for (u64 i = 0; i <= grid; ++i) s += table[(2 * i + 1) * j % n];
      worst = std::max(worst, std::abs(s));
    }
  }
  return worst;
}

std::vector<CondRow> condition_sweep(u64 max_n) {
  const auto conductors = enumerate_conductors(max_n);
  std::vector<std::optional<CondRow>> slots(conductors.size());
  parallel_for(conductors.size(), [&](std::size_t idx) {
    const Conductor& c = conductors[idx];
    CosineMatrix cm = cosine_matrix(c);
    Eigen::MatrixXd g = computed_gram(cm);
    CosineCondition cc = condition_from_gram(cm, g);
    EmbeddingCondition ec = embedding_condition(c);
    EliminationF f = elimination_f(c);
    CondRow row{c};
    row.grid = c.grid_size();
    row.kappa2_C = cc.kappa2_numeric;
    row.kappaF_C = cc.kappaF;
    row.gram_deviation = gram_deviation(cm, g);
    row.kappaF_M_sq = ec.kappaF_M_sq;
    row.ratio = ec.ratio;
    row.block_residual = ec.block_residual;
    row.f_frobenius_sq = f.frobenius_sq();
    row.f_closed_form = f.closed_form();
    slots[idx] = row;
  });
  std::vector<CondRow> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(*s);
  return out;
}

}  // namespace realcyclo
