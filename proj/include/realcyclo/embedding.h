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

// Cosine matrices, the canonical embedding matrix and the column
// elimination that links them, with numerical checks of their Gram
// matrices and condition numbers.
//
// Prime-power case (r = 0, N = (p^s - 1)/2): rows i = 1..N of C hold
// V_j(2 cos(2 pi i / p^s)), followed by a row of ones. Then
//   C C^T = [[(2N + 1) I - J, 0], [0, N + 1]].
// Other case (r >= 2, N = 2^(r-2) p^s - 1): C[i][j] = V_j(2 cos(2 pi (2i+1)/n)),
// i = 0..N. Then C^T C = diag(N + 1, 2(N + 1), ..., 2(N + 1)).
//
// Reordering the rows so the m rows with sigma coprime to n come first
// gives P C = [[M, B], [A, D]] with M the embedding matrix. Because
// V_{m+l} reduces modulo Psi_n to a signed sum of lower V_j, B = -M F for
// a {-1, 0, 1} matrix F, and R = [[I, F], [0, I]] clears B.

#ifndef REALCYCLO_EMBEDDING_H_
#define REALCYCLO_EMBEDDING_H_

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "realcyclo/minpoly.h"

namespace realcyclo {

enum class CosineCase { kPrimePower, kTwoPower };

struct CosineMatrix {
  Conductor conductor;
  CosineCase kind;
  Eigen::MatrixXd entries;   // (N + 1) x (N + 1)
  std::vector<u64> sigma;    // row i evaluates at 2 cos(2 pi sigma[i] / n)
};

// Throws InvalidConductor for r = 1 or degenerate conductors.
CosineMatrix cosine_matrix(const Conductor& c);

// Expected C C^T (prime-power) or C^T C (other case).
Eigen::MatrixXd gram_closed_form(const CosineMatrix& c);

// Max entrywise deviation of the computed Gram matrix from the closed form.
double gram_check(const CosineMatrix& c);

struct CosineCondition {
  double kappa2 = 0.0;          // from the closed-form eigenvalues
  double kappa2_numeric = 0.0;  // from computed extreme eigenvalues
  double kappaF = 0.0;          // ||C||_F ||C^-1||_F
  double kappaF_bound = 0.0;    // sqrt(2) (N + 1)
  double lambda_min = 0.0;
  double lambda_max = 0.0;
};

// Throws SingularMatrix if the computed Gram spectrum has a zero.
CosineCondition cosine_condition(const CosineMatrix& c);

struct CosineReport {
  std::size_t grid = 0;
  double gram_deviation = 0.0;
  CosineCondition condition;
};

// gram_check and cosine_condition sharing a single Gram product.
CosineReport analyze_cosine(const Conductor& c);

// m x m matrix of V_j(2 cos(2 pi sigma / n)), sigma <= n/2 coprime to n.
Eigen::MatrixXd embedding_matrix(const Conductor& c);

struct EliminationF {
  Conductor conductor;
  Eigen::Matrix<std::int8_t, Eigen::Dynamic, Eigen::Dynamic> entries;  // m x (N+1-m)

  i64 frobenius_sq() const;
  // m when r = 0; (p-1)/2 (2^(r-1) p^(s-1) - 1) when r >= 2.
  i64 closed_form() const;
};

EliminationF elimination_f(const Conductor& c);

// Row order for P: coprime sigma first, each group in increasing row index.
std::vector<std::size_t> coprime_first_rows(const CosineMatrix& c);

// max |(P C R)[0..m, m..N]|, with R built from F.
double block_identity_residual(const CosineMatrix& c, const EliminationF& f);

struct EmbeddingCondition {
  double kappaF_M = 0.0;
  double kappaF_M_sq = 0.0;
  double ratio = 0.0;             // kappaF_M_sq / n^3
  double inverse_residual = 0.0;  // ||I - M X||_max after refinement
  double block_residual = 0.0;
};

// Dense inverse of M by partial-pivot LU plus one refinement step. Throws
// IllConditioned if the refined residual exceeds 1e-8.
EmbeddingCondition embedding_condition(const Conductor& c);

// Max |sum| over the vanishing cosine sums behind the Gram closed forms:
// 1 + sum_{j=1..N} 2 cos(2 pi sigma j / p^s) for p^s not dividing sigma
// (r = 0), and sum_{i=0..N} 2 cos(2 pi (2i+1) j / n) for j = 1..N (r >= 2).
double orthogonality_residual(const Conductor& c);

struct CondRow {
  Conductor conductor;
  std::size_t grid = 0;
  double kappa2_C = 0.0;
  double kappaF_C = 0.0;
  double gram_deviation = 0.0;
  double kappaF_M_sq = 0.0;
  double ratio = 0.0;
  double block_residual = 0.0;
  i64 f_frobenius_sq = 0;
  i64 f_closed_form = 0;
};

// Every conductor with n <= max_n (r = 0 or r >= 2, m >= 2), computed in
// parallel and returned in increasing n.
std::vector<CondRow> condition_sweep(u64 max_n);

}  // namespace realcyclo

#endif  // REALCYCLO_EMBEDDING_H_
