// omrx - streaming max-norm regularized matrix decomposition
// Copyright 2026 The omrx Contributors
// Licensed under Apache 2.0

#include "omrx/basis.hpp"

#include <cmath>
#include <vector>

namespace omrx {

namespace {

constexpr double kTieRelTol = 1e-10;
constexpr double kZeroEnergy = 1e-12;  // A_jj below this: column is skipped

Matrix subgradient_from_row_sq(const Matrix& L, const Vector& row_sq) {
  Matrix u = Matrix::Zero(L.rows(), L.cols());
  const double max_sq = row_sq.maxCoeff();
  if (max_sq <= 0.0) return u;
  // Ties are detected on the norms; (1 - tol)^2 expressed on squares.
  const double threshold = max_sq * (1.0 - kTieRelTol) * (1.0 - kTieRelTol);
  std::vector<Index> tied;
  for (Index i = 0; i < row_sq.size(); ++i)
    if (row_sq[i] >= threshold) tied.push_back(i);
  const double weight = 1.0 / static_cast<double>(tied.size());
  for (Index i : tied) u.row(i) = weight * L.row(i);
  return u;
}

// Unnormalized data part: 1/2 tr(L^T L A) - tr(L^T B).
double quadratic_part(const Matrix& L, const Matrix& A, const Matrix& B) {
  return 0.5 * (L * A).cwiseProduct(L).sum() - L.cwiseProduct(B).sum();
}

}  // namespace

Matrix max_row_norm_subgradient(const Matrix& L) {
  return subgradient_from_row_sq(L, L.rowwise().squaredNorm());
}

double surrogate_value(const BasisState& state, double lambda1,
                       bool include_const) {
  if (state.t < 1) throw InvalidArgument("surrogate_value requires t >= 1");
  const double inv_t = 1.0 / static_cast<double>(state.t);
  const double max_row_sq = state.L.rowwise().squaredNorm().maxCoeff();
  double value = inv_t * (quadratic_part(state.L, state.A, state.B) +
                          0.5 * lambda1 * max_row_sq);
  if (include_const) value += inv_t * state.loss_const;
  return value;
}

BasisUpdateStats update_basis(BasisState& state, const SolverConfig& config) {
  if (state.t < 1) throw InvalidArgument("update_basis requires t >= 1");
  const Index p = state.p();
  const Index d = state.d();
  const double lambda1 = config.lambda1;
  const double inv_t = 1.0 / static_cast<double>(state.t);

  Matrix& L = state.L;
  const Matrix& A = state.A;
  const Matrix& B = state.B;

  Vector row_sq = L.rowwise().squaredNorm();
  const double h_before = quadratic_part(L, A, B) +
                          0.5 * lambda1 * row_sq.maxCoeff();
  double h_delta = 0.0;

  BasisUpdateStats stats;
  stats.surrogate_before = inv_t * (h_before + state.loss_const);

  const int max_passes =
      state.t > static_cast<std::uint64_t>(config.basis_burn_in)
          ? 1
          : config.basis_max_passes;

  Vector grad(p), step(p), new_col(p), new_row_sq(p);
  for (int pass = 0; pass < max_passes; ++pass) {
    const Matrix u = subgradient_from_row_sq(L, row_sq);
    double max_change = 0.0;
    for (Index j = 0; j < d; ++j) {
      const double ajj = A(j, j);
      if (ajj < kZeroEnergy) {
        ++stats.columns_skipped;
        continue;
      }
      grad.noalias() = L * A.col(j) - B.col(j);
      step = -(grad + lambda1 * u.col(j)) / ajj;
      new_col = L.col(j) + step;

      // Exact surrogate change of this column move. The quadratic term is
      // quadratic in l_j with Hessian A_jj I, so two terms suffice; the
      // max-norm term is re-evaluated from incrementally updated row norms.
      const double d_quad = grad.dot(step) + 0.5 * ajj * step.squaredNorm();
      new_row_sq = row_sq - L.col(j).cwiseAbs2() + new_col.cwiseAbs2();
      const double d_max =
          0.5 * lambda1 * (new_row_sq.maxCoeff() - row_sq.maxCoeff());
      if (d_quad + d_max > 0.0) {
        ++stats.columns_rejected;
        continue;
      }
      h_delta += d_quad + d_max;
      row_sq.swap(new_row_sq);
      L.col(j) = new_col;
      max_change = std::max(max_change, step.lpNorm<Eigen::Infinity>());
    }
    ++stats.passes;
    if (max_change < config.basis_pass_tol) break;
  }

  stats.surrogate_after = inv_t * (h_before + h_delta + state.loss_const);
  return stats;
}

}  // namespace omrx
