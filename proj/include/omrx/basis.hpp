// omrx - streaming max-norm regularized matrix decomposition
// Copyright 2026 The omrx Contributors
// Licensed under Apache 2.0

#ifndef OMRX_BASIS_HPP
#define OMRX_BASIS_HPP

#include <cstddef>
#include <cstdint>

#include "omrx/types.hpp"

namespace omrx {

/// Streaming state: the basis plus the two accumulation matrices and the
/// running loss constant. Everything the solver ever needs to keep; its size
/// is O(pd + d^2) and never depends on how many samples have been seen.
struct BasisState {
  Matrix L;  // p x d basis
  Matrix A;  // d x d, sum of r r^T
  Matrix B;  // p x d, sum of (z - e) r^T
  std::uint64_t t{0};
  double loss_const{0.0};  // sum of 1/2 |z_i - e_i|^2 + penalty(e_i)

  Index p() const { return L.rows(); }
  Index d() const { return L.cols(); }

  /// Exact byte count of the numeric state held in memory.
  std::size_t resident_bytes() const {
    return sizeof(double) *
               static_cast<std::size_t>(L.size() + A.size() + B.size()) +
           sizeof(t) + sizeof(loss_const);
  }
};

/// Subgradient of 1/2 |L|_{2,inf}^2: picks the rows of maximum l2 norm
/// (ties within 1e-10 relative) and scales each by 1 / (tie count). Returns
/// the zero matrix for L = 0.
Matrix max_row_norm_subgradient(const Matrix& L);

struct BasisUpdateStats {
  int passes{0};
  double surrogate_before{0.0};  // g_t including the loss constant
  double surrogate_after{0.0};
  int columns_skipped{0};   // A_jj below threshold, update undefined
  int columns_rejected{0};  // update would have increased the surrogate
};

/// One or more column-wise coordinate descent passes on the surrogate
///   g_t(L) = (1/t)(1/2 tr(L^T L A) - tr(L^T B)) + (lambda1 / 2t) |L|_{2,inf}^2
///            + loss_const / t.
/// Runs config.basis_max_passes passes (early-stopped when the largest entry
/// change falls below config.basis_pass_tol) while t <= basis_burn_in, one
/// pass afterwards. Each column update is kept only if it does not increase
/// g_t, so g_t(after) <= g_t(before) always holds.
BasisUpdateStats update_basis(BasisState& state, const SolverConfig& config);

/// g_t at the current basis. include_const adds loss_const / t so the full
/// surrogate is reportable without any per-sample history.
double surrogate_value(const BasisState& state, double lambda1,
                       bool include_const = true);

}  // namespace omrx

#endif  // OMRX_BASIS_HPP
