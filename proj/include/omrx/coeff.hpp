// omrx - streaming max-norm regularized matrix decomposition
// Copyright 2026 The omrx Contributors
// Licensed under Apache 2.0

#ifndef OMRX_COEFF_HPP
#define OMRX_COEFF_HPP

#include <functional>

#include "omrx/types.hpp"

namespace omrx {

/// Unconstrained ridge iterate r0 = (L^T L + eps I)^-1 L^T (z - e).
/// epsilon = 0 requires L with full column rank; otherwise SingularSystem.
Vector ridge_candidate(const Matrix& L, const Vector& z, const Vector& e,
                       double epsilon);

struct ConstrainedCoeff {
  Vector r;
  double eta{0.0};
  bool stalled{false};  // bisection hit its iteration cap
};

/// Boundary solution of min 1/2 |z - Lr - e|^2 over the unit ball, assuming
/// the ridge candidate is infeasible: bisection on eta for
/// r(eta) = (L^T L + eta I)^-1 L^T (z - e) with |r(eta)|_2 = 1. The norm of
/// r(eta) is strictly decreasing in eta, so the bracket [0, eta2] with eta2
/// grown by doubling always contains the root.
ConstrainedCoeff constrained_r(const Matrix& L, const Vector& z,
                               const Vector& e, const SolverConfig& config);

/// Called after every block coordinate descent iteration with the value of
/// the jittered objective 1/2 |z-Lr-e|^2 + eps/2 |r|^2 + penalty(e).
using BcdObserver = std::function<void(int iteration, double objective)>;

/// Alternating solver for {r, e} = argmin 1/2 |z - Lr - e|^2 + penalty(e)
/// subject to |r|_2 <= 1, starting from e = 0. Stops when the iterate change
/// max(|dr|_inf, |de|_inf) falls below config.bcd_tol or the iteration cap is
/// reached.
CoeffNoisePair solve_coeff_noise(const Matrix& L, const Vector& z,
                                 const RegularizerSpec& spec,
                                 const SolverConfig& config,
                                 const BcdObserver& observer = nullptr);

/// Value of 1/2 |z - Lr - e|^2 + penalty(e) at the given point.
double coeff_objective(const Matrix& L, const Vector& z, const Vector& r,
                       const Vector& e, const RegularizerSpec& spec);

}  // namespace omrx

#endif  // OMRX_COEFF_HPP
