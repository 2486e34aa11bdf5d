// omrx - streaming max-norm regularized matrix decomposition
// Copyright 2026 The omrx Contributors
// Licensed under Apache 2.0

#ifndef OMRX_PROX_HPP
#define OMRX_PROX_HPP

#include "omrx/types.hpp"

namespace omrx {

/// Entry-wise shrinkage toward zero: the exact minimizer of
/// 1/2 |v - e|^2 + tau |e|_1. tau = 0 returns v unchanged.
Vector soft_threshold(const Vector& v, double tau);

/// Scalar form of the above.
double soft_threshold(double v, double tau);

/// Whole-vector shrinkage: the exact minimizer of 1/2 |v - e|^2 + tau |e|_2.
/// Returns 0 when |v|_2 <= tau, otherwise v scaled by (|v|_2 - tau) / |v|_2.
Vector l2_column_shrink(const Vector& v, double tau);

/// Coordinate-wise soft threshold with weight c on observed coordinates and
/// 1/c on unobserved ones. spec.kind must be MaskedL1.
Vector masked_soft_threshold(const Vector& v, const RegularizerSpec& spec);

/// Dispatch on spec.kind.
Vector apply_prox(const Vector& v, const RegularizerSpec& spec);

/// Penalty value theta(e) scaled by its weight: lambda2 * |e|_1,
/// lambda2 * |e|_2, or |m o e|_1 depending on spec.kind. This is the term the
/// prox above minimizes together with the quadratic.
double penalty_value(const Vector& e, const RegularizerSpec& spec);

}  // namespace omrx

#endif  // OMRX_PROX_HPP
