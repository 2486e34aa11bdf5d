// omrx - streaming max-norm regularized matrix decomposition
// Copyright 2026 The omrx Contributors
// Licensed under Apache 2.0

#include "omrx/prox.hpp"

#include <cmath>

namespace omrx {

RegularizerSpec RegularizerSpec::l1(double lambda2) {
  RegularizerSpec spec;
  spec.kind = PenaltyKind::L1;
  spec.lambda2 = lambda2;
  return spec;
}

RegularizerSpec RegularizerSpec::l2_column(double lambda2) {
  RegularizerSpec spec;
  spec.kind = PenaltyKind::L2Column;
  spec.lambda2 = lambda2;
  return spec;
}

RegularizerSpec RegularizerSpec::masked_l1(double c, BoolArray mask) {
  RegularizerSpec spec;
  spec.kind = PenaltyKind::MaskedL1;
  spec.mask_weight_c = c;
  spec.mask = std::move(mask);
  return spec;
}

void RegularizerSpec::validate(Index p) const {
  if (lambda2 < 0.0) throw InvalidArgument("lambda2 must be nonnegative");
  if (kind == PenaltyKind::MaskedL1) {
    if (mask_weight_c <= 0.0)
      throw InvalidArgument("mask_weight_c must be positive");
    if (mask.size() != p)
      throw DimensionMismatch("mask length " + std::to_string(mask.size()) +
                              " does not match sample length " +
                              std::to_string(p));
  } else if (mask.size() != 0) {
    throw InvalidArgument("mask is only valid for MaskedL1");
  }
}

void SolverConfig::validate() const {
  if (lambda1 < 0.0 || lambda2 < 0.0)
    throw InvalidArgument("penalty weights must be nonnegative");
  if (epsilon_jitter < 0.0)
    throw InvalidArgument("epsilon_jitter must be nonnegative");
  if (bcd_tol <= 0.0 || bisection_tol <= 0.0 || basis_pass_tol <= 0.0)
    throw InvalidArgument("tolerances must be positive");
  if (bcd_max_iters < 1 || bisection_max_iters < 1 || basis_max_passes < 1)
    throw InvalidArgument("iteration caps must be at least 1");
}

double soft_threshold(double v, double tau) {
  if (v > tau) return v - tau;
  if (v < -tau) return v + tau;
  return 0.0;
}

Vector soft_threshold(const Vector& v, double tau) {
  if (tau == 0.0) return v;
  Vector w(v.size());
  for (Index i = 0; i < v.size(); ++i) w[i] = soft_threshold(v[i], tau);
  return w;
}

Vector l2_column_shrink(const Vector& v, double tau) {
  if (tau == 0.0) return v;
  const double norm = v.norm();
  if (norm <= tau) return Vector::Zero(v.size());
  return ((norm - tau) / norm) * v;
}

Vector masked_soft_threshold(const Vector& v, const RegularizerSpec& spec) {
  if (spec.kind != PenaltyKind::MaskedL1)
    throw InvalidArgument("masked_soft_threshold requires a MaskedL1 spec");
  spec.validate(v.size());
  const double c = spec.mask_weight_c;
  const double inv_c = 1.0 / c;
  Vector w(v.size());
  for (Index i = 0; i < v.size(); ++i)
    w[i] = soft_threshold(v[i], spec.mask[i] ? c : inv_c);
  return w;
}

Vector apply_prox(const Vector& v, const RegularizerSpec& spec) {
  switch (spec.kind) {
    case PenaltyKind::L1:
      return soft_threshold(v, spec.lambda2);
    case PenaltyKind::L2Column:
      return l2_column_shrink(v, spec.lambda2);
    case PenaltyKind::MaskedL1:
      return masked_soft_threshold(v, spec);
  }
  throw InvalidArgument("unknown penalty kind");
}

double penalty_value(const Vector& e, const RegularizerSpec& spec) {
  switch (spec.kind) {
    case PenaltyKind::L1:
      return spec.lambda2 * e.lpNorm<1>();
    case PenaltyKind::L2Column:
      return spec.lambda2 * e.norm();
    case PenaltyKind::MaskedL1: {
      const double c = spec.mask_weight_c;
      double total = 0.0;
      for (Index i = 0; i < e.size(); ++i)
        total += (spec.mask[i] ? c : 1.0 / c) * std::abs(e[i]);
      return total;
    }
  }
  throw InvalidArgument("unknown penalty kind");
}

}  // namespace omrx
