// omrx - streaming max-norm regularized matrix decomposition
// Copyright 2026 The omrx Contributors
// Licensed under Apache 2.0

#include "omrx/coeff.hpp"

#include <Eigen/Cholesky>

#include <cmath>
#include <limits>

#include "omrx/prox.hpp"

namespace omrx {

namespace {

// Solves (G + shift I) x = b for a PSD Gram matrix G. Factorizes per call;
// G is d x d so this is O(d^3), small next to forming G itself.
Vector shifted_solve(const Matrix& gram, double shift, const Vector& b) {
  const Index d = gram.rows();
  if (shift > 0.0) {
    Matrix shifted = gram;
    shifted.diagonal().array() += shift;
    Eigen::LLT<Matrix> llt(shifted);
    if (llt.info() == Eigen::Success) return llt.solve(b);
    // PD by construction; fall through to LDLT only on numerical breakdown.
  }
  Eigen::LDLT<Matrix> ldlt(shift > 0.0
                               ? Matrix(gram + shift * Matrix::Identity(d, d))
                               : gram);
  const auto diag = ldlt.vectorD();
  const double max_pivot = diag.cwiseAbs().maxCoeff();
  if (ldlt.info() != Eigen::Success || max_pivot <= 0.0 ||
      diag.cwiseAbs().minCoeff() <= 1e-13 * max_pivot) {
    throw SingularSystem(
        "coefficient system is rank deficient; provide a positive jitter");
  }
  return ldlt.solve(b);
}

struct CoeffWorkspace {
  Matrix gram;  // L^T L
  Vector lt_z;  // L^T z

  CoeffWorkspace(const Matrix& L, const Vector& z)
      : gram(L.transpose() * L), lt_z(L.transpose() * z) {}
};

ConstrainedCoeff bisect_on_gram(const Matrix& gram, const Vector& b,
                                const SolverConfig& config) {
  ConstrainedCoeff out;
  double eta_lo = 0.0;
  double eta_hi = 1.0;
  Vector r = shifted_solve(gram, eta_hi, b);
  int doublings = 0;
  while (r.norm() > 1.0) {
    eta_lo = eta_hi;
    eta_hi *= 2.0;
    if (++doublings > 1024) throw Error("bisection bracket overflow");
    r = shifted_solve(gram, eta_hi, b);
  }
  // Invariant: |r(eta_lo)| >= 1 >= |r(eta_hi)|.
  double eta = eta_hi;
  for (int iter = 0; iter < config.bisection_max_iters; ++iter) {
    eta = 0.5 * (eta_lo + eta_hi);
    r = shifted_solve(gram, eta, b);
    const double norm = r.norm();
    if (std::abs(norm - 1.0) <= config.bisection_tol) {
      out.r = std::move(r);
      out.eta = eta;
      return out;
    }
    if (norm < 1.0) {
      eta_hi = eta;
    } else {
      eta_lo = eta;
    }
  }
  out.stalled = true;
  out.eta = 0.5 * (eta_lo + eta_hi);
  out.r = shifted_solve(gram, out.eta, b);
  if (out.r.norm() > 1.0 + config.bisection_tol) {
    // Fall back to the feasible endpoint so callers never see |r| > 1 + tol.
    out.eta = eta_hi;
    out.r = shifted_solve(gram, out.eta, b);
  }
  return out;
}

}  // namespace

Vector ridge_candidate(const Matrix& L, const Vector& z, const Vector& e,
                       double epsilon) {
  if (z.size() != L.rows() || e.size() != L.rows())
    throw DimensionMismatch("ridge_candidate: z/e length must equal rows(L)");
  if (epsilon < 0.0) throw InvalidArgument("epsilon must be nonnegative");
  const Matrix gram = L.transpose() * L;
  const Vector b = L.transpose() * (z - e);
  return shifted_solve(gram, epsilon, b);
}

ConstrainedCoeff constrained_r(const Matrix& L, const Vector& z,
                               const Vector& e, const SolverConfig& config) {
  if (z.size() != L.rows() || e.size() != L.rows())
    throw DimensionMismatch("constrained_r: z/e length must equal rows(L)");
  const Matrix gram = L.transpose() * L;
  const Vector b = L.transpose() * (z - e);
  return bisect_on_gram(gram, b, config);
}

double coeff_objective(const Matrix& L, const Vector& z, const Vector& r,
                       const Vector& e, const RegularizerSpec& spec) {
  return 0.5 * (z - L * r - e).squaredNorm() + penalty_value(e, spec);
}

CoeffNoisePair solve_coeff_noise(const Matrix& L, const Vector& z,
                                 const RegularizerSpec& spec,
                                 const SolverConfig& config,
                                 const BcdObserver& observer) {
  const Index p = L.rows();
  const Index d = L.cols();
  if (z.size() != p)
    throw DimensionMismatch("solve_coeff_noise: sample length mismatch");
  spec.validate(p);
  config.validate();

  const CoeffWorkspace ws(L, z);
  const double eps = config.epsilon_jitter;

  CoeffNoisePair pair;
  pair.r = Vector::Zero(d);
  pair.e = Vector::Zero(p);

  Vector b(d);
  for (int iter = 1; iter <= config.bcd_max_iters; ++iter) {
    b.noalias() = ws.lt_z - L.transpose() * pair.e;

    Vector r_new = shifted_solve(ws.gram, eps, b);
    double eta = 0.0;
    bool stalled = false;
    if (r_new.norm() > 1.0) {
      ConstrainedCoeff boundary = bisect_on_gram(ws.gram, b, config);
      r_new = std::move(boundary.r);
      eta = boundary.eta;
      stalled = boundary.stalled;
    }

    Vector e_new = apply_prox(z - L * r_new, spec);

    const double delta =
        std::max((r_new - pair.r).lpNorm<Eigen::Infinity>(),
                 (e_new - pair.e).lpNorm<Eigen::Infinity>());
    pair.r = std::move(r_new);
    pair.e = std::move(e_new);
    pair.eta = eta;
    pair.bisection_stalled = pair.bisection_stalled || stalled;
    pair.iterations = iter;

    if (observer) {
      const double obj = coeff_objective(L, z, pair.r, pair.e, spec) +
                         0.5 * eps * pair.r.squaredNorm();
      observer(iter, obj);
    }
    if (delta < config.bcd_tol) break;
  }

  // First-order residual of the subproblem at the returned triple. The
  // r block is measured against the final e (one e update stale); the e
  // block is exact by construction of the prox step.
  const Vector b_final = ws.lt_z - L.transpose() * pair.e;
  const double eta_eff = pair.eta > 0.0 ? pair.eta : eps;
  const double stationarity =
      (ws.gram * pair.r + eta_eff * pair.r - b_final)
          .lpNorm<Eigen::Infinity>();
  const double norm_r = pair.r.norm();
  const double primal_violation = std::max(0.0, norm_r - 1.0);
  const double slackness = pair.eta * std::abs(norm_r - 1.0);
  pair.kkt_residual =
      std::max({stationarity, primal_violation, slackness});

  if (norm_r > 1.0 + config.bisection_tol)
    throw Error("solve_coeff_noise produced an infeasible coefficient vector");
  return pair;
}

}  // namespace omrx
