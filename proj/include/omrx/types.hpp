// omrx - streaming max-norm regularized matrix decomposition
// Copyright 2026 The omrx Contributors
// Licensed under Apache 2.0

#ifndef OMRX_TYPES_HPP
#define OMRX_TYPES_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace omrx {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;
using BoolArray = Eigen::Array<bool, Eigen::Dynamic, 1>;

/// Base class for all omrx errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Linear solve failed (rank-deficient system with zero jitter).
class SingularSystem : public Error {
 public:
  explicit SingularSystem(const std::string& msg) : Error(msg) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

/// Invalid configuration or argument value.
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

/// Reference solver exceeded its time budget.
class TimeBudgetExceeded : public Error {
 public:
  explicit TimeBudgetExceeded(const std::string& msg) : Error(msg) {}
};

/// Which column-wise noise penalty is active.
enum class PenaltyKind {
  L1,        // sum of absolute values; sparse corruption
  L2Column,  // l2 norm of the column; whole-sample outliers
  MaskedL1,  // entry-weighted l1 with weights c (observed) and 1/c (unobserved)
};

/// Noise regularizer acting on one sample's noise vector e.
///
/// For L1 and L2Column the effective threshold is lambda2. For MaskedL1 the
/// threshold is mask_weight_c on observed coordinates and 1/mask_weight_c on
/// unobserved ones; lambda2 is unused in that mode.
struct RegularizerSpec {
  PenaltyKind kind{PenaltyKind::L1};
  double lambda2{0.0};
  double mask_weight_c{0.0};
  BoolArray mask;  // length p, present iff kind == MaskedL1; true = observed

  static RegularizerSpec l1(double lambda2);
  static RegularizerSpec l2_column(double lambda2);
  static RegularizerSpec masked_l1(double c, BoolArray mask);

  // Throws InvalidArgument / DimensionMismatch on violated invariants.
  void validate(Index p) const;
};

/// Tolerances and caps for the per-sample coefficient/noise solver and the
/// basis update.
struct SolverConfig {
  double lambda1{0.0};          // basis max-norm weight; 0 = auto (1/sqrt(p))
  double lambda2{0.0};          // noise penalty weight; 0 = auto (1/sqrt(p))
  double epsilon_jitter{0.01};  // ridge jitter added to every coefficient solve
  double bcd_tol{1e-6};         // stop when max(|dr|_inf, |de|_inf) < bcd_tol
  int bcd_max_iters{100};
  double bisection_tol{1e-6};  // | ||r|| - 1 | tolerance for the dual search
  int bisection_max_iters{200};
  double basis_pass_tol{1e-6};  // early-stop for multi-pass basis updates
  int basis_max_passes{5};      // passes while t <= basis_burn_in
  int basis_burn_in{100};       // one pass per step once t exceeds this

  void validate() const;
};

/// One observed column, optionally with an observation mask (completion mode).
struct SampleVector {
  Vector values;
  std::optional<BoolArray> mask;  // true = observed

  Index size() const { return values.size(); }
};

/// Per-sample solution of min 1/2 |z - Lr - e|^2 + lambda2 * theta(e),
/// |r| <= 1.
struct CoeffNoisePair {
  Vector r;                  // coefficients, |r|_2 <= 1 + tol
  Vector e;                  // structured noise
  double eta{0.0};           // dual multiplier of the ball constraint
  int iterations{0};         // block coordinate descent iterations used
  double kkt_residual{0.0};  // first-order optimality residual
  bool bisection_stalled{false};
};

}  // namespace omrx

#endif  // OMRX_TYPES_HPP
