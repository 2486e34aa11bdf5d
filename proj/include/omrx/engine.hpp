// omrx - streaming max-norm regularized matrix decomposition
// Copyright 2026 The omrx Contributors
// Licensed under Apache 2.0

#ifndef OMRX_ENGINE_HPP
#define OMRX_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "omrx/basis.hpp"
#include "omrx/types.hpp"

namespace omrx {

enum class EngineMode : std::uint8_t {
  Decomposition = 0,
  Completion = 1,
};

struct EngineConfig {
  Index p{0};
  Index d{0};
  EngineMode mode{EngineMode::Decomposition};
  PenaltyKind penalty{PenaltyKind::L1};  // decomposition-mode noise penalty
  double completion_c{1e3};              // observed-entry weight, completion
  SolverConfig solver;
  std::uint64_t init_seed{0};
  std::uint64_t checkpoint_every{0};  // 0 = never
  std::string checkpoint_path;
  std::uint64_t monitor_every{0};  // cadence of lambda_min(A/t) diagnostics

  /// Copy with lambda1/lambda2 set to 1/sqrt(p) wherever they were left at 0.
  EngineConfig resolved() const;
  void validate() const;
};

/// Per-sample scalar summary handed to the report sink.
struct StepReport {
  std::uint64_t t{0};
  double eta{0.0};
  int coeff_iterations{0};
  double kkt_residual{0.0};
  double surrogate{0.0};
  std::int64_t wall_nanos{0};
  // Diagnostics.
  double a_min_eig{std::numeric_limits<double>::quiet_NaN()};
  bool fully_unobserved{false};
  int basis_columns_rejected{0};
};

/// Fresh state: A and B zero, t = 0, L0 with i.i.d. N(0, 1/d) entries drawn
/// from config.init_seed.
BasisState init_engine(const EngineConfig& config);

/// One streaming iteration: solve {r, e} against the current basis, fold the
/// sample into the accumulators, then refresh the basis. The basis sub-step
/// never increases the surrogate; the report carries its value after the
/// step. `captured`, when non-null, receives the per-sample solution.
StepReport step(BasisState& state, const SampleVector& z,
                const EngineConfig& config,
                CoeffNoisePair* captured = nullptr);

using SampleSource = std::function<std::optional<SampleVector>()>;
using ReportSink = std::function<void(const StepReport&)>;

/// Folds step over the stream until the source is exhausted. Rejects
/// non-finite input with the sample index and coordinate in the message.
/// Resident state stays O(pd + d^2) regardless of the stream length.
BasisState run_stream(const SampleSource& source, const EngineConfig& config,
                      const ReportSink& sink,
                      std::optional<BasisState> resume = std::nullopt);

// Checkpoint I/O. Binary format (little-endian):
//   "OMRX" | version u16 | mode u8 | p u32 | d u32 | t u64 |
//   L, A, B row-major f64 | loss_const f64 | CRC-32C u32 of all prior bytes.
inline constexpr std::uint16_t kCheckpointVersion = 1;

class CheckpointError : public Error {
 public:
  enum class Code { BadMagic, VersionMismatch, Truncated, ChecksumMismatch, Io };

  CheckpointError(Code code, const std::string& msg)
      : Error(msg), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

void save_checkpoint(const BasisState& state, EngineMode mode,
                     const std::string& path);

struct LoadedCheckpoint {
  BasisState state;
  EngineMode mode{EngineMode::Decomposition};
};

LoadedCheckpoint load_checkpoint(const std::string& path);

/// Validates a loaded checkpoint against an engine config before resuming.
/// Throws DimensionMismatch / InvalidArgument when they disagree.
void check_resume_compatible(const LoadedCheckpoint& loaded,
                             const EngineConfig& config);

}  // namespace omrx

#endif  // OMRX_ENGINE_HPP
