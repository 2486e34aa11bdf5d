// omrx - streaming max-norm regularized matrix decomposition
// Copyright 2026 The omrx Contributors
// Licensed under Apache 2.0

#ifndef OMRX_RNG_HPP
#define OMRX_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

#include "omrx/types.hpp"

namespace omrx {

/// Seeded random source with fixed algorithms for every distribution, so a
/// given seed yields the same stream on any platform. std::mt19937_64 is
/// pinned by the standard; the distribution code below is ours.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform on the open interval (0, 1).
  double uniform01() {
    return (static_cast<double>(gen_() >> 11) + 0.5) * kInv53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Integer in [0, n), n >= 1. Rejection-free modulo is biased for huge n;
  /// this uses rejection sampling to stay exact.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % n;
  }

  /// Standard normal via Box-Muller; the second value of each pair is cached.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  Vector gaussian_vector(Index n) {
    Vector v(n);
    for (Index i = 0; i < n; ++i) v[i] = gaussian();
    return v;
  }

  Matrix gaussian_matrix(Index rows, Index cols) {
    Matrix m(rows, cols);
    // Column-major fill order is part of the determinism contract.
    for (Index j = 0; j < cols; ++j)
      for (Index i = 0; i < rows; ++i) m(i, j) = gaussian();
    return m;
  }

  /// Derive an independent child seed (e.g. one per grid repetition).
  std::uint64_t derive(std::uint64_t index) const {
    // SplitMix64 step over (seed, index).
    std::uint64_t x = seed_mix_ + 0x9E3779B97F4A7C15ULL * (index + 1);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
  }

  void record_seed(std::uint64_t seed) { seed_mix_ = seed; }

 private:
  static constexpr double kInv53 = 1.0 / 9007199254740992.0;  // 2^-53

  std::mt19937_64 gen_;
  std::uint64_t seed_mix_{0};
  double spare_{0.0};
  bool has_spare_{false};
};

/// Stateless child-seed derivation used by the grid runner.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  Rng rng(master);
  rng.record_seed(master);
  return rng.derive(index);
}

}  // namespace omrx

#endif  // OMRX_RNG_HPP
