#pragma once

#include "swarmlift/types.hpp"

#include <cstdint>

namespace swarmlift::sim {

/// Independent noise channels drawn each control tick.
enum class NoiseChannel : std::uint64_t {
  payload_force = 1,
  cable_position = 2,
  measurement = 3,
};

/// Counter-based Gaussian stream: every draw is keyed by (seed, tick,
/// agent, channel), so samples are independent of evaluation order and
/// runs are reproducible bit for bit.
class NoiseStream {
 public:
  explicit NoiseStream(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Standard normal draws; index selects consecutive variates within one
  /// (tick, agent, channel) key.
  double gaussian(std::uint64_t tick, std::uint64_t agent, NoiseChannel ch,
                  std::uint64_t index) const;

  /// Correlated 3-vector with the given covariance factor (lower-triangular
  /// Cholesky factor, cov = F F').
  Vec3 gaussian3(std::uint64_t tick, std::uint64_t agent, NoiseChannel ch,
                 const Mat3& chol_factor) const;

  /// Correlated 12-vector, same contract.
  Vec12 gaussian12(std::uint64_t tick, std::uint64_t agent, NoiseChannel ch,
                   const Mat12& chol_factor) const;

 private:
  std::uint64_t seed_;
};

/// Lower-triangular factor F with cov = F F'.  Throws ConfigError when the
/// matrix is not positive definite.
Mat3 cholesky_factor3(const Mat3& cov);
Mat12 cholesky_factor12(const Mat12& cov);

}  // namespace swarmlift::sim
