#pragma once

#include "swarmlift/types.hpp"

#include <vector>

namespace swarmlift::payload {

/// Quad-to-payload separations below this are degenerate geometry.
constexpr double kMinSeparation = 1e-9;

/// One elastic cord from a quadcopter to the payload attachment point.
struct CableSpec {
  int agent = 0;           ///< index of the quad this cord hangs from
  double stiffness = 0.0;  ///< N/m
  double free_length = 0.0;  ///< unstretched length, m
};

/// Point-mass payload with linear drag (force = -drag .* velocity).
struct PayloadParams {
  double mass = 10.0;
  Vec3 drag = Vec3(4.0, 4.0, 4.0);
  double gravity = 9.81;
  /// Covariance of the stochastic force disturbance (N^2); sampling happens
  /// in the simulation's noise model, this is carried for reference.
  Mat3 disturbance_cov = Mat3::Identity();
};

/// Spring force exerted ON THE PAYLOAD by one cord: k (l - l0) toward the
/// quad when stretched, zero when slack (unless allow_compression, which
/// keeps the signed law and pushes when compressed).  Throws
/// CoincidentEndpoints when the separation is below kMinSeparation.
Vec3 cable_force(const Vec3& quad_pos, const Vec3& payload_pos,
                 const CableSpec& cable, bool allow_compression = false);

/// Stretched length that balances the payload weight when N identical cords
/// of stiffness k hang vertically: solves N k (l - l0) = m g with
/// l0 = l / stretch_ratio.
double equilibrium_length(double payload_mass, double gravity, int n_cables,
                          double stiffness, double stretch_ratio);

/// Payload acceleration: (sum of cable forces + drag + disturbance)/m - g K.
Vec3 payload_acceleration(const Vec3& payload_vel,
                          const std::vector<Vec3>& cable_forces,
                          const Vec3& disturbance, const PayloadParams& p);

}  // namespace swarmlift::payload
