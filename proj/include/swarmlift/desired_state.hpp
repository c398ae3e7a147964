#pragma once

#include "swarmlift/rigid_body.hpp"
#include "swarmlift/types.hpp"

namespace swarmlift::desired {

/// Thrust magnitudes below this cannot define a thrust direction.
constexpr double kMinThrust = 1e-9;

/// Desired thrust magnitude, thrust direction, and the roll/pitch that
/// realize it at the given yaw.
struct ThrustAttitude {
  double thrust = 0.0;
  Vec3 body_z = Vec3(0.0, 0.0, 1.0);
  double phi = 0.0;
  double theta = 0.0;
};

/// Complete desired state and input for one agent over one control
/// interval.
struct Assembly {
  Vec12 state = Vec12::Zero();  ///< positions/angles/velocities/rates
  Vec4 input = Vec4::Zero();    ///< thrust and torques
  ThrustAttitude ta;
};

/// Inverts the translational dynamics: the thrust vector must supply
/// m * accel plus gravity and overcome drag and the cable force.  Throws
/// DegenerateForce when the required force is below kMinThrust and
/// AttitudeOutOfRange when no roll/pitch in (-pi/2, pi/2) realizes the
/// direction at the given yaw.
ThrustAttitude desired_thrust_attitude(const Vec3& accel, const Vec3& vel,
                                       const Vec3& cable_force,
                                       const dynamics::QuadParams& p,
                                       double psi);

/// Body rates matching Euler-angle rates at the given attitude.
Vec3 body_rates(double phi, double theta, const Vec3& euler_rates);

/// Torques that produce the given body-rate derivatives at the given rates
/// (rigid-body Euler equations with diagonal inertia).
Vec3 desired_torques(const Vec3& rates, const Vec3& rate_derivs,
                     const dynamics::QuadParams& p);

/// Builds the full desired state/input for the interval starting at the
/// given position/velocity/acceleration sample.  Angle and body-rate
/// histories come from backward differences against prev over dt; pass
/// first = true for the first interval, which uses zero rates and rate
/// derivatives.
Assembly assemble(const Vec3& position, const Vec3& velocity,
                  const Vec3& accel, const Vec3& cable_force,
                  const dynamics::QuadParams& p, double psi,
                  const Assembly& prev, double dt, bool first);

}  // namespace swarmlift::desired
