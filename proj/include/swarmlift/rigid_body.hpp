#pragma once

#include "swarmlift/types.hpp"

namespace swarmlift::dynamics {

/// Pitch is kept this far (rad) inside +-pi/2; reaching the margin raises
/// GimbalLock instead of silently clamping.
constexpr double kThetaMargin = 1e-3;

/// cos(theta) below this is treated as gimbal lock when inverting the
/// Euler-rate kinematics.
constexpr double kGimbalCos = 1e-6;

/// Mass, inertia, and drag properties of one quadcopter.  Drag is linear in
/// inertial velocity with per-axis coefficients ax, ay, az (N s/m).
struct QuadParams {
  double mass = 0.468;
  double ixx = 4.856e-3;
  double iyy = 4.856e-3;
  double izz = 8.801e-3;
  double ax = 0.25;
  double ay = 0.25;
  double az = 0.25;
  double gravity = 9.81;
};

/// Collective thrust (N, along the body z axis) and body torques (N m).
struct ControlInput {
  double thrust = 0.0;
  Vec3 torque = Vec3::Zero();

  Vec4 to_vec() const { return Vec4(thrust, torque.x(), torque.y(), torque.z()); }
  static ControlInput from_vec(const Vec4& u) {
    return ControlInput{u(0), Vec3(u(1), u(2), u(3))};
  }
};

/// Body-to-inertial rotation for the roll-pitch-yaw (3-2-1) Euler sequence.
Mat3 rotation_321(double phi, double theta, double psi);

/// Inertial direction of the body z axis (thrust direction); equals the
/// third row of rotation_321 read as a column.
Vec3 body_z_axis(double phi, double theta, double psi);

/// Maps Euler angle rates to body rates: (p,q,r) = W * (phi',theta',psi').
Mat3 euler_rate_matrix(double phi, double theta);

/// Inverse map; throws GimbalLock when |cos(theta)| < kGimbalCos.
Mat3 euler_rate_matrix_inverse(double phi, double theta);

/// Time derivative of the 12-component state under thrust/torque input and
/// an external cable force (N, inertial frame, applied at the center of
/// mass).  Gravity and linear drag are internal.  Throws GimbalLock when
/// pitch is within kThetaMargin of +-pi/2.
Vec12 state_derivative(const Vec12& s, const ControlInput& u,
                       const Vec3& cable_force, const QuadParams& p);

}  // namespace swarmlift::dynamics
