#pragma once

#include "swarmlift/riccati.hpp"
#include "swarmlift/rigid_body.hpp"
#include "swarmlift/types.hpp"

namespace swarmlift::lqg {

/// Finite-difference step floor for the Jacobians.
constexpr double kFdStep = 1e-6;

/// Jacobians of the quad dynamics about one (state, input) pair with the
/// cable force held constant.
struct LinearModel {
  Mat12 A = Mat12::Zero();
  Mat12x4 B = Mat12x4::Zero();
};

/// Cost weights and noise covariances for one design point.  The state is
/// fully measured (C = I).
struct Weights {
  Mat12 state_cost;
  Mat4 input_cost;
  Mat12 process_cov;
  Mat12 measurement_cov;
};

struct GainSet {
  Mat4x12 K = Mat4x12::Zero();  ///< feedback, du = K dx
  Mat12 L = Mat12::Zero();      ///< observer gain
};

/// Central-difference Jacobians with per-coordinate step
/// max(kFdStep, kFdStep * |x_j|).
LinearModel linearize(const Vec12& x0, const Vec4& u0, const Vec3& cable_force,
                      const dynamics::QuadParams& p);

/// Regulator and filter gains for the model under the given weights.
GainSet design_gains(const LinearModel& model, const Weights& w);

/// Deviation-estimate derivative.  The standard form corrects with the
/// innovation L (dy - dxhat); the literal form feeds L dy directly (kept as
/// an option; it does not converge and is only useful for comparison).
Vec12 estimator_derivative(const LinearModel& model, const Mat12& L,
                           const Vec12& dxhat, const Vec4& du, const Vec12& dy,
                           bool literal_innovation);

/// One RK4 step of the estimator with du and dy held constant.
Vec12 estimator_step(const LinearModel& model, const Mat12& L,
                     const Vec12& dxhat, const Vec4& du, const Vec12& dy,
                     double dt, bool literal_innovation);

/// Default dense symmetric 12-state weight: 0.01 times an integer pattern
/// dominated by its diagonal.  Used for both the state cost and, scaled,
/// the noise covariances unless overridden.
Mat12 default_state_matrix();

/// Default input cost 0.01 I4.
Mat4 default_input_cost();

/// Default 3-vector covariance for the payload force disturbance and the
/// cable-geometry position perturbation.
Mat3 default_vector_cov();

}  // namespace swarmlift::lqg
