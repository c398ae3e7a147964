#include "swarmlift/lqg.hpp"

#include <cmath>

namespace swarmlift::lqg {

LinearModel linearize(const Vec12& x0, const Vec4& u0, const Vec3& cable_force,
                      const dynamics::QuadParams& p) {
  LinearModel m;
  const auto f = [&](const Vec12& x, const Vec4& u) {
    return dynamics::state_derivative(x, dynamics::ControlInput::from_vec(u),
                                      cable_force, p);
  };
  for (int j = 0; j < 12; ++j) {
    const double h = std::max(kFdStep, kFdStep * std::abs(x0(j)));
    Vec12 xp = x0, xm = x0;
    xp(j) = x0(j) + h;
    xm(j) = x0(j) - h;
    m.A.col(j) = (f(xp, u0) - f(xm, u0)) / (xp(j) - xm(j));
  }
  for (int j = 0; j < 4; ++j) {
    const double h = std::max(kFdStep, kFdStep * std::abs(u0(j)));
    Vec4 up = u0, um = u0;
    up(j) = u0(j) + h;
    um(j) = u0(j) - h;
    m.B.col(j) = (f(x0, up) - f(x0, um)) / (up(j) - um(j));
  }
  return m;
}

GainSet design_gains(const LinearModel& model, const Weights& w) {
  GainSet g;
  const CareSolution reg =
      solve_care(model.A, model.B, w.state_cost, w.input_cost);
  g.K = reg.K;
  const FareSolution filt = solve_fare(
      model.A, Eigen::MatrixXd(Mat12::Identity()), w.process_cov,
      w.measurement_cov);
  g.L = filt.L;
  return g;
}

Vec12 estimator_derivative(const LinearModel& model, const Mat12& L,
                           const Vec12& dxhat, const Vec4& du, const Vec12& dy,
                           bool literal_innovation) {
  const Vec12 predict = model.A * dxhat + model.B * du;
  if (literal_innovation) return predict + L * dy;
  return predict + L * (dy - dxhat);
}

Vec12 estimator_step(const LinearModel& model, const Mat12& L,
                     const Vec12& dxhat, const Vec4& du, const Vec12& dy,
                     double dt, bool literal_innovation) {
  const auto f = [&](const Vec12& x) {
    return estimator_derivative(model, L, x, du, dy, literal_innovation);
  };
  const Vec12 k1 = f(dxhat);
  const Vec12 k2 = f(dxhat + 0.5 * dt * k1);
  const Vec12 k3 = f(dxhat + 0.5 * dt * k2);
  const Vec12 k4 = f(dxhat + dt * k3);
  return dxhat + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Mat12 default_state_matrix() {
  static const int pattern[12][12] = {
      {98, 1, -3, 0, 2, 0, 0, 0, 3, -2, -7, 4},
      {1, 91, -1, 0, -4, 2, -1, 3, -4, -2, -3, 0},
      {-3, -1, 98, -4, -2, 0, 0, -5, -3, 5, -1, 2},
      {0, 0, -4, 99, 2, 3, 2, 1, 0, -3, -5, 2},
      {2, -4, -2, 2, 90, 5, -1, 1, 1, 1, 3, 0},
      {0, 2, 0, 3, 5, 95, 1, 0, 1, 0, -1, -6},
      {0, -1, 0, 2, -1, 1, 97, 2, -2, 0, -4, 4},
      {0, 3, -5, 1, 1, 0, 2, 97, 5, -1, 0, 5},
      {3, -4, -3, 0, 1, 1, -2, 5, 98, -2, 1, 0},
      {-2, -2, 5, -3, 1, 0, 0, -1, -2, 96, -2, -1},
      {-7, -3, -1, -5, 3, -1, -4, 0, 1, -2, 101, -1},
      {4, 0, 2, 2, 0, -6, 4, 5, 0, -1, -1, 97}};
  Mat12 m;
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) m(i, j) = 0.01 * pattern[i][j];
  return m;
}

Mat4 default_input_cost() { return 0.01 * Mat4::Identity(); }

Mat3 default_vector_cov() {
  Mat3 c;
  c << 0.9985, 0.0488, 0.0302,
       0.0488, 0.9906, -0.0390,
       0.0302, -0.0390, 0.9840;
  return c;
}

}  // namespace swarmlift::lqg
