#include <doctest.h>

#include "swarmlift/lqg.hpp"
#include "swarmlift/rigid_body.hpp"

#include <cmath>
#include <random>

using namespace swarmlift;

namespace {

lqg::LinearModel hover_model(const dynamics::QuadParams& p) {
  Vec12 x0 = Vec12::Zero();
  Vec4 u0 = Vec4::Zero();
  u0(0) = p.mass * p.gravity;
  return lqg::linearize(x0, u0, Vec3::Zero(), p);
}

}  // namespace

TEST_CASE("hover jacobian reproduces the hand-derived entries") {
  const dynamics::QuadParams p;
  const auto m = hover_model(p);

  // Kinematic identity blocks.
  CHECK(std::abs(m.A(sx::x, sx::u) - 1.0) < 1e-9);
  CHECK(std::abs(m.A(sx::y, sx::v) - 1.0) < 1e-9);
  CHECK(std::abs(m.A(sx::z, sx::w) - 1.0) < 1e-9);
  CHECK(std::abs(m.A(sx::phi, sx::p) - 1.0) < 1e-9);
  CHECK(std::abs(m.A(sx::theta, sx::q) - 1.0) < 1e-9);
  CHECK(std::abs(m.A(sx::psi, sx::r) - 1.0) < 1e-9);

  // Tilting the hover thrust accelerates horizontally by g per radian.
  CHECK(std::abs(m.A(sx::u, sx::theta) - 9.81) < 1e-9);
  CHECK(std::abs(m.A(sx::v, sx::phi) + 9.81) < 1e-9);

  // Drag damping is -a/m on each velocity.
  CHECK(std::abs(m.A(sx::u, sx::u) + 0.25 / 0.468) < 1e-9);
  CHECK(std::abs(m.A(sx::v, sx::v) + 0.25 / 0.468) < 1e-9);
  CHECK(std::abs(m.A(sx::w, sx::w) + 0.25 / 0.468) < 1e-9);

  // Thrust accelerates straight up by 1/m; torques act through the
  // inverse inertia.
  CHECK(std::abs(m.B(sx::w, 0) - 2.1367521367521367) < 1e-9);
  CHECK(std::abs(m.B(sx::u, 0)) < 1e-9);
  CHECK(std::abs(m.B(sx::p, 1) - 1.0 / p.ixx) < 1e-6);
  CHECK(std::abs(m.B(sx::q, 2) - 1.0 / p.iyy) < 1e-6);
  CHECK(std::abs(m.B(sx::r, 3) - 1.0 / p.izz) < 1e-6);

  // Attitude does not feed back into itself at hover.
  CHECK(std::abs(m.A(sx::u, sx::psi)) < 1e-9);
  CHECK(std::abs(m.A(sx::w, sx::phi)) < 1e-9);
  CHECK(std::abs(m.A(sx::w, sx::theta)) < 1e-9);
}

TEST_CASE("jacobian matches directional derivatives away from hover") {
  const dynamics::QuadParams p;
  Vec12 x0 = Vec12::Zero();
  x0(sx::phi) = 0.3;
  x0(sx::theta) = -0.2;
  x0(sx::psi) = 1.1;
  x0(sx::u) = 1.5;
  x0(sx::v) = -0.7;
  x0(sx::w) = 0.4;
  x0(sx::p) = 0.2;
  x0(sx::q) = -0.1;
  x0(sx::r) = 0.05;
  Vec4 u0(5.0, 0.01, -0.02, 0.005);
  const Vec3 cable(0.3, -0.2, -1.0);
  const auto m = lqg::linearize(x0, u0, cable, p);

  std::mt19937 rng(99);
  std::normal_distribution<double> g;
  const double eps = 1e-5;
  for (int trial = 0; trial < 20; ++trial) {
    Vec12 v;
    for (int i = 0; i < 12; ++i) v(i) = g(rng);
    v /= v.norm();
    const auto f = [&](const Vec12& x) {
      return dynamics::state_derivative(
          x, dynamics::ControlInput::from_vec(u0), cable, p);
    };
    const Vec12 dd = (f(x0 + eps * v) - f(x0 - eps * v)) / (2.0 * eps);
    CHECK((dd - m.A * v).norm() < 1e-6);
  }
}

TEST_CASE("designed gains close both loops stably at hover") {
  const dynamics::QuadParams p;
  const auto m = hover_model(p);
  lqg::Weights w;
  w.state_cost = lqg::default_state_matrix();
  w.input_cost = lqg::default_input_cost();
  w.process_cov = lqg::default_state_matrix();
  w.measurement_cov = lqg::default_state_matrix();
  const auto gains = lqg::design_gains(m, w);

  CHECK(lqg::max_real_eigenvalue(m.A + m.B * gains.K) < 0.0);
  // Full-state measurement: the observer loop is A - L.
  CHECK(lqg::max_real_eigenvalue(m.A - gains.L) < 0.0);
}

TEST_CASE("innovation-form estimator converges to a constant measurement") {
  lqg::LinearModel m;  // zero dynamics
  const Mat12 L = Mat12::Identity();
  const Vec12 dy = Vec12::Ones();
  Vec12 dxhat = Vec12::Zero();
  const double dt = 0.01;
  for (int k = 0; k < 100; ++k)
    dxhat = lqg::estimator_step(m, L, dxhat, Vec4::Zero(), dy, dt, false);
  // dxhat' = dy - dxhat integrates to (1 - e^{-t}) dy.
  const double expect = 1.0 - std::exp(-1.0);
  CHECK((dxhat - expect * dy).norm() < 1e-9);

  // Run much longer: the estimate settles on the measurement.
  for (int k = 0; k < 2000; ++k)
    dxhat = lqg::estimator_step(m, L, dxhat, Vec4::Zero(), dy, dt, false);
  CHECK((dxhat - dy).norm() < 1e-8);
}

TEST_CASE("literal-feed estimator ramps without settling") {
  lqg::LinearModel m;  // zero dynamics
  const Mat12 L = Mat12::Identity();
  const Vec12 dy = Vec12::Ones();
  Vec12 dxhat = Vec12::Zero();
  const double dt = 0.01;
  for (int k = 0; k < 100; ++k)
    dxhat = lqg::estimator_step(m, L, dxhat, Vec4::Zero(), dy, dt, true);
  // dxhat' = L dy is constant, so the estimate ramps as t * dy and passes
  // straight through the measurement instead of converging to it.
  CHECK((dxhat - 1.0 * dy).norm() < 1e-12);
  for (int k = 0; k < 100; ++k)
    dxhat = lqg::estimator_step(m, L, dxhat, Vec4::Zero(), dy, dt, true);
  CHECK((dxhat - 2.0 * dy).norm() < 1e-12);
}

TEST_CASE("default weight matrices have the documented shape") {
  const Mat12 q = lqg::default_state_matrix();
  CHECK((q - q.transpose()).norm() == 0.0);
  CHECK(q(0, 0) == doctest::Approx(0.98).epsilon(1e-15));
  CHECK(q(0, 10) == doctest::Approx(-0.07).epsilon(1e-15));
  CHECK(q(10, 10) == doctest::Approx(1.01).epsilon(1e-15));
  Eigen::SelfAdjointEigenSolver<Mat12> es(q);
  CHECK(es.eigenvalues().minCoeff() > 0.0);  // usable as cost or covariance

  const Mat4 r = lqg::default_input_cost();
  CHECK((r - 0.01 * Mat4::Identity()).norm() == 0.0);

  const Mat3 c = lqg::default_vector_cov();
  CHECK(c(0, 0) == doctest::Approx(0.9985).epsilon(1e-15));
  CHECK(c(0, 1) == doctest::Approx(0.0488).epsilon(1e-15));
  CHECK(c(0, 2) == doctest::Approx(0.0302).epsilon(1e-15));
  CHECK(c(1, 1) == doctest::Approx(0.9906).epsilon(1e-15));
  CHECK(c(1, 2) == doctest::Approx(-0.0390).epsilon(1e-15));
  CHECK(c(2, 2) == doctest::Approx(0.9840).epsilon(1e-15));
  CHECK((c - c.transpose()).norm() == 0.0);
  Eigen::SelfAdjointEigenSolver<Mat3> es3(c);
  CHECK(es3.eigenvalues().minCoeff() > 0.0);
}
