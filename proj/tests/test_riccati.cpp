#include <doctest.h>

#include "swarmlift/riccati.hpp"
#include "swarmlift/types.hpp"

#include <cmath>
#include <random>

using namespace swarmlift;
using Eigen::MatrixXd;

namespace {

MatrixXd m1(double v) {
  MatrixXd m(1, 1);
  m(0, 0) = v;
  return m;
}

double care_residual_norm(const MatrixXd& A, const MatrixXd& B,
                          const MatrixXd& E, const MatrixXd& H,
                          const MatrixXd& S) {
  const MatrixXd G = B * H.llt().solve(B.transpose());
  return (A.transpose() * S + S * A - S * G * S + E).norm();
}

double fare_residual_norm(const MatrixXd& A, const MatrixXd& C,
                          const MatrixXd& Q, const MatrixXd& R,
                          const MatrixXd& P) {
  const MatrixXd G = C.transpose() * R.llt().solve(C);
  return (A * P + P * A.transpose() - P * G * P + Q).norm();
}

}  // namespace

TEST_CASE("scalar regulator equation with zero drift solves to one") {
  const auto sol = lqg::solve_care(m1(0.0), m1(1.0), m1(1.0), m1(1.0));
  CHECK(std::abs(sol.S(0, 0) - 1.0) < 1e-12);
  CHECK(std::abs(sol.K(0, 0) + 1.0) < 1e-12);
  CHECK(sol.residual < 1e-12 * (1.0 + sol.S.norm()));
}

TEST_CASE("scalar regulator equation with unit drift picks the stabilizing root") {
  // 2S - S^2 + 1 = 0 has roots 1 +/- sqrt(2); only 1 + sqrt(2) closes the
  // loop stably (1 - S = -sqrt(2)).
  const auto sol = lqg::solve_care(m1(1.0), m1(1.0), m1(1.0), m1(1.0));
  CHECK(std::abs(sol.S(0, 0) - (1.0 + std::sqrt(2.0))) < 1e-12);
  CHECK(std::abs(sol.K(0, 0) + (1.0 + std::sqrt(2.0))) < 1e-12);
  CHECK(lqg::max_real_eigenvalue(m1(1.0) + m1(1.0) * sol.K) < 0.0);
}

TEST_CASE("double integrator regulator matches the closed form") {
  MatrixXd A = MatrixXd::Zero(2, 2);
  A(0, 1) = 1.0;
  MatrixXd B = MatrixXd::Zero(2, 1);
  B(1, 0) = 1.0;
  const MatrixXd E = MatrixXd::Identity(2, 2);
  const auto sol = lqg::solve_care(A, B, E, m1(1.0));
  const double r3 = std::sqrt(3.0);
  CHECK(std::abs(sol.S(0, 0) - r3) < 1e-12);
  CHECK(std::abs(sol.S(0, 1) - 1.0) < 1e-12);
  CHECK(std::abs(sol.S(1, 0) - 1.0) < 1e-12);
  CHECK(std::abs(sol.S(1, 1) - r3) < 1e-12);
  CHECK(std::abs(sol.K(0, 0) + 1.0) < 1e-12);
  CHECK(std::abs(sol.K(0, 1) + r3) < 1e-12);
}

TEST_CASE("scalar filter equation mirrors the regulator by duality") {
  const auto sol = lqg::solve_fare(m1(0.0), m1(1.0), m1(1.0), m1(1.0));
  CHECK(std::abs(sol.P(0, 0) - 1.0) < 1e-12);
  CHECK(std::abs(sol.L(0, 0) - 1.0) < 1e-12);
  CHECK(lqg::max_real_eigenvalue(m1(0.0) - sol.L * m1(1.0)) < 0.0);
}

TEST_CASE("random stabilizable systems solve to tight residuals") {
  std::mt19937 rng(777);
  std::normal_distribution<double> g;
  const int n = 12, m = 4;
  for (int trial = 0; trial < 25; ++trial) {
    MatrixXd A(n, n), B(n, m), Ge(n, n), Gh(m, m);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) A(i, j) = g(rng);
      for (int j = 0; j < m; ++j) B(i, j) = g(rng);
      for (int j = 0; j < n; ++j) Ge(i, j) = g(rng);
    }
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) Gh(i, j) = g(rng);
    const MatrixXd E =
        Ge.transpose() * Ge + 0.1 * MatrixXd::Identity(n, n);
    const MatrixXd H =
        Gh.transpose() * Gh + 0.1 * MatrixXd::Identity(m, m);

    const auto sol = lqg::solve_care(A, B, E, H);
    CHECK((sol.S - sol.S.transpose()).norm() < 1e-9 * (1.0 + sol.S.norm()));
    CHECK(care_residual_norm(A, B, E, H, sol.S) <
          1e-9 * (1.0 + sol.S.norm()));
    CHECK(lqg::max_real_eigenvalue(A + B * sol.K) < 0.0);
    // Solution must be positive semidefinite.
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(sol.S);
    CHECK(es.eigenvalues().minCoeff() > -1e-9 * (1.0 + sol.S.norm()));

    // Filter side: reuse E as process covariance, H-sized block as the
    // measurement covariance with C a wide random matrix.
    MatrixXd C(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) C(i, j) = g(rng);
    const auto filt = lqg::solve_fare(A, C, E, H);
    CHECK(fare_residual_norm(A, C, E, H, filt.P) <
          1e-9 * (1.0 + filt.P.norm()));
    CHECK(lqg::max_real_eigenvalue(A - filt.L * C) < 0.0);
  }
}

TEST_CASE("lyapunov solve inverts the simplest contraction") {
  const MatrixXd A = -MatrixXd::Identity(3, 3);
  MatrixXd W(3, 3);
  W << 4, 1, 0, 1, 6, -2, 0, -2, 8;
  const MatrixXd X = lqg::solve_lyapunov(A, W);
  CHECK((X - 0.5 * W).norm() < 1e-12);
}

TEST_CASE("lyapunov solve satisfies its equation for dense stable systems") {
  std::mt19937 rng(2024);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 10; ++trial) {
    MatrixXd G(6, 6), Ws(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        G(i, j) = g(rng);
        Ws(i, j) = g(rng);
      }
    const MatrixXd A =
        -(G.transpose() * G + MatrixXd::Identity(6, 6));  // Hurwitz
    const MatrixXd W = Ws + Ws.transpose();
    const MatrixXd X = lqg::solve_lyapunov(A, W);
    CHECK((A.transpose() * X + X * A + W).norm() < 1e-9 * (1.0 + X.norm()));
    CHECK((X - X.transpose()).norm() < 1e-12 * (1.0 + X.norm()));
  }
}

TEST_CASE("largest eigenvalue real part is reported") {
  MatrixXd D = MatrixXd::Zero(3, 3);
  D.diagonal() << -1.0, -2.0, 3.0;
  CHECK(lqg::max_real_eigenvalue(D) == doctest::Approx(3.0).epsilon(1e-12));
  MatrixXd R(2, 2);
  R << 0, -1, 1, 0;  // eigenvalues +/- i
  CHECK(std::abs(lqg::max_real_eigenvalue(R)) < 1e-12);
}

TEST_CASE("indefinite input weight is rejected") {
  CHECK_THROWS_AS(lqg::solve_care(m1(0.0), m1(1.0), m1(1.0), m1(-1.0)),
                  ConfigError);
  CHECK_THROWS_AS(lqg::solve_care(m1(0.0), m1(1.0), m1(1.0), m1(0.0)),
                  ConfigError);
}

TEST_CASE("mismatched dimensions are rejected") {
  CHECK_THROWS_AS(lqg::solve_care(MatrixXd::Zero(2, 2), MatrixXd::Zero(3, 1),
                                  MatrixXd::Identity(2, 2), m1(1.0)),
                  ConfigError);
}

TEST_CASE("systems without a stabilizing solution are refused") {
  // Unstable drift with no input authority: the stable subspace collapses.
  CHECK_THROWS_AS(lqg::solve_care(m1(1.0), m1(0.0), m1(1.0), m1(1.0)),
                  NotStabilizable);
  // All-zero Hamiltonian: every eigenvalue sits on the imaginary axis.
  CHECK_THROWS_AS(lqg::solve_care(m1(0.0), m1(0.0), m1(0.0), m1(1.0)),
                  NotStabilizable);
}
