#pragma once

#include "swarmlift/types.hpp"

#include <Eigen/Dense>

namespace swarmlift::lqg {

/// Accepted relative residual: solutions must satisfy
/// ||residual|| <= kResidualTol * (1 + ||S||) in Frobenius norm.
constexpr double kResidualTol = 1e-9;

/// Refinement aims an order tighter than the accepted tolerance.
constexpr double kResidualTarget = 1e-12;

/// Cap on Newton refinement steps before declaring non-convergence.
constexpr int kMaxNewtonSteps = 100;

struct CareSolution {
  Eigen::MatrixXd S;  ///< stabilizing solution, symmetric PSD
  Eigen::MatrixXd K;  ///< feedback gain, u = K x stabilizes A + B K
  double residual = 0.0;
  int newton_steps = 0;
};

struct FareSolution {
  Eigen::MatrixXd P;  ///< error covariance, symmetric PSD
  Eigen::MatrixXd L;  ///< observer gain, A - L C is Hurwitz
  double residual = 0.0;
  int newton_steps = 0;
};

/// Solves A'S + SA - S B H^-1 B' S + E = 0 for the stabilizing S: ordered
/// real Schur form of the Hamiltonian selects the stable invariant
/// subspace, then Newton iterations (each a Lyapunov solve) polish the
/// result.  Also returns K = -H^-1 B' S.
///
/// Throws NotStabilizable when the Hamiltonian has imaginary-axis
/// eigenvalues or the closed loop is not Hurwitz, NonConvergence when the
/// residual tolerance cannot be met, ConfigError when H is not positive
/// definite.
CareSolution solve_care(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                        const Eigen::MatrixXd& E, const Eigen::MatrixXd& H);

/// Filter counterpart A P + P A' - P C' R^-1 C P + Q = 0, solved through
/// duality as solve_care(A', C', Q, R).  Returns L = P C' R^-1.
FareSolution solve_fare(const Eigen::MatrixXd& A, const Eigen::MatrixXd& C,
                        const Eigen::MatrixXd& Q, const Eigen::MatrixXd& R);

/// Solves A'X + XA + W = 0 (continuous Lyapunov) by dense vectorization;
/// sized for state dimensions up to a few dozen.
Eigen::MatrixXd solve_lyapunov(const Eigen::MatrixXd& A,
                               const Eigen::MatrixXd& W);

/// Largest real part among the eigenvalues of M.
double max_real_eigenvalue(const Eigen::MatrixXd& M);

}  // namespace swarmlift::lqg
