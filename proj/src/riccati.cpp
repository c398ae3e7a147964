#include "swarmlift/riccati.hpp"

#include <lapacke.h>

#include <cmath>
#include <sstream>
#include <vector>

extern "C" {
static lapack_logical swarmlift_select_stable(const double* wr,
                                              const double* /*wi*/) {
  return *wr < 0.0;
}
}

namespace swarmlift::lqg {

namespace {

using Eigen::MatrixXd;

double care_residual(const MatrixXd& A, const MatrixXd& G, const MatrixXd& E,
                     const MatrixXd& S) {
  const MatrixXd R = A.transpose() * S + S * A - S * G * S + E;
  return R.norm();
}

/// Stable invariant subspace of the Hamiltonian via ordered real Schur
/// form; returns the subspace basis stacked as [U11; U21].
MatrixXd stable_subspace(const MatrixXd& ham) {
  const lapack_int n2 = static_cast<lapack_int>(ham.rows());
  MatrixXd h = ham;  // overwritten with the Schur form
  MatrixXd vs(n2, n2);
  std::vector<double> wr(static_cast<size_t>(n2)), wi(static_cast<size_t>(n2));
  lapack_int sdim = 0;
  const lapack_int info = LAPACKE_dgees(
      LAPACK_COL_MAJOR, 'V', 'S', swarmlift_select_stable, n2, h.data(), n2,
      &sdim, wr.data(), wi.data(), vs.data(), n2);
  if (info != 0) {
    std::ostringstream os;
    os << "Schur decomposition of the Hamiltonian failed (info = " << info
       << ")";
    throw NonConvergence(os.str());
  }
  if (sdim != n2 / 2) {
    std::ostringstream os;
    os << "Hamiltonian has " << sdim << " strictly stable eigenvalues, expected "
       << n2 / 2 << "; eigenvalues on the imaginary axis";
    throw NotStabilizable(os.str());
  }
  return vs.leftCols(n2 / 2);
}

}  // namespace

Eigen::MatrixXd solve_lyapunov(const MatrixXd& A, const MatrixXd& W) {
  const Eigen::Index n = A.rows();
  const MatrixXd At = A.transpose();
  // Vectorized operator for A'X + XA with column-major stacking.
  MatrixXd M = MatrixXd::Zero(n * n, n * n);
  for (Eigen::Index j = 0; j < n; ++j)
    M.block(j * n, j * n, n, n) = At;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      M.block(i * n, j * n, n, n).diagonal().array() += At(i, j);
  Eigen::VectorXd rhs(n * n);
  for (Eigen::Index j = 0; j < n; ++j) rhs.segment(j * n, n) = -W.col(j);
  const Eigen::VectorXd x = M.partialPivLu().solve(rhs);
  MatrixXd X(n, n);
  for (Eigen::Index j = 0; j < n; ++j) X.col(j) = x.segment(j * n, n);
  return 0.5 * (X + X.transpose());
}

double max_real_eigenvalue(const MatrixXd& M) {
  const Eigen::EigenSolver<MatrixXd> es(M, false);
  return es.eigenvalues().real().maxCoeff();
}

CareSolution solve_care(const MatrixXd& A, const MatrixXd& B,
                        const MatrixXd& E, const MatrixXd& H) {
  const Eigen::Index n = A.rows();
  const Eigen::Index m = B.cols();
  if (A.cols() != n || B.rows() != n || E.rows() != n || E.cols() != n ||
      H.rows() != m || H.cols() != m)
    throw ConfigError("Riccati solve: inconsistent matrix dimensions");

  const Eigen::LLT<MatrixXd> hllt(H);
  if (hllt.info() != Eigen::Success)
    throw ConfigError("Riccati solve: input weight H is not positive definite");
  const MatrixXd G = B * hllt.solve(B.transpose());

  MatrixXd ham(2 * n, 2 * n);
  ham.topLeftCorner(n, n) = A;
  ham.topRightCorner(n, n) = -G;
  ham.bottomLeftCorner(n, n) = -E;
  ham.bottomRightCorner(n, n) = -A.transpose();

  const MatrixXd U = stable_subspace(ham);
  const MatrixXd U11 = U.topRows(n);
  const MatrixXd U21 = U.bottomRows(n);
  const Eigen::FullPivLU<MatrixXd> lu(U11.transpose());
  if (!lu.isInvertible())
    throw NotStabilizable(
        "stable subspace is not a graph over the state space");
  MatrixXd S = lu.solve(U21.transpose()).transpose();
  S = 0.5 * (S + S.transpose()).eval();

  // Newton polish: each step solves a Lyapunov equation for the closed
  // loop of the current iterate.
  CareSolution out;
  double res = care_residual(A, G, E, S);
  double scale = 1.0 + S.norm();
  int steps = 0;
  while (res > kResidualTarget * scale && steps < kMaxNewtonSteps) {
    const MatrixXd Acl = A - G * S;
    const MatrixXd W = E + S * G * S;
    const MatrixXd Snew = solve_lyapunov(Acl, W);
    const double res_new = care_residual(A, G, E, Snew);
    const double scale_new = 1.0 + Snew.norm();
    ++steps;
    if (res_new >= res) break;  // stagnated at rounding level
    S = Snew;
    res = res_new;
    scale = scale_new;
  }
  if (res > kResidualTol * scale) {
    std::ostringstream os;
    os << "Riccati residual " << res << " above " << kResidualTol * scale
       << " after " << steps << " refinement steps";
    throw NonConvergence(os.str());
  }

  const double stability_margin = max_real_eigenvalue(A - G * S);
  if (stability_margin >= 0.0) {
    std::ostringstream os;
    os << "closed loop not Hurwitz: max eigenvalue real part "
       << stability_margin;
    throw NotStabilizable(os.str());
  }

  out.S = S;
  out.K = -hllt.solve(B.transpose() * S);
  out.residual = res;
  out.newton_steps = steps;
  return out;
}

FareSolution solve_fare(const MatrixXd& A, const MatrixXd& C,
                        const MatrixXd& Q, const MatrixXd& R) {
  const CareSolution dual =
      solve_care(A.transpose(), C.transpose(), Q, R);
  FareSolution out;
  out.P = dual.S;
  const Eigen::LLT<MatrixXd> rllt(R);
  if (rllt.info() != Eigen::Success)
    throw ConfigError(
        "filter Riccati solve: measurement covariance R is not positive "
        "definite");
  out.L = rllt.solve(C * out.P).transpose();
  out.residual = dual.residual;
  out.newton_steps = dual.newton_steps;
  return out;
}

}  // namespace swarmlift::lqg
