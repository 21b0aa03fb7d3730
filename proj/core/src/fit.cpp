#include "kuniv/fit.hpp"

#include <cmath>

#include "kuniv/error.hpp"

namespace kuniv {

namespace {

[[noreturn]] void singular(const std::string& message) {
  throw Error(ErrorCode::SingularSystem, "probe", message);
}

// Symmetric square root R with R^T R = P, negative eigenvalues clipped.
Eigen::MatrixXd penalty_root(const Eigen::MatrixXd& p) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(p);
  const Eigen::VectorXd s = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return eig.eigenvectors() * s.asDiagonal() * eig.eigenvectors().transpose();
}

}  // namespace

Eigen::VectorXd ridge_solve(const Eigen::MatrixXd& design, const Eigen::VectorXd& rhs,
                            double ridge, const std::optional<Eigen::MatrixXd>& penalty) {
  if (!(ridge >= 0.0) || !std::isfinite(ridge)) {
    throw Error(ErrorCode::InvalidValue, "probe", "ridge must be finite and >= 0");
  }
  const Eigen::Index n = design.cols();
  Eigen::VectorXd c;
  if (ridge == 0.0) {
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(design);
    if (cod.rank() < n) singular("design matrix is rank deficient and ridge is 0");
    c = cod.solve(rhs);
  } else {
    const Eigen::MatrixXd root =
        penalty ? penalty_root(*penalty) : Eigen::MatrixXd::Identity(n, n).eval();
    Eigen::MatrixXd aug(design.rows() + n, n);
    aug << design, std::sqrt(ridge) * root;
    Eigen::VectorXd b = Eigen::VectorXd::Zero(design.rows() + n);
    b.head(design.rows()) = rhs;
    c = aug.completeOrthogonalDecomposition().solve(b);
  }
  if (!c.allFinite()) singular("least-squares solve produced non-finite coefficients");
  return c;
}

}  // namespace kuniv
