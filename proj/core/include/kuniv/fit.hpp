#pragma once

// Ridge-regularized least squares shared by the probes.

#include <optional>

#include <Eigen/Dense>

namespace kuniv {

/// Minimizes |A c - b|^2 + ridge * c^T P c. P must be symmetric PSD; when
/// absent P = I. Throws SingularSystem when ridge == 0 and A is rank
/// deficient, or when the solve produces non-finite values.
Eigen::VectorXd ridge_solve(const Eigen::MatrixXd& design, const Eigen::VectorXd& rhs,
                            double ridge, const std::optional<Eigen::MatrixXd>& penalty = {});

}  // namespace kuniv
