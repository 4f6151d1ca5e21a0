#pragma once

#include <Eigen/Dense>

#include "specband/spectrum_set.hpp"

namespace specband {

inline constexpr Eigen::Index kMaxDenseSize = 4096;

// All m eigenvalues of a dense complex matrix. Exactly triangular
// matrices short-circuit to their diagonal, which keeps nilpotent
// finite sections honest (QR iteration would scatter their eigenvalues
// on a circle of radius ~ eps^(1/m)). Throws numerical_error if the QR
// iteration fails to converge.
SpectrumSet eig_dense(const Eigen::MatrixXcd& M);

// Eigenvalues plus residual information max_i ||M v_i - lambda_i v_i||
// over unit eigenvectors, for the general (non-triangular) path.
struct EigResult {
    Eigen::VectorXcd values;
    double max_residual = 0.0;
};
EigResult eig_dense_with_residuals(const Eigen::MatrixXcd& M);

bool is_lower_triangular(const Eigen::MatrixXcd& M);
bool is_upper_triangular(const Eigen::MatrixXcd& M);

}  // namespace specband
