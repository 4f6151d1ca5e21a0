#include "specband/eig.hpp"

#include <Eigen/Eigenvalues>

namespace specband {

bool is_lower_triangular(const Eigen::MatrixXcd& M) {
    for (Eigen::Index j = 1; j < M.cols(); ++j)
        for (Eigen::Index i = 0; i < j; ++i)
            if (M(i, j) != 0.0) return false;
    return true;
}

bool is_upper_triangular(const Eigen::MatrixXcd& M) {
    for (Eigen::Index j = 0; j < M.cols(); ++j)
        for (Eigen::Index i = j + 1; i < M.rows(); ++i)
            if (M(i, j) != 0.0) return false;
    return true;
}

SpectrumSet eig_dense(const Eigen::MatrixXcd& M) {
    if (M.rows() != M.cols()) throw config_error("eigenvalues need a square matrix");
    if (M.rows() < 1) throw config_error("empty matrix");
    if (M.rows() > kMaxDenseSize)
        throw resource_error("dense eigensolve limited to size 4096");
    const auto m = M.rows();

    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(m));
    if (is_lower_triangular(M) || is_upper_triangular(M)) {
        for (Eigen::Index i = 0; i < m; ++i) pts.push_back(M(i, i));
        return SpectrumSet::tagged(std::move(pts), "eig(triangular,m=" + std::to_string(m) + ")");
    }

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(M, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw numerical_error("eigensolver did not converge within the iteration budget (m=" +
                              std::to_string(m) + ")");
    for (Eigen::Index i = 0; i < m; ++i) pts.push_back(solver.eigenvalues()(i));
    return SpectrumSet::tagged(std::move(pts), "eig(qr,m=" + std::to_string(m) + ")");
}

EigResult eig_dense_with_residuals(const Eigen::MatrixXcd& M) {
    if (M.rows() != M.cols() || M.rows() < 1) throw config_error("bad matrix for eigensolve");
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(M, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success)
        throw numerical_error("eigensolver did not converge within the iteration budget");
    EigResult out;
    out.values = solver.eigenvalues();
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        Eigen::VectorXcd v = solver.eigenvectors().col(i);
        v.normalize();
        out.max_residual =
            std::max(out.max_residual, (M * v - out.values(i) * v).norm());
    }
    return out;
}

}  // namespace specband
