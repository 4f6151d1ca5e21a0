#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "specband/sigma_min.hpp"
#include "specband/spectrum_set.hpp"

namespace specband {

// Rectangular sampling grid in the complex plane.
struct GridSpec {
    double re_lo = -1.0, re_hi = 1.0;
    double im_lo = -1.0, im_hi = 1.0;
    double step = 0.02;

    std::int64_t n_re() const;
    std::int64_t n_im() const;
    std::int64_t nodes() const { return n_re() * n_im(); }
    Complex node(std::int64_t i_re, std::int64_t i_im) const;
};

// [-R, R]^2 with R = radius_bound + pad; spectra live in the closed
// disc of radius ||A||_W, so the Wiener norm certifies the enclosure.
GridSpec default_grid(double radius_bound, double step = 0.02, double pad = 0.5);

struct PseudospecGrid {
    GridSpec grid;
    std::vector<double> eps;
    Eigen::MatrixXd sigma;  // (n_im x n_re), sigma(i_im, i_re)

    // Grid nodes with sigma <= eps, row-major deterministic order.
    // Nested in eps by construction.
    std::vector<Complex> indicator(double eps_value) const;
};

// sigma_min(M - z I) over the grid; dense SVD per node.
PseudospecGrid pseudospectrum(const Eigen::MatrixXcd& M, const GridSpec& grid,
                              std::vector<double> eps);
PseudospecGrid pseudospectrum_serial(const Eigen::MatrixXcd& M, const GridSpec& grid,
                                     std::vector<double> eps);

// Banded kernel: per-node Givens QR + inverse iteration on the band.
// Results are identical for any thread partition (per-node seeds).
PseudospecGrid pseudospectrum_banded(const BandedMatrix& B, const GridSpec& grid,
                                     std::vector<double> eps, std::uint64_t seed = 1);
PseudospecGrid pseudospectrum_banded_serial(const BandedMatrix& B, const GridSpec& grid,
                                            std::vector<double> eps, std::uint64_t seed = 1);

}  // namespace specband
