#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "specband/band_family.hpp"

namespace specband {

// Smallest singular value of a dense complex matrix (SVD reference
// path). Relative accuracy follows the underlying SVD: ~1e-8 or better
// for values that are not vanishingly small against ||M||.
double sigma_min(const Eigen::MatrixXcd& M);

// Square banded matrix in row-band storage. Rows keep lower bandwidth
// `lower` and upper bandwidth `upper` plus `lower` columns of fill so a
// Givens QR can run in place.
class BandedMatrix {
public:
    BandedMatrix(std::int64_t m, int lower, int upper);

    // Band storage of a zero-mode window (mode/periodic windows have
    // wrap-around corners and must use the dense path).
    static BandedMatrix from_window(const BandWindow& w, int band_width);

    Complex& at(std::int64_t i, std::int64_t j);
    Complex get(std::int64_t i, std::int64_t j) const;

    std::int64_t size() const { return m_; }
    int lower() const { return lower_; }
    int upper_total() const { return upper_total_; }

    // sigma_min(A - z I) by Givens QR of the shifted band followed by
    // inverse power iteration on R^H R. Deterministic for a fixed seed.
    // Exactly singular R (zero diagonal) returns 0; deep underflow of
    // the iterate (sigma below ~1e-150) also reports 0.
    double sigma_min_shifted(Complex z, std::uint64_t seed) const;

private:
    std::int64_t m_;
    int lower_, upper_total_;
    std::int64_t stride_;
    std::vector<Complex> data_;
};

}  // namespace specband
