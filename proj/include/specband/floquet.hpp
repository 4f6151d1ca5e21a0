#pragma once

#include "specband/band_family.hpp"
#include "specband/spectrum_set.hpp"

namespace specband {

// Floquet-Bloch spectrum sample of a q-periodic operator: the union
// over theta_k = 2 pi k / n_theta of the eigenvalues of the q x q
// symbol A_q(theta)_{i,j} = sum_m entry(x, i, j + m q) e^{i m theta}.
// The full theta-union is the exact spectrum of the bi-infinite
// periodic operator; the grid samples it. Requires a periodic subshift
// point (q = minimal period) and n_theta >= 8.
SpectrumSet floquet_spectrum(const BandFamily& F, const DynPoint& x, int n_theta);
SpectrumSet floquet_spectrum_serial(const BandFamily& F, const DynPoint& x, int n_theta);

// The q x q symbol matrix at a given phase.
Eigen::MatrixXcd floquet_symbol(const BandFamily& F, const SubshiftPoint& x, std::int64_t q,
                                double theta);

}  // namespace specband
