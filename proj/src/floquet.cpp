#include "specband/floquet.hpp"

#include <cmath>
#include <numbers>

#include "specband/eig.hpp"
#include "specband/parallel.hpp"

namespace specband {

Eigen::MatrixXcd floquet_symbol(const BandFamily& F, const SubshiftPoint& x, std::int64_t q,
                                double theta) {
    const int w = F.band_width();
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(q, q);
    auto floor_div = [](std::int64_t a, std::int64_t b) {
        return a >= 0 ? a / b : -((-a + b - 1) / b);
    };
    auto ceil_div = [](std::int64_t a, std::int64_t b) {
        return a >= 0 ? (a + b - 1) / b : -((-a) / b);
    };
    const DynPoint xp(x);
    for (std::int64_t i = 0; i < q; ++i) {
        for (std::int64_t j = 0; j < q; ++j) {
            Complex acc = 0.0;
            for (std::int64_t m = ceil_div(i - j - w, q); m <= floor_div(i - j + w, q); ++m)
                acc += F.entry(xp, i, j + m * q) *
                       std::polar(1.0, static_cast<double>(m) * theta);
            M(i, j) = acc;
        }
    }
    return M;
}

namespace {

SpectrumSet floquet_impl(const BandFamily& F, const DynPoint& x, int n_theta, bool parallel) {
    if (n_theta < 8) throw config_error("floquet sampling needs n_theta >= 8");
    const auto* xs = std::get_if<SubshiftPoint>(&x);
    if (xs == nullptr) throw mode_error("floquet spectra require a periodic subshift point");
    const std::int64_t q = xs->minimal_period();
    if (q == 0) throw mode_error("floquet spectrum requested for an aperiodic point");

    std::vector<Complex> pts(static_cast<std::size_t>(n_theta) * static_cast<std::size_t>(q));
    std::exception_ptr err = nullptr;
#pragma omp parallel for schedule(static) num_threads(parallel ? max_threads() : 1)
    for (int k = 0; k < n_theta; ++k) {
        try {
            const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) /
                                 static_cast<double>(n_theta);
            const SpectrumSet eigs = eig_dense(floquet_symbol(F, *xs, q, theta));
            for (std::int64_t i = 0; i < q; ++i)
                pts[static_cast<std::size_t>(k) * static_cast<std::size_t>(q) +
                    static_cast<std::size_t>(i)] = eigs.points[static_cast<std::size_t>(i)];
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return SpectrumSet::tagged(std::move(pts), "floquet(q=" + std::to_string(q) + ",ntheta=" +
                                                   std::to_string(n_theta) + ")");
}

}  // namespace

SpectrumSet floquet_spectrum(const BandFamily& F, const DynPoint& x, int n_theta) {
    return floquet_impl(F, x, n_theta, true);
}

SpectrumSet floquet_spectrum_serial(const BandFamily& F, const DynPoint& x, int n_theta) {
    return floquet_impl(F, x, n_theta, false);
}

}  // namespace specband
