#include "specband/pseudospec.hpp"

#include <cmath>

#include "specband/parallel.hpp"

namespace specband {

namespace {

constexpr std::int64_t kMaxNodes = 1'000'000;

std::int64_t axis_count(double lo, double hi, double step) {
    if (step <= 0.0) throw config_error("grid step must be positive");
    if (hi < lo) throw config_error("grid rectangle is empty");
    return static_cast<std::int64_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

void validate(const GridSpec& g) {
    if (g.nodes() > kMaxNodes)
        throw resource_error("pseudospectrum grid has " + std::to_string(g.nodes()) +
                             " nodes; the cap is 10^6");
}

template <typename SigmaFn>
PseudospecGrid run_grid(const GridSpec& grid, std::vector<double> eps, SigmaFn&& fn,
                        bool parallel) {
    validate(grid);
    PseudospecGrid out;
    out.grid = grid;
    out.eps = std::move(eps);
    const std::int64_t nr = grid.n_re(), ni = grid.n_im();
    out.sigma.resize(ni, nr);
    const std::int64_t total = nr * ni;
#pragma omp parallel for schedule(dynamic, 8) num_threads(parallel ? max_threads() : 1)
    for (std::int64_t t = 0; t < total; ++t) {
        const std::int64_t i_im = t / nr, i_re = t % nr;
        out.sigma(i_im, i_re) = fn(grid.node(i_re, i_im), t);
    }
    return out;
}

}  // namespace

std::int64_t GridSpec::n_re() const { return axis_count(re_lo, re_hi, step); }
std::int64_t GridSpec::n_im() const { return axis_count(im_lo, im_hi, step); }

Complex GridSpec::node(std::int64_t i_re, std::int64_t i_im) const {
    return {re_lo + static_cast<double>(i_re) * step,
            im_lo + static_cast<double>(i_im) * step};
}

GridSpec default_grid(double radius_bound, double step, double pad) {
    const double R = radius_bound + pad;
    return GridSpec{-R, R, -R, R, step};
}

std::vector<Complex> PseudospecGrid::indicator(double eps_value) const {
    std::vector<Complex> pts;
    for (std::int64_t i_im = 0; i_im < sigma.rows(); ++i_im)
        for (std::int64_t i_re = 0; i_re < sigma.cols(); ++i_re)
            if (sigma(i_im, i_re) <= eps_value) pts.push_back(grid.node(i_re, i_im));
    return pts;
}

PseudospecGrid pseudospectrum(const Eigen::MatrixXcd& M, const GridSpec& grid,
                              std::vector<double> eps) {
    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(M.rows(), M.cols());
    return run_grid(grid, std::move(eps),
                    [&](Complex z, std::int64_t) { return sigma_min(M - z * I); }, true);
}

PseudospecGrid pseudospectrum_serial(const Eigen::MatrixXcd& M, const GridSpec& grid,
                                     std::vector<double> eps) {
    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(M.rows(), M.cols());
    return run_grid(grid, std::move(eps),
                    [&](Complex z, std::int64_t) { return sigma_min(M - z * I); }, false);
}

PseudospecGrid pseudospectrum_banded(const BandedMatrix& B, const GridSpec& grid,
                                     std::vector<double> eps, std::uint64_t seed) {
    return run_grid(grid, std::move(eps),
                    [&](Complex z, std::int64_t t) {
                        return B.sigma_min_shifted(z, seed * 0x9e3779b97f4a7c15ULL +
                                                          static_cast<std::uint64_t>(t) + 1);
                    },
                    true);
}

PseudospecGrid pseudospectrum_banded_serial(const BandedMatrix& B, const GridSpec& grid,
                                            std::vector<double> eps, std::uint64_t seed) {
    return run_grid(grid, std::move(eps),
                    [&](Complex z, std::int64_t t) {
                        return B.sigma_min_shifted(z, seed * 0x9e3779b97f4a7c15ULL +
                                                          static_cast<std::uint64_t>(t) + 1);
                    },
                    false);
}

}  // namespace specband
