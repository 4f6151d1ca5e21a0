#include "specband/sigma_min.hpp"

#include <cmath>
#include <limits>

#include <Eigen/SVD>

#include "specband/eig.hpp"
#include "specband/parallel.hpp"

namespace specband {

double sigma_min(const Eigen::MatrixXcd& M) {
    if (M.rows() != M.cols() || M.rows() < 1) throw config_error("sigma_min needs a square matrix");
    if (M.rows() > kMaxDenseSize) throw resource_error("dense sigma_min limited to size 4096");
    if (M.rows() <= 96) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
        return svd.singularValues()(M.rows() - 1);
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(M);
    return svd.singularValues()(M.rows() - 1);
}

BandedMatrix::BandedMatrix(std::int64_t m, int lower, int upper)
    : m_(m), lower_(lower), upper_total_(upper + lower), stride_(lower_ + upper_total_ + 1),
      data_(static_cast<std::size_t>(m * stride_), Complex(0.0, 0.0)) {
    if (m < 1 || lower < 0 || upper < 0) throw config_error("bad banded matrix shape");
}

Complex& BandedMatrix::at(std::int64_t i, std::int64_t j) {
    return data_[static_cast<std::size_t>(i * stride_ + (j - i + lower_))];
}

Complex BandedMatrix::get(std::int64_t i, std::int64_t j) const {
    if (j < i - lower_ || j > i + upper_total_ || j < 0 || j >= m_) return 0.0;
    return data_[static_cast<std::size_t>(i * stride_ + (j - i + lower_))];
}

BandedMatrix BandedMatrix::from_window(const BandWindow& w, int band_width) {
    if (w.mode != BoundaryMode::zero)
        throw config_error("banded storage applies to zero-mode windows only");
    const std::int64_t m = w.size();
    BandedMatrix out(m, band_width, band_width);
    for (std::int64_t i = 0; i < m; ++i) {
        const std::int64_t j_lo = std::max<std::int64_t>(0, i - band_width);
        const std::int64_t j_hi = std::min<std::int64_t>(m - 1, i + band_width);
        for (std::int64_t j = j_lo; j <= j_hi; ++j) out.at(i, j) = w.entries(i, j);
    }
    return out;
}

namespace {

// G [a; b] = [r; 0] with G = [[c, s], [-conj(s), c]], c real.
void make_givens(Complex a, Complex b, double& c, Complex& s, Complex& r) {
    const double fb = std::abs(b);
    if (fb == 0.0) {
        c = 1.0;
        s = 0.0;
        r = a;
        return;
    }
    const double fa = std::abs(a);
    if (fa == 0.0) {
        c = 0.0;
        s = std::conj(b) / fb;
        r = fb;
        return;
    }
    const double t = std::hypot(fa, fb);
    c = fa / t;
    s = (a / fa) * std::conj(b) / t;
    r = a * (t / fa);
}

}  // namespace

double BandedMatrix::sigma_min_shifted(Complex z, std::uint64_t seed) const {
    const std::int64_t m = m_;
    const int wl = lower_, wu = upper_total_;
    const std::int64_t stride = stride_;

    // Working copy of the band with the diagonal shifted by -z.
    std::vector<Complex> R = data_;
    for (std::int64_t i = 0; i < m; ++i) R[static_cast<std::size_t>(i * stride + wl)] -= z;

    auto rof = [&R, stride, wl](std::int64_t i, std::int64_t j) -> Complex& {
        return R[static_cast<std::size_t>(i * stride + (j - i + wl))];
    };

    // Givens QR, eliminating the subdiagonals column by column. Each
    // rotation touches columns k .. k+wu of the two rows.
    for (std::int64_t k = 0; k < m; ++k) {
        const std::int64_t i_max = std::min<std::int64_t>(m - 1, k + wl);
        for (std::int64_t i = k + 1; i <= i_max; ++i) {
            Complex b = rof(i, k);
            if (b == 0.0) continue;
            double c;
            Complex s, r;
            make_givens(rof(k, k), b, c, s, r);
            rof(k, k) = r;
            rof(i, k) = 0.0;
            const std::int64_t j_hi = std::min<std::int64_t>(m - 1, k + wu);
            for (std::int64_t j = k + 1; j <= j_hi; ++j) {
                const Complex u = rof(k, j), v = rof(i, j);
                rof(k, j) = c * u + s * v;
                rof(i, j) = -std::conj(s) * u + c * v;
            }
        }
    }

    double dmin = std::numeric_limits<double>::infinity();
    for (std::int64_t i = 0; i < m; ++i) dmin = std::min(dmin, std::abs(rof(i, i)));
    if (dmin == 0.0) return 0.0;  // exactly singular

    // Inverse power iteration on (R^H R)^{-1}: u -> R^{-1} R^{-H} u.
    std::uint64_t state = seed ? seed : 0x5eedULL;
    Eigen::VectorXcd u(m), v(m);
    for (std::int64_t i = 0; i < m; ++i)
        u(i) = Complex(uniform_pm1(state), uniform_pm1(state));
    u.normalize();

    double est = 0.0;
    constexpr int kMaxIters = 500;
    for (int it = 0; it < kMaxIters; ++it) {
        // v = R^{-H} u  (R^H is lower triangular with band wu)
        for (std::int64_t i = 0; i < m; ++i) {
            Complex acc = u(i);
            const std::int64_t j_lo = std::max<std::int64_t>(0, i - wu);
            for (std::int64_t j = j_lo; j < i; ++j) acc -= std::conj(rof(j, i)) * v(j);
            v(i) = acc / std::conj(rof(i, i));
        }
        // u_next = R^{-1} v
        for (std::int64_t i = m - 1; i >= 0; --i) {
            Complex acc = v(i);
            const std::int64_t j_hi = std::min<std::int64_t>(m - 1, i + wu);
            for (std::int64_t j = i + 1; j <= j_hi; ++j) acc -= rof(i, j) * u(j);
            u(i) = acc / rof(i, i);
        }
        const double growth = u.norm();
        if (!std::isfinite(growth)) return 0.0;  // sigma below representable range
        if (growth == 0.0) return 0.0;
        const double next = 1.0 / std::sqrt(growth);
        u /= growth;
        if (it > 0 && std::abs(next - est) <= 1e-11 * next) return next;
        est = next;
    }
    return est;
}

}  // namespace specband
