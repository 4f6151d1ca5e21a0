#include "specband/band_family.hpp"

#include <cmath>

#include "specband/parallel.hpp"

namespace specband {

bool windows_equal(const BandWindow& a, const BandWindow& b) {
    return a.mode == b.mode && a.period == b.period && a.offset == b.offset &&
           a.entries.rows() == b.entries.rows() && a.entries.cols() == b.entries.cols() &&
           a.entries == b.entries;
}

BandWindow ad_u(const BandWindow& w) {
    BandWindow out = w;
    out.offset -= 1;
    return out;
}

BandWindow ad_u_inv(const BandWindow& w) {
    BandWindow out = w;
    out.offset += 1;
    return out;
}

BandFamily BandFamily::subshift_family(Alphabet alphabet,
                                       std::map<int, SymbolTableRule> rules, std::string id) {
    BandFamily f;
    f.alphabet_ = alphabet;
    f.srules_ = std::move(rules);
    f.id_ = std::move(id);
    for (const auto& [d, r] : f.srules_) {
        if (!(r.alphabet() == alphabet))
            throw config_error("rule alphabet differs from family alphabet");
        f.width_ = std::max(f.width_, std::abs(d));
        f.max_radius_ = std::max(f.max_radius_, r.radius());
    }
    return f;
}

BandFamily BandFamily::torus_family(int dim, std::map<int, TrigPolyRule> rules, std::string id) {
    if (dim < 1) throw config_error("torus family dimension must be >= 1");
    BandFamily f;
    f.torus_dim_ = dim;
    f.trules_ = std::move(rules);
    f.id_ = std::move(id);
    for (const auto& [d, r] : f.trules_) {
        if (r.dim() != dim) throw config_error("rule dimension differs from family dimension");
        f.width_ = std::max(f.width_, std::abs(d));
    }
    return f;
}

const Alphabet& BandFamily::alphabet() const {
    if (!alphabet_) throw config_error("torus family has no alphabet");
    return *alphabet_;
}

Complex BandFamily::entry(const DynPoint& x, std::int64_t i, std::int64_t j) const {
    std::int64_t d64 = i - j;
    if (d64 > width_ || d64 < -width_) return 0.0;
    int d = static_cast<int>(d64);
    if (is_subshift()) {
        const auto* xs = std::get_if<SubshiftPoint>(&x);
        if (xs == nullptr) throw config_error("subshift family evaluated at a torus point");
        auto it = srules_.find(d);
        if (it == srules_.end()) return 0.0;
        const auto& rule = it->second;
        return rule(xs->window(i - rule.radius(), i + rule.radius()));
    }
    const auto* xt = std::get_if<TorusPoint>(&x);
    if (xt == nullptr) throw config_error("torus family evaluated at a subshift point");
    if (xt->dim() != torus_dim_) throw config_error("torus point dimension mismatch");
    auto it = trules_.find(d);
    if (it == trules_.end()) return 0.0;
    return it->second(xt->at_index(i));
}

BandWindow BandFamily::window(const DynPoint& x, std::int64_t a, std::int64_t b) const {
    if (a > b) throw config_error("window requires a <= b");
    const std::int64_t m = b - a + 1;
    BandWindow out;
    out.offset = a;
    out.entries = Eigen::MatrixXcd::Zero(m, m);

    if (is_subshift()) {
        const auto* xs = std::get_if<SubshiftPoint>(&x);
        if (xs == nullptr) throw config_error("subshift family evaluated at a torus point");
        // One evaluation pass over the needed context, then pure lookups.
        const int r = max_radius_;
        const Word buf = xs->window(a - r, b + r);
        for (const auto& [d, rule] : srules_) {
            const int rr = rule.radius();
            for (std::int64_t i = std::max<std::int64_t>(0, d); i < m && i - d < m; ++i) {
                if (i - d < 0) continue;
                // context of T^{a+i} x: buffer is anchored at a - r
                std::size_t pos = static_cast<std::size_t>(i + r - rr);
                out.entries(i, i - d) = rule(buf.substr(pos, static_cast<std::size_t>(2 * rr + 1)));
            }
        }
        return out;
    }
    const auto* xt = std::get_if<TorusPoint>(&x);
    if (xt == nullptr) throw config_error("torus family evaluated at a subshift point");
    for (const auto& [d, rule] : trules_) {
        for (std::int64_t i = std::max<std::int64_t>(0, d); i < m && i - d < m; ++i) {
            if (i - d < 0) continue;
            out.entries(i, i - d) = rule(xt->at_index(a + i));
        }
    }
    return out;
}

BandWindow BandFamily::window_centered(const DynPoint& x, std::int64_t N) const {
    if (N < 1) throw config_error("window half-size N must be >= 1");
    return window(x, -N, N);
}

BandWindow BandFamily::window_periodic(const DynPoint& x, std::int64_t q) const {
    const auto* xs = std::get_if<SubshiftPoint>(&x);
    if (xs == nullptr) throw mode_error("periodic windows require a periodic subshift point");
    const std::int64_t p = xs->minimal_period();
    if (p == 0) throw mode_error("periodic window requested for an aperiodic point");
    if (q < 1 || q % p != 0)
        throw mode_error("periodic window size q must be a positive multiple of the period " +
                         std::to_string(p));
    BandWindow out;
    out.offset = 0;
    out.mode = BoundaryMode::periodic;
    out.period = q;
    out.entries = Eigen::MatrixXcd::Zero(q, q);
    auto floor_div = [](std::int64_t a, std::int64_t b) {
        return a >= 0 ? a / b : -((-a + b - 1) / b);
    };
    auto ceil_div = [](std::int64_t a, std::int64_t b) {
        return a >= 0 ? (a + b - 1) / b : -((-a) / b);
    };
    for (std::int64_t i = 0; i < q; ++i) {
        for (std::int64_t j = 0; j < q; ++j) {
            // all unwrapped columns j + m q within the band |i - col| <= w
            Complex acc = 0.0;
            for (std::int64_t m = ceil_div(i - j - width_, q); m <= floor_div(i - j + width_, q);
                 ++m)
                acc += entry(x, i, j + m * q);
            out.entries(i, j) = acc;
        }
    }
    return out;
}

double BandFamily::wiener_norm(const DynPoint& x, std::int64_t L) const {
    if (L < 1) throw config_error("wiener norm probe length must be >= 1");
    double total = 0.0;
    if (is_subshift()) {
        const auto* xs = std::get_if<SubshiftPoint>(&x);
        if (xs == nullptr) throw config_error("subshift family evaluated at a torus point");
        const int r = max_radius_;
        const Word buf = xs->window(-L - width_ - r, L + width_ + r);
        for (const auto& [d, rule] : srules_) {
            const int rr = rule.radius();
            double sup = 0.0;
            for (std::int64_t j = -L; j <= L; ++j) {
                // context of T^{j+d} x in the buffer anchored at -L-width-r
                std::size_t pos = static_cast<std::size_t>(j + d + L + width_ + r - rr);
                sup = std::max(sup,
                               std::abs(rule(buf.substr(pos, static_cast<std::size_t>(2 * rr + 1)))));
            }
            total += sup;
        }
        return total;
    }
    const auto* xt = std::get_if<TorusPoint>(&x);
    if (xt == nullptr) throw config_error("torus family evaluated at a subshift point");
    for (const auto& [d, rule] : trules_) {
        double sup = 0.0;
        for (std::int64_t j = -L; j <= L; ++j) sup = std::max(sup, std::abs(rule(xt->at_index(j + d))));
        total += sup;
    }
    return total;
}

double BandFamily::sup_bound() const {
    double total = 0.0;
    for (const auto& [d, r] : srules_) total += r.sup_abs();
    for (const auto& [d, r] : trules_) total += r.sup_abs_bound();
    return total;
}

double BandFamily::lipschitz_bound() const {
    double total = 0.0;
    for (const auto& [d, r] : trules_) total += r.lipschitz_bound();
    return total;
}

EquivarianceResult equivariance_check_impl(
    const std::function<Complex(const DynPoint&, std::int64_t, std::int64_t)>& entry_fn,
    const DynPoint& x, std::int64_t n, int samples, std::uint64_t seed, double tol,
    std::int64_t index_bound) {
    const DynPoint xn = shift_point(x, n);
    std::uint64_t state = seed;
    EquivarianceResult res;
    for (int s = 0; s < samples; ++s) {
        const std::int64_t span = 2 * index_bound + 1;
        std::int64_t i = static_cast<std::int64_t>(splitmix64(state) % static_cast<std::uint64_t>(span)) - index_bound;
        std::int64_t j = static_cast<std::int64_t>(splitmix64(state) % static_cast<std::uint64_t>(span)) - index_bound;
        const Complex lhs = entry_fn(xn, i, j);
        const Complex rhs = entry_fn(x, i + n, j + n);
        res.max_deviation = std::max(res.max_deviation, std::abs(lhs - rhs));
    }
    res.pass = res.max_deviation <= tol;
    return res;
}

EquivarianceResult BandFamily::equivariance_check(const DynPoint& x, std::int64_t n, int samples,
                                                  std::uint64_t seed, double tol,
                                                  std::int64_t index_bound) const {
    return equivariance_check_impl(
        [this](const DynPoint& p, std::int64_t i, std::int64_t j) { return entry(p, i, j); }, x,
        n, samples, seed, tol, index_bound);
}

EquivarianceResult BandFamily::equivariance_check(const DynPoint& x, std::int64_t n, int samples,
                                                  std::uint64_t seed) const {
    return equivariance_check(x, n, samples, seed, is_subshift() ? 0.0 : 1e-12);
}

}  // namespace specband
