#include "specband/torus.hpp"

#include <cmath>

namespace specband {

double wrap_unit(double x) {
    double r = x - std::floor(x);
    return r >= 1.0 ? 0.0 : r;  // floor rounding can land exactly on 1
}

double circle_distance(double a, double b) {
    double d = std::fabs(wrap_unit(a) - wrap_unit(b));
    return d > 0.5 ? 1.0 - d : d;
}

TorusPoint::TorusPoint(std::vector<double> v, std::vector<double> beta)
    : v_(std::move(v)), beta_(std::move(beta)) {
    if (v_.empty() || v_.size() != beta_.size())
        throw config_error("torus point needs matching nonempty v and beta");
    for (auto& c : v_) c = wrap_unit(c);
    for (auto& c : beta_) c = wrap_unit(c);
}

TorusPoint TorusPoint::shifted(std::int64_t k) const {
    std::vector<double> w(v_.size());
    for (std::size_t c = 0; c < v_.size(); ++c)
        w[c] = wrap_unit(v_[c] + static_cast<double>(k) * beta_[c]);
    return TorusPoint(std::move(w), beta_);
}

std::vector<double> TorusPoint::at_index(std::int64_t i) const {
    std::vector<double> w(v_.size());
    for (std::size_t c = 0; c < v_.size(); ++c)
        w[c] = wrap_unit(v_[c] + static_cast<double>(i) * beta_[c]);
    return w;
}

bool TorusPoint::same_system(const TorusPoint& o) const {
    return beta_ == o.beta_;
}

double torus_distance(const TorusPoint& x, const TorusPoint& y) {
    if (x.dim() != y.dim()) throw config_error("torus points of different dimension");
    double d = 0.0;
    for (int c = 0; c < x.dim(); ++c)
        d = std::max(d, circle_distance(x.v()[static_cast<std::size_t>(c)],
                                        y.v()[static_cast<std::size_t>(c)]));
    return d;
}

}  // namespace specband
