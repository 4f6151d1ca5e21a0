#pragma once

#include <cstdint>
#include <vector>

#include "specband/errors.hpp"

namespace specband {

// A point of the torus rotation system (T^d, R), R(v) = v + beta mod 1.
class TorusPoint {
public:
    TorusPoint(std::vector<double> v, std::vector<double> beta);

    int dim() const { return static_cast<int>(v_.size()); }
    const std::vector<double>& v() const { return v_; }
    const std::vector<double>& beta() const { return beta_; }

    // R^k applied to the point.
    TorusPoint shifted(std::int64_t k) const;

    // v + i*beta mod 1, computed in one step from the stored v.
    std::vector<double> at_index(std::int64_t i) const;

    bool same_system(const TorusPoint& o) const;

private:
    std::vector<double> v_, beta_;
};

// Wraps into [0, 1); exact for inputs already there.
double wrap_unit(double x);

// Distance on the circle R/Z.
double circle_distance(double a, double b);

// max over coordinates of the circle distance (product metric).
double torus_distance(const TorusPoint& x, const TorusPoint& y);

}  // namespace specband
