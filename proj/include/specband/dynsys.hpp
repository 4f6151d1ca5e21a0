#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "specband/subshift.hpp"
#include "specband/torus.hpp"

namespace specband {

// A finitely described point of a dynamical system: subshift sequence
// or torus point with its rotation vector.
using DynPoint = std::variant<SubshiftPoint, TorusPoint>;

DynPoint shift_point(const DynPoint& x, std::int64_t k);

bool same_system(const DynPoint& x, const DynPoint& y);

// Product-metric distance; `probe` bounds the index range inspected on
// subshifts (d = 2^{-m} with m the first disagreement).
double point_distance(const DynPoint& x, const DynPoint& y, int probe = 64);

// All h with h_min <= |h| <= H such that T^h x is delta-close to y.
// On subshifts closeness is exact window agreement on [-radius, radius]
// (the product metric at scale 2^{-radius}); on the torus it is
// max-coordinate circle distance <= delta. Positive shifts are listed
// ascending, then negative shifts descending.
std::vector<std::int64_t> limit_witness(const DynPoint& x, const DynPoint& y, int radius,
                                        std::int64_t h_min, std::int64_t H, double delta = 1e-6);

// Serial reference for the scan above; identical results by contract.
std::vector<std::int64_t> limit_witness_serial(const DynPoint& x, const DynPoint& y, int radius,
                                               std::int64_t h_min, std::int64_t H,
                                               double delta = 1e-6);

}  // namespace specband
