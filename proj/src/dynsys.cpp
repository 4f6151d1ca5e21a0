#include "specband/dynsys.hpp"

#include <algorithm>
#include <cstring>
#include <exception>
#include <string_view>

#include "specband/parallel.hpp"

namespace specband {

namespace {

// Parallel window fill; rule evaluations are independent per index.
// Exceptions (range/precision) are captured and rethrown once.
Word fill_window(const SubshiftPoint& x, std::int64_t a, std::int64_t b) {
    if (a > b) throw config_error("window requires a <= b");
    // Probe the ends first so range errors surface before the parallel loop.
    (void)x.eval(a);
    (void)x.eval(b);
    const std::int64_t len = b - a + 1;
    Word buf(static_cast<std::size_t>(len), '?');
    std::exception_ptr err = nullptr;
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (std::int64_t i = 0; i < len; ++i) {
        try {
            buf[static_cast<std::size_t>(i)] = symbol_to_char(x.eval(a + i));
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return buf;
}

std::vector<std::int64_t> witness_subshift(const SubshiftPoint& x, const SubshiftPoint& y,
                                           int radius, std::int64_t h_min, std::int64_t H,
                                           bool parallel) {
    if (!(x.alphabet() == y.alphabet()))
        throw config_error("limit witness: points live over different alphabets");
    if (radius < 0) throw config_error("witness radius must be >= 0");
    if (h_min < 1 || H < h_min) throw config_error("witness scan needs 1 <= h_min <= H");

    const Word target = y.window(-radius, radius);
    const std::int64_t start = -H - radius;
    const Word buf = parallel ? fill_window(x, start, H + radius)
                              : x.window(start, H + radius);
    const std::size_t wlen = target.size();
    auto matches = [&](std::int64_t h) {
        const char* p = buf.data() + (h - radius - start);
        return std::memcmp(p, target.data(), wlen) == 0;
    };

    std::vector<std::int64_t> out;
    for (std::int64_t h = h_min; h <= H; ++h)
        if (matches(h)) out.push_back(h);
    for (std::int64_t h = -h_min; h >= -H; --h)
        if (matches(h)) out.push_back(h);
    return out;
}

std::vector<std::int64_t> witness_torus(const TorusPoint& x, const TorusPoint& y,
                                        std::int64_t h_min, std::int64_t H, double delta,
                                        bool parallel) {
    if (!x.same_system(y))
        throw config_error("limit witness: torus points have different rotation vectors");
    if (h_min < 1 || H < h_min) throw config_error("witness scan needs 1 <= h_min <= H");

    auto close = [&](std::int64_t h) {
        double d = 0.0;
        for (int c = 0; c < x.dim(); ++c) {
            const auto ci = static_cast<std::size_t>(c);
            double vc = wrap_unit(x.v()[ci] + static_cast<double>(h) * x.beta()[ci]);
            d = std::max(d, circle_distance(vc, y.v()[ci]));
        }
        return d <= delta;
    };

    const std::int64_t count = H - h_min + 1;
    std::vector<unsigned char> pos(static_cast<std::size_t>(count), 0),
        neg(static_cast<std::size_t>(count), 0);
#pragma omp parallel for schedule(static) num_threads(parallel ? max_threads() : 1)
    for (std::int64_t i = 0; i < count; ++i) {
        pos[static_cast<std::size_t>(i)] = close(h_min + i) ? 1 : 0;
        neg[static_cast<std::size_t>(i)] = close(-(h_min + i)) ? 1 : 0;
    }
    std::vector<std::int64_t> out;
    for (std::int64_t i = 0; i < count; ++i)
        if (pos[static_cast<std::size_t>(i)]) out.push_back(h_min + i);
    for (std::int64_t i = 0; i < count; ++i)
        if (neg[static_cast<std::size_t>(i)]) out.push_back(-(h_min + i));
    return out;
}

std::vector<std::int64_t> witness_impl(const DynPoint& x, const DynPoint& y, int radius,
                                       std::int64_t h_min, std::int64_t H, double delta,
                                       bool parallel) {
    if (x.index() != y.index())
        throw config_error("limit witness: incompatible system kinds");
    if (const auto* xs = std::get_if<SubshiftPoint>(&x))
        return witness_subshift(*xs, std::get<SubshiftPoint>(y), radius, h_min, H, parallel);
    return witness_torus(std::get<TorusPoint>(x), std::get<TorusPoint>(y), h_min, H, delta,
                         parallel);
}

}  // namespace

DynPoint shift_point(const DynPoint& x, std::int64_t k) {
    return std::visit([k](const auto& p) -> DynPoint { return p.shifted(k); }, x);
}

bool same_system(const DynPoint& x, const DynPoint& y) {
    if (x.index() != y.index()) return false;
    if (const auto* xs = std::get_if<SubshiftPoint>(&x))
        return xs->alphabet() == std::get<SubshiftPoint>(y).alphabet();
    return std::get<TorusPoint>(x).same_system(std::get<TorusPoint>(y));
}

double point_distance(const DynPoint& x, const DynPoint& y, int probe) {
    if (x.index() != y.index())
        throw config_error("point distance: incompatible system kinds");
    if (const auto* xs = std::get_if<SubshiftPoint>(&x))
        return subshift_distance(*xs, std::get<SubshiftPoint>(y), probe);
    return torus_distance(std::get<TorusPoint>(x), std::get<TorusPoint>(y));
}

std::vector<std::int64_t> limit_witness(const DynPoint& x, const DynPoint& y, int radius,
                                        std::int64_t h_min, std::int64_t H, double delta) {
    return witness_impl(x, y, radius, h_min, H, delta, true);
}

std::vector<std::int64_t> limit_witness_serial(const DynPoint& x, const DynPoint& y, int radius,
                                               std::int64_t h_min, std::int64_t H, double delta) {
    return witness_impl(x, y, radius, h_min, H, delta, false);
}

}  // namespace specband
