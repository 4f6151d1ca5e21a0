#include "specband/spectrum_set.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "specband/parallel.hpp"

namespace specband {

SpectrumSet SpectrumSet::tagged(std::vector<Complex> pts, std::string source) {
    SpectrumSet s;
    s.points = std::move(pts);
    s.sources.push_back(std::move(source));
    return s;
}

const std::string& SpectrumSet::source_of_point(std::size_t i) const {
    static const std::string unknown = "?";
    if (sources.empty()) return unknown;
    if (source_of.empty()) return sources.front();
    return sources[static_cast<std::size_t>(source_of[i])];
}

SpectrumSet spectrum_union(const std::vector<SpectrumSet>& sets) {
    if (sets.empty()) throw std::invalid_argument("spectrum_union of an empty list");
    SpectrumSet out;
    for (const auto& s : sets) {
        const int base = static_cast<int>(out.sources.size());
        out.sources.insert(out.sources.end(), s.sources.begin(), s.sources.end());
        for (std::size_t i = 0; i < s.points.size(); ++i) {
            out.points.push_back(s.points[i]);
            int idx = s.source_of.empty() ? 0 : s.source_of[i];
            out.source_of.push_back(base + idx);
        }
    }
    return out;
}

double hausdorff(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("hausdorff of an empty set");
    auto directed = [](std::span<const Complex> p, std::span<const Complex> q) {
        double worst = 0.0;
        const auto n = static_cast<std::int64_t>(p.size());
#pragma omp parallel for schedule(static) reduction(max : worst) num_threads(max_threads())
        for (std::int64_t i = 0; i < n; ++i) {
            double best = std::numeric_limits<double>::infinity();
            for (const Complex& z : q) best = std::min(best, std::abs(p[static_cast<std::size_t>(i)] - z));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

double match_multisets(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    std::vector<bool> used(b.size(), false);
    double worst = 0.0;
    for (const Complex& z : a) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t pick = b.size();
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            double d = std::abs(z - b[j]);
            if (d < best) {
                best = d;
                pick = j;
            }
        }
        used[pick] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace specband
