#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "specband/errors.hpp"

namespace specband {

using Complex = std::complex<double>;

// A finite multiset of spectral points with provenance. source_of[i]
// indexes into sources; a single-source set may leave source_of empty.
struct SpectrumSet {
    std::vector<Complex> points;
    std::vector<int> source_of;
    std::vector<std::string> sources;

    static SpectrumSet tagged(std::vector<Complex> pts, std::string source);
    const std::string& source_of_point(std::size_t i) const;
};

// Multiset union; provenance tags are preserved.
SpectrumSet spectrum_union(const std::vector<SpectrumSet>& sets);

// Hausdorff distance between nonempty finite point sets in C.
double hausdorff(std::span<const Complex> a, std::span<const Complex> b);

// Greedy nearest-neighbor multiset matching; returns the max matched
// distance, or +inf when the cardinalities differ.
double match_multisets(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace specband
