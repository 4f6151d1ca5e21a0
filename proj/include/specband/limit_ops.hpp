#pragma once

#include <cstdint>
#include <vector>

#include "specband/band_family.hpp"

namespace specband {

// Distinct windows of A at shifted points T^h x, h_min <= |h| <= H.
// On symbolic systems a window on [-r_idx, r_idx] is determined by the
// defining word x(h - r_idx - r_word .. h + r_idx + r_word), so the set
// is computed exactly by word deduplication. defining_words (sorted)
// and windows correspond index-wise.
struct LimitWindows {
    std::vector<Word> defining_words;
    std::vector<BandWindow> windows;
};

// r_word must be at least the family's max rule radius. Throws
// resource_error if the set would exceed 10^5 windows (torus orbits).
LimitWindows limit_operator_windows(const BandFamily& F, const DynPoint& x, int r_word,
                                    int r_idx, std::int64_t h_min, std::int64_t H,
                                    double delta = 1e-6);

// Assembles the window on [-r_idx, r_idx] of the operator whose
// defining word (radius r_idx + r_word around the center) is `w`.
BandWindow window_from_defining_word(const BandFamily& F, const Word& w, int r_word, int r_idx);

// Windows of A(y) over all hull words of the subshift point x, i.e.
// over every defining word occurring in [-L, L]. The Prop 4.1
// comparison set.
LimitWindows hull_windows(const BandFamily& F, const SubshiftPoint& x, int r_word, int r_idx,
                          std::int64_t L);

// True iff the central window of A(x) on [-r_idx, r_idx] recurs at some
// shift h with h_min <= |h| <= H. Symbolic systems: exact word
// recurrence. Torus: a shift with Lip * circle-distance <= delta, which
// forces all window entries within delta.
bool self_similar_check(const BandFamily& F, const DynPoint& x, int r_idx, std::int64_t h_min,
                        std::int64_t H, double delta = 1e-6);

}  // namespace specband
