#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "specband/irrational.hpp"
#include "specband/word.hpp"

namespace specband {

// Evaluations are supported for |index| <= 10^6. Everything the library
// does (witness scans, factor collection, window assembly) stays well
// inside this range at desk scale.
inline constexpr std::int64_t kIndexRangeMax = 1'000'000;

// x(n) = word[n mod |word|]
struct PeriodicRule {
    std::vector<Symbol> word;
};

// Sturmian coding of the rotation by alpha. The point is the lower
// mechanical word
//
//   x(n) = 1  iff  (n + m)*alpha + omega  mod 1  >=  1 - alpha,
//
// i.e. the indicator of [1-alpha, 1) with the boundary orbit coded 1 so
// that the factor language is exactly the Sturmian language (complexity
// n+1). omega is an exact rational; hull points reached by shifting
// carry an additional integer multiple m of alpha.
struct SturmianRule {
    Irrational alpha;
    Rational omega = 0;
    std::int64_t omega_alpha_mult = 0;
};

// Nonnegative indices carry the concatenation of all binary words in
// length-lexicographic order: 0 1 00 01 10 11 000 ... Negative indices
// mirror the same stream, so every finite word occurs in both
// directions and the point is pseudo-ergodic in the full shift.
struct ConcatenationRule {};

// A finite word pasted at a fixed offset, constant fills elsewhere.
struct ExplicitRule {
    std::vector<Symbol> center;
    std::int64_t offset = 0;
    Symbol left_fill = 0;
    Symbol right_fill = 0;
};

using SubshiftRule = std::variant<PeriodicRule, SturmianRule, ConcatenationRule, ExplicitRule>;

class SubshiftPoint {
public:
    SubshiftPoint(Alphabet alphabet, SubshiftRule rule, std::int64_t shift_offset = 0);

    // x(n); range_error for |n + shift_offset| > 10^6.
    Symbol eval(std::int64_t n) const;

    // T^k x, realized by accumulating the offset.
    SubshiftPoint shifted(std::int64_t k) const;

    // The word x(a) x(a+1) ... x(b).
    Word window(std::int64_t a, std::int64_t b) const;

    // All length-n words occurring in window(-L, L).
    WordSet factors(int n, std::int64_t L) const;

    std::size_t complexity(int n, std::int64_t L) const;

    // legal \ factors(n, L); empty result certifies coverage at (n, L).
    WordSet coverage_missing(int n, std::int64_t L, const WordSet& legal) const;

    const Alphabet& alphabet() const { return alphabet_; }
    std::int64_t shift_offset() const { return shift_offset_; }
    const SubshiftRule& rule() const { return rule_; }

    // Minimal period if the point is periodic, 0 otherwise.
    std::int64_t minimal_period() const;

private:
    Alphabet alphabet_;
    SubshiftRule rule_;
    std::int64_t shift_offset_ = 0;
};

// Exact distance in the product metric: 2^{-m} with m the smallest |n|
// where the points differ on [-probe, probe]; 0 if they agree there.
double subshift_distance(const SubshiftPoint& x, const SubshiftPoint& y, int probe);

}  // namespace specband
