#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "specband/errors.hpp"

namespace specband {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// floor of an exact rational
BigInt rational_floor(const Rational& r);

// An irrational number in (0, 1), represented by an exact rational
// enclosure [lower, upper] with the true value strictly inside. Named
// constants are enclosed to 192 fractional bits; continued-fraction
// input is enclosed by its last two convergents. All symbol decisions
// downstream are made by exact interval comparison against this
// enclosure, so the enclosure width is the precision contract.
class Irrational {
public:
    static Irrational golden();         // (sqrt(5) - 1) / 2
    static Irrational sqrt2_minus_1();  // sqrt(2) - 1
    static Irrational pi_minus_3();

    // "golden" | "sqrt2m1" | "pim3"
    static Irrational named(const std::string& name);

    // cf = [a0; a1, a2, ...] with a0 = 0 and a_i >= 1. The value is
    // pinned between the last two convergents; rejected if that
    // interval is wider than 2^-120 (supply more coefficients).
    static Irrational from_continued_fraction(const std::vector<std::uint64_t>& cf);

    const Rational& lower() const { return lower_; }
    const Rational& upper() const { return upper_; }
    const std::string& name() const { return name_; }

    // Continued-fraction coefficients (a0 = 0 first). Named constants
    // carry enough terms for convergent denominators beyond 10^6.
    const std::vector<std::uint64_t>& continued_fraction() const { return cf_; }

    // Convergents p/q of the continued fraction, in order.
    std::vector<std::pair<BigInt, BigInt>> convergents() const;

    double approx() const;

    bool operator==(const Irrational& o) const {
        return lower_ == o.lower_ && upper_ == o.upper_;
    }

private:
    Irrational(Rational lo, Rational hi, std::string name, std::vector<std::uint64_t> cf);

    Rational lower_, upper_;
    std::string name_;
    std::vector<std::uint64_t> cf_;
};

}  // namespace specband
