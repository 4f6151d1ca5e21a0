#include "specband/irrational.hpp"

#include <utility>

namespace specband {

namespace {

constexpr int kFracBits = 192;

// a0 = 0 plus `count` copies of `a`
std::vector<std::uint64_t> periodic_cf(std::uint64_t a, int count) {
    std::vector<std::uint64_t> cf(static_cast<std::size_t>(count) + 1, a);
    cf[0] = 0;
    return cf;
}

// floor(sqrt(n)) by Newton iteration on big integers
BigInt isqrt(const BigInt& n) {
    if (n <= 1) return n;
    BigInt x = BigInt(1) << (msb(n) / 2 + 1);
    while (true) {
        BigInt y = (x + n / x) / 2;
        if (y >= x) return x;
        x = y;
    }
}

}  // namespace

BigInt rational_floor(const Rational& r) {
    BigInt num = numerator(r), den = denominator(r);  // den > 0 canonical
    if (num >= 0) return num / den;
    return -((-num + den - 1) / den);
}

Irrational::Irrational(Rational lo, Rational hi, std::string name, std::vector<std::uint64_t> cf)
    : lower_(std::move(lo)), upper_(std::move(hi)), name_(std::move(name)), cf_(std::move(cf)) {}

Irrational Irrational::golden() {
    // sqrt(5)*2^192 in [s, s+1]  =>  alpha in [(s - 2^192)/2^193, (s + 1 - 2^192)/2^193]
    const BigInt one = BigInt(1) << kFracBits;
    BigInt s = isqrt(BigInt(5) << (2 * kFracBits));
    Rational lo(s - one, BigInt(1) << (kFracBits + 1));
    Rational hi(s + 1 - one, BigInt(1) << (kFracBits + 1));
    return Irrational(lo, hi, "golden", periodic_cf(1, 40));
}

Irrational Irrational::sqrt2_minus_1() {
    const BigInt one = BigInt(1) << kFracBits;
    BigInt s = isqrt(BigInt(2) << (2 * kFracBits));
    Rational lo(s - one, one);
    Rational hi(s + 1 - one, one);
    return Irrational(lo, hi, "sqrt2m1", periodic_cf(2, 28));
}

Irrational Irrational::pi_minus_3() {
    // floor((pi - 3) * 2^192); the leading continued-fraction
    // coefficients of pi - 3 are well known.
    static const char* kNum = "888791491566496270888765094605269643156384531797986193872";
    const BigInt one = BigInt(1) << kFracBits;
    BigInt f(kNum);
    return Irrational(Rational(f, one), Rational(f + 1, one), "pim3",
                      {0, 7, 15, 1, 292, 1, 1, 1, 2,  1, 3, 1, 14, 2, 1,
                       1, 2, 2,  2, 2,   1, 84, 2, 1, 1, 15, 3, 13, 1, 4});
}

Irrational Irrational::named(const std::string& name) {
    if (name == "golden") return golden();
    if (name == "sqrt2m1") return sqrt2_minus_1();
    if (name == "pim3") return pi_minus_3();
    throw config_error("unknown irrational constant '" + name +
                       "' (expected golden, sqrt2m1 or pim3)");
}

Irrational Irrational::from_continued_fraction(const std::vector<std::uint64_t>& cf) {
    if (cf.size() < 3) throw config_error("continued fraction needs at least 3 coefficients");
    if (cf[0] != 0) throw config_error("continued fraction must start with 0 (value in (0,1))");
    for (std::size_t i = 1; i < cf.size(); ++i)
        if (cf[i] == 0) throw config_error("continued-fraction coefficients a_i (i >= 1) must be >= 1");

    BigInt h0 = 0, h1 = 1, k0 = 1, k1 = 0;  // (p_{-2}, p_{-1}), (q_{-2}, q_{-1})
    Rational prev, cur;
    for (std::size_t i = 0; i < cf.size(); ++i) {
        BigInt a = cf[i];
        BigInt h2 = a * h1 + h0, k2 = a * k1 + k0;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        prev = cur;
        cur = Rational(h1, k1);
        if (i == 0) prev = cur;
    }
    Rational lo = std::min(prev, cur), hi = std::max(prev, cur);
    // Any irrational with this coefficient prefix lies strictly between
    // the last two convergents.
    Rational width = hi - lo;
    Rational limit(BigInt(1), BigInt(1) << 120);
    if (width > limit)
        throw config_error(
            "continued fraction gives an enclosure wider than 2^-120; supply more coefficients");
    std::string nm = "cf";
    for (auto a : cf) nm += ":" + std::to_string(a);
    return Irrational(lo, hi, nm, cf);
}

std::vector<std::pair<BigInt, BigInt>> Irrational::convergents() const {
    std::vector<std::pair<BigInt, BigInt>> out;
    BigInt h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    for (std::size_t i = 0; i < cf_.size(); ++i) {
        BigInt a = cf_[i];
        BigInt h2 = a * h1 + h0, k2 = a * k1 + k0;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        if (i >= 1) out.emplace_back(h1, k1);  // skip the a0 = 0 convergent 0/1
    }
    return out;
}

double Irrational::approx() const {
    return static_cast<double>(lower_);
}

}  // namespace specband
