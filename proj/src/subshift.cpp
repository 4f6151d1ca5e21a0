#include "specband/subshift.hpp"

#include <algorithm>
#include <cmath>

namespace specband {

namespace {

std::int64_t floor_mod(std::int64_t n, std::int64_t m) {
    std::int64_t r = n % m;
    return r < 0 ? r + m : r;
}

// Bit t of the length-lexicographic enumeration 0 1 00 01 10 11 000 ...
// at stream position p >= 0. Words of length l occupy a block of l*2^l
// positions.
Symbol concat_stream(std::int64_t p) {
    std::int64_t len = 1, block_start = 0;
    while (true) {
        std::int64_t block = len << len;  // l * 2^l
        if (p < block_start + block) break;
        block_start += block;
        ++len;
    }
    std::int64_t i = p - block_start;
    std::int64_t word_index = i / len;
    std::int64_t bit_pos = i % len;  // most significant first
    return static_cast<Symbol>((word_index >> (len - 1 - bit_pos)) & 1);
}

// Decides 1_{[1-alpha, 1)}(k*alpha + omega mod 1) by exact interval
// comparison. k is the absolute coefficient of alpha (index plus
// accumulated shifts). Boundary hits are decided exactly: with omega
// rational they occur iff k + 1 == 0 and omega is an integer.
Symbol sturmian_symbol(const SturmianRule& rule, std::int64_t k_raw) {
    const BigInt k = BigInt(k_raw) + rule.omega_alpha_mult;
    const Rational& lo = rule.alpha.lower();
    const Rational& hi = rule.alpha.upper();
    const Rational c_lo = 1 - hi, c_hi = 1 - lo;  // encloses 1 - alpha

    if (k == 0) {
        Rational s = rule.omega - rational_floor(rule.omega);
        // s is rational and 1 - alpha is irrational, so equality is impossible.
        if (s >= c_hi) return 1;
        if (s <= c_lo) return 0;
        throw precision_error("sturmian interval test inconclusive at k = 0");
    }

    // Exact boundary: k*alpha + omega = 1 - alpha (mod 1) iff
    // (k+1)*alpha + omega is an integer, which for k != -1 is irrational.
    const bool omega_integral = denominator(rule.omega) == 1;
    if (k == -1 && omega_integral) return 1;

    Rational t_lo = k * lo + rule.omega;
    Rational t_hi = k * hi + rule.omega;
    if (k < 0) std::swap(t_lo, t_hi);

    BigInt fl = rational_floor(t_lo);
    if (rational_floor(t_hi) != fl) {
        // The enclosure straddles an integer; k*alpha + omega itself is
        // irrational (k != 0), so the fractional part cannot be pinned.
        throw precision_error("sturmian interval test straddles an integer");
    }
    Rational s_lo = t_lo - fl, s_hi = t_hi - fl;

    if (s_lo >= c_hi) return 1;  // s > c (equality excluded above)
    if (s_hi <= c_lo) return 0;
    throw precision_error("sturmian interval test inconclusive");
}

struct RuleEval {
    const Alphabet& alphabet;
    std::int64_t n;

    Symbol operator()(const PeriodicRule& r) const {
        return r.word[static_cast<std::size_t>(
            floor_mod(n, static_cast<std::int64_t>(r.word.size())))];
    }
    Symbol operator()(const SturmianRule& r) const { return sturmian_symbol(r, n); }
    Symbol operator()(const ConcatenationRule&) const {
        return n >= 0 ? concat_stream(n) : concat_stream(-n - 1);
    }
    Symbol operator()(const ExplicitRule& r) const {
        if (n < r.offset) return r.left_fill;
        std::int64_t rel = n - r.offset;
        if (rel >= static_cast<std::int64_t>(r.center.size())) return r.right_fill;
        return r.center[static_cast<std::size_t>(rel)];
    }
};

}  // namespace

SubshiftPoint::SubshiftPoint(Alphabet alphabet, SubshiftRule rule, std::int64_t shift_offset)
    : alphabet_(alphabet), rule_(std::move(rule)), shift_offset_(shift_offset) {
    if (const auto* p = std::get_if<PeriodicRule>(&rule_)) {
        if (p->word.empty()) throw config_error("periodic rule needs a nonempty word");
        for (Symbol s : p->word)
            if (!alphabet_.contains(s)) throw config_error("periodic word symbol outside alphabet");
    }
    if (const auto* s = std::get_if<SturmianRule>(&rule_)) {
        if (alphabet_.size < 2) throw config_error("sturmian coding needs alphabet size >= 2");
        (void)s;
    }
    if (std::holds_alternative<ConcatenationRule>(rule_) && alphabet_.size != 2)
        throw config_error("concatenation rule is binary");
    if (const auto* e = std::get_if<ExplicitRule>(&rule_)) {
        if (!alphabet_.contains(e->left_fill) || !alphabet_.contains(e->right_fill))
            throw config_error("explicit fill symbol outside alphabet");
        for (Symbol s : e->center)
            if (!alphabet_.contains(s)) throw config_error("explicit word symbol outside alphabet");
    }
}

Symbol SubshiftPoint::eval(std::int64_t n) const {
    std::int64_t abs_index;
    if (__builtin_add_overflow(n, shift_offset_, &abs_index) ||
        abs_index > kIndexRangeMax || abs_index < -kIndexRangeMax)
        throw range_error("index " + std::to_string(n) + " (offset " +
                          std::to_string(shift_offset_) + ") outside supported range 10^6");
    return std::visit(RuleEval{alphabet_, abs_index}, rule_);
}

SubshiftPoint SubshiftPoint::shifted(std::int64_t k) const {
    SubshiftPoint out = *this;
    out.shift_offset_ += k;
    return out;
}

Word SubshiftPoint::window(std::int64_t a, std::int64_t b) const {
    if (a > b) throw config_error("window requires a <= b");
    Word w;
    w.reserve(static_cast<std::size_t>(b - a + 1));
    for (std::int64_t n = a; n <= b; ++n) w.push_back(symbol_to_char(eval(n)));
    return w;
}

WordSet SubshiftPoint::factors(int n, std::int64_t L) const {
    if (n < 1) throw config_error("factor length must be >= 1");
    if (L < n) throw config_error("factor window L must be >= n");
    Word buf = window(-L, L);
    WordSet out;
    out.length = n;
    for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= buf.size(); ++i)
        out.words.insert(buf.substr(i, static_cast<std::size_t>(n)));
    return out;
}

std::size_t SubshiftPoint::complexity(int n, std::int64_t L) const {
    return factors(n, L).size();
}

WordSet SubshiftPoint::coverage_missing(int n, std::int64_t L, const WordSet& legal) const {
    if (legal.length != n)
        throw config_error("legal word set length does not match requested factor length");
    WordSet present = factors(n, L);
    WordSet missing;
    missing.length = n;
    for (const Word& w : legal.words)
        if (!present.contains(w)) missing.words.insert(w);
    return missing;
}

std::int64_t SubshiftPoint::minimal_period() const {
    const auto* p = std::get_if<PeriodicRule>(&rule_);
    if (p == nullptr) return 0;
    const auto len = static_cast<std::int64_t>(p->word.size());
    for (std::int64_t d = 1; d <= len; ++d) {
        if (len % d != 0) continue;
        bool ok = true;
        for (std::int64_t i = 0; i < len && ok; ++i)
            ok = p->word[static_cast<std::size_t>(i)] ==
                 p->word[static_cast<std::size_t>(i % d)];
        if (ok) return d;
    }
    return len;
}

double subshift_distance(const SubshiftPoint& x, const SubshiftPoint& y, int probe) {
    for (int m = 0; m <= probe; ++m) {
        if (x.eval(m) != y.eval(m) || x.eval(-m) != y.eval(-m))
            return std::ldexp(1.0, -m);  // 2^-m
    }
    return 0.0;
}

}  // namespace specband
