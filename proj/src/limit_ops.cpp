#include "specband/limit_ops.hpp"

#include <algorithm>
#include <set>

namespace specband {

namespace {

constexpr std::size_t kMaxWindows = 100000;

void check_scan_params(int r_word, int r_idx, std::int64_t h_min, std::int64_t H) {
    if (r_idx < 0) throw config_error("window radius must be >= 0");
    if (r_word < 0) throw config_error("word context radius must be >= 0");
    if (h_min < 1 || H < h_min) throw config_error("scan needs 1 <= h_min <= H");
}

}  // namespace

BandWindow window_from_defining_word(const BandFamily& F, const Word& w, int r_word, int r_idx) {
    if (!F.is_subshift()) throw config_error("defining words exist for symbolic families only");
    const int R = r_idx + r_word;
    if (static_cast<int>(w.size()) != 2 * R + 1)
        throw config_error("defining word has wrong length");
    // Paste the word as an explicit point centered at 0; entries read
    // only within the pasted range.
    std::vector<Symbol> center;
    center.reserve(w.size());
    for (char c : w) center.push_back(char_to_symbol(c));
    SubshiftPoint p(F.alphabet(), ExplicitRule{std::move(center), -R, 0, 0});
    return F.window_centered(DynPoint(p), r_idx);
}

LimitWindows limit_operator_windows(const BandFamily& F, const DynPoint& x, int r_word,
                                    int r_idx, std::int64_t h_min, std::int64_t H,
                                    double delta) {
    check_scan_params(r_word, r_idx, h_min, H);
    LimitWindows out;
    if (F.is_subshift()) {
        if (r_word < F.max_rule_radius())
            throw config_error("r_word must cover the family rule radius " +
                               std::to_string(F.max_rule_radius()));
        const auto& xs = std::get<SubshiftPoint>(x);
        const int R = r_idx + r_word;
        const Word buf = xs.window(-H - R, H + R);
        std::set<Word> words;
        auto slice = [&](std::int64_t h) {
            return buf.substr(static_cast<std::size_t>(h - R + H + R),
                              static_cast<std::size_t>(2 * R + 1));
        };
        for (std::int64_t h = h_min; h <= H; ++h) words.insert(slice(h));
        for (std::int64_t h = -H; h <= -h_min; ++h) words.insert(slice(h));
        for (const Word& w : words) {
            out.defining_words.push_back(w);
            out.windows.push_back(window_from_defining_word(F, w, r_word, r_idx));
        }
        return out;
    }

    // Torus orbit: windows are deduplicated by delta-closeness of the
    // base points; the representative list can be large.
    const auto& xt = std::get<TorusPoint>(x);
    std::vector<TorusPoint> reps;
    for (std::int64_t sgn : {+1, -1}) {
        for (std::int64_t a = h_min; a <= H; ++a) {
            TorusPoint cand = xt.shifted(sgn * a);
            bool dup = false;
            for (const auto& r : reps)
                if (torus_distance(cand, r) <= delta) {
                    dup = true;
                    break;
                }
            if (!dup) {
                reps.push_back(cand);
                if (reps.size() > kMaxWindows)
                    throw resource_error("limit-operator window set exceeds 10^5 elements; "
                                         "reduce H or coarsen delta");
            }
        }
    }
    for (const auto& r : reps) out.windows.push_back(F.window_centered(DynPoint(r), r_idx));
    return out;
}

LimitWindows hull_windows(const BandFamily& F, const SubshiftPoint& x, int r_word, int r_idx,
                          std::int64_t L) {
    if (!F.is_subshift()) throw config_error("hull windows exist for symbolic families only");
    if (r_word < F.max_rule_radius())
        throw config_error("r_word must cover the family rule radius");
    const int R = r_idx + r_word;
    WordSet words = x.factors(2 * R + 1, L);
    LimitWindows out;
    for (const Word& w : words.words) {
        out.defining_words.push_back(w);
        out.windows.push_back(window_from_defining_word(F, w, r_word, r_idx));
    }
    return out;
}

bool self_similar_check(const BandFamily& F, const DynPoint& x, int r_idx, std::int64_t h_min,
                        std::int64_t H, double delta) {
    if (r_idx < 0) throw config_error("window radius must be >= 0");
    if (h_min < 1 || H < h_min) throw config_error("scan needs 1 <= h_min <= H");
    if (F.is_subshift()) {
        const auto& xs = std::get<SubshiftPoint>(x);
        const int r_word = F.max_rule_radius();
        const int R = r_idx + r_word;
        const Word target = xs.window(-R, R);
        const Word buf = xs.window(-H - R, H + R);
        auto word_at = [&](std::int64_t h) {
            return buf.substr(static_cast<std::size_t>(h + H), target.size());
        };
        // Word recurrence forces window recurrence.
        std::set<Word> others;
        for (std::int64_t h = h_min; h <= H; ++h) {
            for (std::int64_t sh : {h, -h}) {
                Word w = word_at(sh);
                if (w == target) return true;
                others.insert(std::move(w));
            }
        }
        // Distinct words can still assemble to the central window when
        // the rule tables collapse symbols.
        const BandWindow center = window_from_defining_word(F, target, r_word, r_idx);
        for (const Word& w : others)
            if (windows_equal(window_from_defining_word(F, w, r_word, r_idx), center))
                return true;
        return false;
    }
    // A point-recurrence within delta / Lip forces every window entry of
    // the shifted operator within delta of the central window.
    const auto& xt = std::get<TorusPoint>(x);
    const double lip = F.lipschitz_bound();
    const double point_tol = lip > 0.0 ? delta / lip : 0.5;
    for (std::int64_t h = h_min; h <= H; ++h) {
        for (std::int64_t sh : {h, -h}) {
            double d = 0.0;
            for (int c = 0; c < xt.dim(); ++c) {
                const auto ci = static_cast<std::size_t>(c);
                double vc = wrap_unit(xt.v()[ci] + static_cast<double>(sh) * xt.beta()[ci]);
                d = std::max(d, circle_distance(vc, xt.v()[ci]));
            }
            if (d <= point_tol) return true;
        }
    }
    return false;
}

}  // namespace specband
