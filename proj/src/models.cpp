#include "specband/models.hpp"

#include <algorithm>

namespace specband {

namespace {

const Alphabet kBinary{2};

SymbolTableRule diag_potential(double lambda) {
    return SymbolTableRule::from_symbol(kBinary, {Complex(0.0), Complex(lambda)});
}

BandFamily hopping_family(Alphabet alphabet, double lambda, bool selfadjoint,
                          const std::string& id) {
    std::map<int, SymbolTableRule> rules;
    rules.emplace(1, SymbolTableRule::constant(alphabet, 1.0));
    if (selfadjoint) rules.emplace(-1, SymbolTableRule::constant(alphabet, 1.0));
    if (lambda != 0.0) rules.emplace(0, diag_potential(lambda));
    return BandFamily::subshift_family(alphabet, std::move(rules), id);
}

SubshiftPoint one_at_origin_point() {
    return SubshiftPoint(kBinary, ExplicitRule{{1}, 0, 0, 0});
}

}  // namespace

Rational van_der_corput(int k) {
    // reverse the bits of k behind the binary point
    Rational r = 0;
    Rational scale(1, 2);
    for (int v = k; v > 0; v >>= 1) {
        if (v & 1) r += scale;
        scale /= 2;
    }
    return r;
}

Irrational resolve_irrational(const std::string& name, const std::vector<std::uint64_t>& cf) {
    if (!cf.empty()) return Irrational::from_continued_fraction(cf);
    return Irrational::named(name);
}

std::vector<Symbol> convergent_word(const BigInt& p, const BigInt& q) {
    if (q < 1 || p < 0 || p > q) throw config_error("convergent word needs 0 <= p <= q, q >= 1");
    std::vector<Symbol> w;
    const auto qi = static_cast<std::int64_t>(q);
    for (std::int64_t n = 0; n < qi; ++n) {
        // frac(n p / q) >= 1 - p/q  <=>  (n p mod q) >= q - p
        BigInt r = (n * p) % q;
        w.push_back(r >= q - p ? 1 : 0);
    }
    return w;
}

ModelSpec model_spec_from_id(const std::string& id) {
    ModelSpec s;
    if (id.rfind("sturmian-", 0) == 0) {
        s.id = "sturmian";
        s.alpha = id.substr(std::string("sturmian-").size());
        return s;
    }
    if (id == "full-shift-concatenation") {
        s.id = "concat";
        return s;
    }
    s.id = id;
    return s;
}

std::vector<DynPoint> Model::hull_samples(int count) const {
    if (count < 1) throw config_error("hull sample count must be >= 1");
    std::vector<DynPoint> out;
    if (!fixture_points.empty()) {
        for (int k = 0; k < count && k < static_cast<int>(fixture_points.size()); ++k)
            out.push_back(fixture_points[static_cast<std::size_t>(k)]);
        return out;
    }
    if (spec.id == "sturmian") {
        const auto& base_pt = std::get<SubshiftPoint>(base);
        const auto& rule = std::get<SturmianRule>(base_pt.rule());
        out.push_back(base);
        for (int k = 1; k < count; ++k)
            out.emplace_back(SubshiftPoint(kBinary, SturmianRule{rule.alpha, van_der_corput(k), 0}));
        return out;
    }
    if (spec.id == "almost-mathieu") {
        const auto& base_pt = std::get<TorusPoint>(base);
        out.push_back(base);
        for (int k = 1; k < count; ++k) {
            double off = static_cast<double>(van_der_corput(k));
            out.emplace_back(TorusPoint({wrap_unit(base_pt.v()[0] + off)}, base_pt.beta()));
        }
        return out;
    }
    if (spec.id == "shift") {
        // the family ignores the symbols; any distinct points will do
        std::vector<SubshiftPoint> pts = {
            SubshiftPoint(kBinary, PeriodicRule{{0}}),
            SubshiftPoint(kBinary, PeriodicRule{{1}}),
            SubshiftPoint(kBinary, PeriodicRule{{0, 1}}),
            SubshiftPoint(kBinary, PeriodicRule{{0, 0, 1}}),
            SubshiftPoint(kBinary, PeriodicRule{{0, 1, 1}}),
        };
        for (int k = 0; k < count && k < static_cast<int>(pts.size()); ++k)
            out.emplace_back(pts[static_cast<std::size_t>(k)]);
        return out;
    }
    if (spec.id == "concat") {
        out.push_back(base);
        for (int k = 1; k < count; ++k) out.push_back(shift_point(base, 101 * k));
        return out;
    }
    if (spec.id == "one-at-origin") {
        out.push_back(base);
        for (int k = 1; k < count; ++k) out.push_back(shift_point(base, 7 * k));
        return out;
    }
    throw config_error("model '" + spec.id + "' has no hull sampling");
}

std::vector<SubshiftPoint> Model::approximants(const std::vector<std::int64_t>& qs) const {
    std::vector<SubshiftPoint> out;
    if (spec.id == "shift") {
        for (std::int64_t q : qs) {
            if (q < 1) throw config_error("approximant period must be >= 1");
            out.emplace_back(kBinary,
                             PeriodicRule{std::vector<Symbol>(static_cast<std::size_t>(q), 0)});
        }
        return out;
    }
    if (spec.id == "sturmian") {
        const auto& base_pt = std::get<SubshiftPoint>(base);
        const auto& rule = std::get<SturmianRule>(base_pt.rule());
        const auto convs = rule.alpha.convergents();
        for (std::int64_t q : qs) {
            const BigInt* p_found = nullptr;
            for (const auto& [p, den] : convs)
                if (den == q) {
                    p_found = &p;
                    break;
                }
            if (p_found == nullptr) {
                std::string valid;
                for (const auto& [p, den] : convs) {
                    if (den > 100000) break;
                    valid += (valid.empty() ? "" : ",") + den.str();
                }
                throw config_error("q=" + std::to_string(q) +
                                   " is not a convergent denominator of alpha (valid: " + valid +
                                   ")");
            }
            out.emplace_back(kBinary, PeriodicRule{convergent_word(*p_found, BigInt(q))});
        }
        return out;
    }
    throw config_error("model '" + spec.id + "' has no periodic approximants; use word lists");
}

std::vector<SubshiftPoint> Model::word_points(const std::vector<std::string>& words) const {
    if (!family.is_subshift()) throw config_error("word points need a symbolic model");
    std::vector<SubshiftPoint> out;
    for (const auto& w : words) {
        if (w.empty()) throw config_error("empty periodic word");
        std::vector<Symbol> syms;
        for (char c : w) {
            Symbol s = char_to_symbol(c);
            if (!family.alphabet().contains(s))
                throw config_error("word '" + w + "' uses symbols outside the alphabet");
            syms.push_back(s);
        }
        out.emplace_back(family.alphabet(), PeriodicRule{std::move(syms)});
    }
    return out;
}

Model build_model(const ModelSpec& spec_in) {
    Model m{.spec = spec_in,
            .base = DynPoint(SubshiftPoint(kBinary, PeriodicRule{{0}})),
            .family = BandFamily::subshift_family(kBinary, {}, "empty"),
            .minimal = false,
            .constant_family = false,
            .selfadjoint = false,
            .fixture_points = {},
            .fixture_component = {}};
    const ModelSpec& spec = m.spec;

    if (spec.id == "shift") {
        std::map<int, SymbolTableRule> rules;
        rules.emplace(1, SymbolTableRule::constant(kBinary, 1.0));
        m.family = BandFamily::subshift_family(kBinary, std::move(rules), "shift");
        m.base = SubshiftPoint(kBinary, PeriodicRule{{0}});
        m.constant_family = true;
        return m;
    }
    if (spec.id == "sturmian") {
        Irrational alpha = resolve_irrational(spec.alpha, spec.alpha_cf);
        m.selfadjoint = spec.selfadjoint.value_or(false);
        m.family = hopping_family(kBinary, spec.lambda, m.selfadjoint,
                                  (m.selfadjoint ? "H[sturmian:" : "A[sturmian:") + alpha.name() +
                                      "]");
        m.base = SubshiftPoint(kBinary, SturmianRule{alpha, Rational(0), 0});
        m.minimal = true;
        return m;
    }
    if (spec.id == "almost-mathieu") {
        Irrational beta = resolve_irrational(spec.beta, spec.beta_cf);
        m.selfadjoint = spec.selfadjoint.value_or(true);
        std::map<int, TrigPolyRule> rules;
        rules.emplace(1, TrigPolyRule::constant(1, 1.0));
        if (m.selfadjoint) rules.emplace(-1, TrigPolyRule::constant(1, 1.0));
        if (spec.lambda != 0.0) rules.emplace(0, TrigPolyRule::cosine(spec.lambda));
        m.family = BandFamily::torus_family(1, std::move(rules),
                                            (m.selfadjoint ? "H[am:" : "A[am:") + beta.name() +
                                                "]");
        m.base = TorusPoint({wrap_unit(spec.v0)}, {beta.approx()});
        m.minimal = true;
        return m;
    }
    if (spec.id == "concat") {
        m.selfadjoint = spec.selfadjoint.value_or(false);
        m.family = hopping_family(kBinary, spec.lambda, m.selfadjoint,
                                  m.selfadjoint ? "H[concat]" : "A[concat]");
        m.base = SubshiftPoint(kBinary, ConcatenationRule{});
        return m;
    }
    if (spec.id == "one-at-origin") {
        std::map<int, SymbolTableRule> rules;
        rules.emplace(0, diag_potential(spec.lambda));
        m.family = BandFamily::subshift_family(kBinary, std::move(rules), "V[one-at-origin]");
        m.base = one_at_origin_point();
        m.fixture_points = {m.base, DynPoint(SubshiftPoint(kBinary, PeriodicRule{{0}})),
                            shift_point(DynPoint(m.base), 3)};
        m.fixture_component = {1, 2, 1};
        return m;
    }
    if (spec.id == "example-7-1") {
        // constant family A(x) := B with B = U (so U^{-1} B U = B), over
        // the non-minimal orbit closure of the one-at-origin point
        std::map<int, SymbolTableRule> rules;
        rules.emplace(1, SymbolTableRule::constant(kBinary, 1.0));
        m.family = BandFamily::subshift_family(kBinary, std::move(rules), "B=U[example-7-1]");
        m.base = one_at_origin_point();
        m.constant_family = true;
        m.fixture_points = {m.base, DynPoint(SubshiftPoint(kBinary, PeriodicRule{{0}})),
                            shift_point(DynPoint(m.base), 3)};
        m.fixture_component = {1, 2, 1};
        return m;
    }
    if (spec.id == "example-7-2") {
        // two minimal subshifts over disjoint symbol ranges {1,2} and
        // {3,4}, glued into one system; the family reads the symbol on
        // the diagonal, so it is injective on the union
        Alphabet a5{5};
        std::map<int, SymbolTableRule> rules;
        rules.emplace(0, SymbolTableRule::from_symbol(a5, {Complex(0.0), Complex(1.0),
                                                           Complex(2.0), Complex(3.0),
                                                           Complex(4.0)}));
        m.family = BandFamily::subshift_family(a5, std::move(rules), "diag[example-7-2]");
        const std::vector<std::pair<std::vector<Symbol>, int>> words = {
            {{1, 2}, 1}, {{2, 1}, 1}, {{3, 3, 4}, 2}, {{3, 4, 3}, 2}, {{4, 3, 3}, 2}};
        for (const auto& [w, comp] : words) {
            m.fixture_points.emplace_back(SubshiftPoint(a5, PeriodicRule{w}));
            m.fixture_component.push_back(comp);
        }
        m.base = m.fixture_points.front();
        return m;
    }
    throw config_error("unknown model id '" + spec.id + "'");
}

}  // namespace specband
