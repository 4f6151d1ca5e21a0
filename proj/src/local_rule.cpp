#include "specband/local_rule.hpp"

#include <cmath>
#include <numbers>

namespace specband {

SymbolTableRule::SymbolTableRule(Alphabet alphabet, int radius, std::map<Word, Complex> table)
    : alphabet_(alphabet), radius_(radius), table_(std::move(table)) {
    if (radius < 0) throw config_error("symbol table radius must be >= 0");
    if (radius > 4) throw resource_error("symbol table radius > 4 not supported");
    const WordSet required = all_words(alphabet_, 2 * radius_ + 1);
    if (table_.size() != required.size())
        throw config_error("symbol table must be total: expected " +
                           std::to_string(required.size()) + " entries, got " +
                           std::to_string(table_.size()));
    for (const Word& w : required.words)
        if (table_.find(w) == table_.end())
            throw config_error("symbol table missing word '" + w + "'");
    for (const auto& [w, c] : table_) sup_abs_ = std::max(sup_abs_, std::abs(c));
}

SymbolTableRule SymbolTableRule::constant(Alphabet alphabet, Complex c) {
    std::map<Word, Complex> t;
    for (const Word& w : all_words(alphabet, 1).words) t[w] = c;
    return SymbolTableRule(alphabet, 0, std::move(t));
}

SymbolTableRule SymbolTableRule::from_symbol(Alphabet alphabet,
                                             const std::vector<Complex>& value_per_symbol) {
    if (static_cast<int>(value_per_symbol.size()) != alphabet.size)
        throw config_error("from_symbol needs one value per alphabet symbol");
    std::map<Word, Complex> t;
    for (int s = 0; s < alphabet.size; ++s)
        t[Word(1, symbol_to_char(s))] = value_per_symbol[static_cast<std::size_t>(s)];
    return SymbolTableRule(alphabet, 0, std::move(t));
}

Complex SymbolTableRule::operator()(const Word& context) const {
    auto it = table_.find(context);
    if (it == table_.end())
        throw config_error("symbol table lookup failed for context '" + context + "'");
    return it->second;
}

TrigPolyRule::TrigPolyRule(int dim, std::vector<Term> terms)
    : dim_(dim), terms_(std::move(terms)) {
    if (dim < 1) throw config_error("trig polynomial dimension must be >= 1");
    for (const auto& t : terms_) {
        if (static_cast<int>(t.freq.size()) != dim_)
            throw config_error("trig polynomial term frequency dimension mismatch");
        double l1 = 0.0;
        for (long m : t.freq) l1 += std::abs(static_cast<double>(m));
        sup_bound_ += std::abs(t.coeff);
        lipschitz_ += std::abs(t.coeff) * 2.0 * std::numbers::pi * l1;
    }
}

TrigPolyRule TrigPolyRule::constant(int dim, Complex c) {
    return TrigPolyRule(dim, {Term{std::vector<long>(static_cast<std::size_t>(dim), 0), c}});
}

TrigPolyRule TrigPolyRule::cosine(double lambda) {
    return TrigPolyRule(1, {Term{{1}, Complex(lambda / 2.0, 0.0)},
                            Term{{-1}, Complex(lambda / 2.0, 0.0)}});
}

Complex TrigPolyRule::operator()(std::span<const double> v) const {
    if (static_cast<int>(v.size()) != dim_)
        throw config_error("trig polynomial evaluated at wrong dimension");
    Complex acc = 0.0;
    for (const auto& t : terms_) {
        double phase = 0.0;
        for (int c = 0; c < dim_; ++c)
            phase += static_cast<double>(t.freq[static_cast<std::size_t>(c)]) *
                     v[static_cast<std::size_t>(c)];
        acc += t.coeff * std::polar(1.0, 2.0 * std::numbers::pi * phase);
    }
    return acc;
}

}  // namespace specband
