#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "specband/word.hpp"

namespace specband {

using Complex = std::complex<double>;

// Rule body for symbolic systems: a total table from the length-(2r+1)
// word around the anchor index to a coefficient. Totality is enforced
// at construction, which keeps evaluation a pure lookup.
class SymbolTableRule {
public:
    SymbolTableRule(Alphabet alphabet, int radius, std::map<Word, Complex> table);

    // Constant coefficient (radius 0, every symbol mapped to c).
    static SymbolTableRule constant(Alphabet alphabet, Complex c);

    // Radius-0 rule s -> f(s).
    static SymbolTableRule from_symbol(Alphabet alphabet,
                                       const std::vector<Complex>& value_per_symbol);

    Complex operator()(const Word& context) const;
    int radius() const { return radius_; }
    double sup_abs() const { return sup_abs_; }
    const std::map<Word, Complex>& table() const { return table_; }
    const Alphabet& alphabet() const { return alphabet_; }

private:
    Alphabet alphabet_;
    int radius_;
    std::map<Word, Complex> table_;
    double sup_abs_ = 0.0;
};

// Rule body for torus systems: a trigonometric polynomial
// v -> sum_k c_k exp(2*pi*i <m_k, v>). Closed under the operations we
// need, exactly serializable, and covers the almost Mathieu potential.
class TrigPolyRule {
public:
    struct Term {
        std::vector<long> freq;  // integer frequency vector
        Complex coeff;
    };

    TrigPolyRule(int dim, std::vector<Term> terms);

    static TrigPolyRule constant(int dim, Complex c);
    // lambda * cos(2 pi v) in dimension 1
    static TrigPolyRule cosine(double lambda);

    Complex operator()(std::span<const double> v) const;
    int dim() const { return dim_; }
    const std::vector<Term>& terms() const { return terms_; }

    // sum |c_k| >= sup |p|
    double sup_abs_bound() const { return sup_bound_; }
    // Lipschitz bound on the torus with the max-coordinate metric:
    // sum_k |c_k| * 2 pi * ||m_k||_1
    double lipschitz_bound() const { return lipschitz_; }

private:
    int dim_;
    std::vector<Term> terms_;
    double sup_bound_ = 0.0;
    double lipschitz_ = 0.0;
};

}  // namespace specband
