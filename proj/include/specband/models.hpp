#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specband/band_family.hpp"
#include "specband/irrational.hpp"

namespace specband {

// Raw model parameters as they arrive from configs or flags.
struct ModelSpec {
    std::string id;  // shift | sturmian | almost-mathieu | concat |
                     // one-at-origin | example-7-1 | example-7-2
    std::string alpha = "golden";          // named constant, or
    std::vector<std::uint64_t> alpha_cf;   // continued fraction (wins if nonempty)
    double lambda = 1.0;
    std::optional<bool> selfadjoint;       // default depends on the model
    std::string beta = "golden";
    std::vector<std::uint64_t> beta_cf;
    double v0 = 0.0;
};

// A catalog model: dynamical system point + equivariant family plus
// the samples the experiments need.
struct Model {
    ModelSpec spec;
    DynPoint base;
    BandFamily family;
    bool minimal = false;
    bool constant_family = false;  // rules ignore the point entirely
    bool selfadjoint = false;

    // Fixture point lists for the section-7 examples (with component
    // ids for the two-subshift union).
    std::vector<DynPoint> fixture_points;
    std::vector<int> fixture_component;

    // Deterministic hull sample points, base point first. Sturmian
    // models use van der Corput offsets; torus models offset v.
    std::vector<DynPoint> hull_samples(int count) const;

    // Periodic approximant points. Sturmian: the coding with the
    // continued-fraction convergent p/q in place of alpha (q must be a
    // convergent denominator). shift: the zero word at any q.
    std::vector<SubshiftPoint> approximants(const std::vector<std::int64_t>& qs) const;

    // Periodic points from explicit binary words (full-shift models).
    std::vector<SubshiftPoint> word_points(const std::vector<std::string>& words) const;
};

Model build_model(const ModelSpec& spec);

// Accepts catalog ids plus the sturmian-<alpha> shorthands.
ModelSpec model_spec_from_id(const std::string& id);

// The word coded with the rational rotation number p/q over the
// Sturmian interval convention (exact integer arithmetic).
std::vector<Symbol> convergent_word(const BigInt& p, const BigInt& q);

// k-th van der Corput offset (base 2), an exact dyadic rational.
Rational van_der_corput(int k);

Irrational resolve_irrational(const std::string& name, const std::vector<std::uint64_t>& cf);

}  // namespace specband
