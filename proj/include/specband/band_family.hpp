#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include <Eigen/Dense>

#include "specband/dynsys.hpp"
#include "specband/local_rule.hpp"

namespace specband {

enum class BoundaryMode { zero, periodic };

// A finite slice of the matrix of A(x). Rows and columns carry the
// absolute indices offset .. offset+size-1; for periodic mode the
// entries are wrapped cyclically with period q.
struct BandWindow {
    std::int64_t offset = 0;
    Eigen::MatrixXcd entries;
    BoundaryMode mode = BoundaryMode::zero;
    std::int64_t period = 0;  // q for periodic mode

    std::int64_t size() const { return entries.rows(); }
};

bool windows_equal(const BandWindow& a, const BandWindow& b);

// Ad_U : B -> U^{-1} B U re-indexes entries by (i,j) -> (i+1, j+1); on
// windows this is a pure offset change.
BandWindow ad_u(const BandWindow& w);
BandWindow ad_u_inv(const BandWindow& w);

struct EquivarianceResult {
    bool pass = true;
    double max_deviation = 0.0;
};

// An equivariant band-operator family A : X -> BO given by one local
// rule per diagonal. The evaluation law
//
//   A(x)_{i,j} = rule_{i-j}( T^i x )
//
// is row-anchored, which makes equivariance A(Tx) = U^{-1} A(x) U an
// identity of the representation; uniform boundedness and continuity
// hold by construction of the rule bodies.
class BandFamily {
public:
    static BandFamily subshift_family(Alphabet alphabet,
                                      std::map<int, SymbolTableRule> rules,
                                      std::string id);
    static BandFamily torus_family(int dim, std::map<int, TrigPolyRule> rules,
                                   std::string id);

    bool is_subshift() const { return torus_dim_ == 0; }
    int band_width() const { return width_; }
    const std::string& id() const { return id_; }
    const Alphabet& alphabet() const;
    int torus_dim() const { return torus_dim_; }

    // Largest symbol-table context radius over the diagonals (0 for
    // torus families).
    int max_rule_radius() const { return max_radius_; }

    // A(x)_{i,j}; zero off the band.
    Complex entry(const DynPoint& x, std::int64_t i, std::int64_t j) const;

    // Zero-truncation slice on [a, b] x [a, b].
    BandWindow window(const DynPoint& x, std::int64_t a, std::int64_t b) const;
    BandWindow window_centered(const DynPoint& x, std::int64_t N) const;

    // q x q matrix with band entries wrapped cyclically; requires a
    // periodic subshift point whose minimal period divides q.
    BandWindow window_periodic(const DynPoint& x, std::int64_t q) const;

    // sum over diagonals of the max |entry| seen on |j| <= L.
    double wiener_norm(const DynPoint& x, std::int64_t L) const;

    // sum over diagonals of the sup-norm bound of the rule body; an
    // a-priori bound for sup_x ||A(x)||, hence for every wiener_norm.
    double sup_bound() const;

    // Lipschitz bound of all rules w.r.t. the torus metric (0 for
    // symbolic families; used to convert point to window closeness).
    double lipschitz_bound() const;

    // Prop 3.2 sampled: A(T^n x)_{i,j} == A(x)_{i+n, j+n} on seeded
    // (i, j) pairs with |i|, |j| <= index_bound.
    EquivarianceResult equivariance_check(const DynPoint& x, std::int64_t n, int samples,
                                          std::uint64_t seed, double tol,
                                          std::int64_t index_bound = 1000) const;
    EquivarianceResult equivariance_check(const DynPoint& x, std::int64_t n, int samples,
                                          std::uint64_t seed) const;

    const std::map<int, SymbolTableRule>& symbol_rules() const { return srules_; }
    const std::map<int, TrigPolyRule>& trig_rules() const { return trules_; }

private:
    BandFamily() = default;

    std::optional<Alphabet> alphabet_;
    int torus_dim_ = 0;
    int width_ = 0;
    int max_radius_ = 0;
    std::map<int, SymbolTableRule> srules_;
    std::map<int, TrigPolyRule> trules_;
    std::string id_;
};

// Shared loop for the equivariance check so that test fixtures with a
// deliberately broken evaluation law can be driven through the same
// sampling. `entry_fn(point, i, j)` supplies the matrix elements.
EquivarianceResult equivariance_check_impl(
    const std::function<Complex(const DynPoint&, std::int64_t, std::int64_t)>& entry_fn,
    const DynPoint& x, std::int64_t n, int samples, std::uint64_t seed, double tol,
    std::int64_t index_bound);

}  // namespace specband
