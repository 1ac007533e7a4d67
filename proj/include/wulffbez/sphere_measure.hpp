#pragma once

#include "wulffbez/direction.hpp"
#include "wulffbez/mixed_volume.hpp"
#include "wulffbez/polytope.hpp"

#include <map>
#include <utility>
#include <vector>

namespace wulffbez {

/// Finitely supported measure on S^{n-1}.
///
/// Atoms are keyed by primitive directions w and store co-weights: the mass
/// of the atom at u = w/‖w‖ is co_weight·‖w‖. Zero atoms are never stored.
class DiscreteSphereMeasure {
public:
    explicit DiscreteSphereMeasure(int n) : n_(n) {}

    int ambient_dim() const { return n_; }
    const std::map<Direction, Rational>& atoms() const { return atoms_; }
    bool empty() const { return atoms_.empty(); }

    /// Co-weight at w (0 when w is not an atom).
    Rational at(const Direction& w) const;

    /// Adds c to the atom at w, dropping it if the sum is exactly zero.
    void add(const Direction& w, const Rational& c);

    std::vector<Direction> support() const;

    DiscreteSphereMeasure& operator+=(const DiscreteSphereMeasure& other);
    DiscreteSphereMeasure& operator*=(const Rational& lambda);

    bool operator==(const DiscreteSphereMeasure& other) const = default;

private:
    int n_;
    std::map<Direction, Rational> atoms_;
};

DiscreteSphereMeasure operator+(DiscreteSphereMeasure a, const DiscreteSphereMeasure& b);
DiscreteSphereMeasure operator*(const Rational& lambda, DiscreteSphereMeasure a);

/// S_P. Full-dimensional P: one atom per facet. dim P = n-1: atoms at ±w of
/// its normal line. Lower dimensions: the zero measure.
DiscreteSphereMeasure surface_area_measure(const Polytope& p);

/// S(K_1, ..., K_{n-1}, ·) via the alternating sum
///   (1/(n-1)!) Σ_{S≠∅} (-1)^{n-1-|S|} S_{Σ_{i∈S} K_i}.
/// A negative aggregated atom indicates a bug and throws std::logic_error.
DiscreteSphereMeasure mixed_area_measure(const BodyTuple& bodies);

/// Both sides of S(K_1..K_{n-1}, {u}) = V(K_1^u, ..., K_{n-1}^u) in co-weight
/// normalization: (atom of the mixed area measure at w, mixed volume of the
/// faces K_i^w in the project() chart divided by |w_j|).
std::pair<Rational, Rational> atom_check(const BodyTuple& bodies, const Direction& w);

/// (1/n)·Σ h_L(w)·co_weight(w) = (1/n)∫ h_L dμ.
Rational pairing(const Polytope& l, const DiscreteSphereMeasure& mu);

/// For discrete measures: support(μ) ⊆ support(ν).
bool absolutely_continuous(const DiscreteSphereMeasure& mu, const DiscreteSphereMeasure& nu);

/// (S_{L+M}, Σ_{r=0}^{n-1} C(n-1,r)·S(M[r], L[n-1-r], ·)).
std::pair<DiscreteSphereMeasure, DiscreteSphereMeasure> sum_expansion_sides(const Polytope& l, const Polytope& m);

}  // namespace wulffbez
