#pragma once

#include "wulffbez/direction.hpp"
#include "wulffbez/polytope.hpp"
#include "wulffbez/sphere_measure.hpp"

#include <optional>
#include <vector>

namespace wulffbez {

struct FacetMove {
    Polytope body;
    bool normals_preserved = true;  // false when a facet vanished
};

/// Moves the facet with outer normal w by eps along w (eps > 0 outward,
/// unnormalized: the offset becomes h_K(w) + eps). Throws std::invalid_argument
/// if w is not a facet normal and empty_error if the move empties K.
FacetMove facet_move(const Polytope& k, const Direction& w, const Rational& eps);

/// Smallest gap h_K(w) - <v, w> over vertices v off the facet at w: the
/// largest inward move keeping the facet's combinatorics.
Rational facet_survival_bound(const Polytope& k, const Direction& w);

struct Witness {
    Polytope mover;
    Direction moved_facet;
    Rational epsilon;
    bool absolutely_continuous = false;  // S_{K+M} ≪ S_K
    bool homothetic = false;             // M homothetic to K
    DiscreteSphereMeasure sum_measure;   // S_{K+M}
    DiscreteSphereMeasure base_measure;  // S_K

    bool valid() const { return absolutely_continuous && !homothetic; }
};

/// Searches single-facet moves of K, facets in normal order and eps in the
/// given order, for a mover M with S_{K+M} ≪ S_K that is not a homothet of K.
/// An empty eps list means outward moves by {1/4, 1/2, 1} times the facet's
/// survival bound. Movers that lose full dimension are skipped.
std::optional<Witness> weak_witness_search(const Polytope& k, const std::vector<Rational>& eps = {});

struct ChainCheck {
    DiscreteSphereMeasure mixed;   // S(M[r], K[n-1-r], ·)
    DiscreteSphereMeasure scaled;  // λ^r S_K
    Rational lambda;               // V(M, K[n-1]) / V_n(K)
};

/// Both sides of S(M[r], K[n-1-r], ·) = λ^r S_K, equal when M is a homothet of K.
ChainCheck homothet_chain_check(const Polytope& k, const Polytope& m, int r);

}  // namespace wulffbez
