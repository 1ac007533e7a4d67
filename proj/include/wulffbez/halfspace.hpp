#pragma once

#include "wulffbez/direction.hpp"
#include "wulffbez/polytope.hpp"
#include "wulffbez/scalar.hpp"

#include <vector>

namespace wulffbez {

/// Closed halfspace {x : <x, normal> <= offset}.
struct Hyperplane {
    Direction normal;
    Rational offset;
};

/// Halfspace <a, x> <= b with an arbitrary nonzero rational a, rescaled so the
/// normal is primitive.
Hyperplane make_halfspace(const VectorXq& a, const Rational& b);

/// Facet halfspaces of a full-dimensional polytope, in facet order.
std::vector<Hyperplane> facet_halfspaces(const Polytope& p);

enum class VertexEnumeration {
    automatic,
    double_description,  // homogenized cone, incremental ray update
    polar,               // hull of w/b; requires every offset > 0
};

/// Intersection of the halfspaces as a polytope (H-to-V conversion).
/// Redundant constraints disappear; the result may be lower-dimensional.
/// Throws empty_error for an infeasible system and unbounded_error when the
/// intersection is not bounded. `automatic` picks the polar route when every
/// offset is positive.
Polytope intersect_halfspaces(const std::vector<Hyperplane>& halfspaces, int n,
                              VertexEnumeration method = VertexEnumeration::automatic);

}  // namespace wulffbez
