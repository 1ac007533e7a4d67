#pragma once

#include "wulffbez/polytope.hpp"

#include <random>

namespace wulffbez {

/// Hull of `count` points drawn uniformly from the integer grid [-height, height]^n,
/// count uniform in [min_points, max_points] (raised to n+1 if smaller).
/// Degenerate draws are discarded, so the result is always full-dimensional.
Polytope random_polytope(std::mt19937_64& rng, int n, int height = 4, int min_points = 4, int max_points = 8);

/// Like random_polytope but accepts lower-dimensional hulls (segments, flat
/// polygons) with the given probability of forcing a k-dimensional draw, k < n.
Polytope random_body(std::mt19937_64& rng, int n, double degenerate_chance = 0.25, int height = 4);

}  // namespace wulffbez
