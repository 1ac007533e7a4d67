#pragma once

#include "wulffbez/polytope.hpp"

#include <string>
#include <vector>

namespace wulffbez {

/// Named bodies:
///   simplex-N            conv{0, e_1, ..., e_N}
///   centered-simplex-N   simplex-N translated to put its centroid at 0
///   cube-N, square       [0,1]^N, [0,1]^2
///   octahedron[-N]       conv{±e_i}, default N = 3
///   prism                conv{0,e1,e2} × [0,1]
///   pyramid-N            conv{[0,1]^{N-1} × {0}, e_N}
///   cylinder-3           [0,1]^2 × [0,e3], read as a segment times a square
///   truncated-simplex-3  simplex-3 with the origin corner cut at depth 1/2
///   hexagon              simplex-2 + (-simplex-2)
///   seg-x, seg-y, seg-z, seg-I   [0, e_i] in R^n
/// Segments take their dimension from `n` (default 2 when n = 0). Names not
/// listed are looked up as <name>.json in $WULFFBEZ_CORPUS_DIR. Throws
/// std::invalid_argument for unknown names.
Polytope corpus(const std::string& name, int n = 0);

/// The built-in full-dimensional bodies used by the test suites.
std::vector<std::string> corpus_names();

}  // namespace wulffbez
