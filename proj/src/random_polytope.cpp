#include "wulffbez/random_polytope.hpp"

#include <algorithm>
#include <stdexcept>

namespace wulffbez {

namespace {

VectorXq grid_point(std::mt19937_64& rng, int n, int height) {
    std::uniform_int_distribution<int> coord(-height, height);
    VectorXq p(n);
    for (int i = 0; i < n; ++i) p[i] = coord(rng);
    return p;
}

}  // namespace

Polytope random_polytope(std::mt19937_64& rng, int n, int height, int min_points, int max_points) {
    if (n < 1 || height < 1 || min_points > max_points) throw std::invalid_argument("random_polytope: bad parameters");
    std::uniform_int_distribution<int> count(std::max(min_points, n + 1), std::max(max_points, n + 1));
    while (true) {
        const int m = count(rng);
        PointList pts;
        for (int i = 0; i < m; ++i) pts.push_back(grid_point(rng, n, height));
        Polytope p = convex_hull(std::move(pts), n);
        if (p.full_dimensional()) return p;
    }
}

Polytope random_body(std::mt19937_64& rng, int n, double degenerate_chance, int height) {
    std::bernoulli_distribution degenerate(degenerate_chance);
    if (!degenerate(rng) || n < 2) return random_polytope(rng, n, height);
    // k+1 points span at most a k-flat
    std::uniform_int_distribution<int> dim(1, n - 1);
    const int k = dim(rng);
    PointList pts;
    for (int i = 0; i <= k; ++i) pts.push_back(grid_point(rng, n, height));
    return convex_hull(std::move(pts), n);
}

}  // namespace wulffbez
