#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "wulffbez/errors.hpp"
#include "wulffbez/halfspace.hpp"

using namespace wulffbez;
using namespace testing_support;

namespace {

Hyperplane hs(std::initializer_list<long> a, const Rational& b) {
    VectorXq v(static_cast<Eigen::Index>(a.size()));
    int i = 0;
    for (long x : a) v[i++] = x;
    return make_halfspace(v, b);
}

}  // namespace

TEST_CASE("make_halfspace rescales to a primitive normal") {
    VectorXq a(2);
    a << Rational(1) / 2, 1;
    const Hyperplane h = make_halfspace(a, 3);
    CHECK(h.normal == Direction{1, 2});
    CHECK(h.offset == 6);
}

TEST_CASE("both routes recover the unit square") {
    const std::vector<Hyperplane> box{hs({1, 0}, 1), hs({-1, 0}, 0), hs({0, 1}, 1), hs({0, -1}, 0),
                                      hs({1, 1}, 5)};
    CHECK(intersect_halfspaces(box, 2, VertexEnumeration::double_description) == corpus("square"));
    const Polytope centered = corpus("square") + VectorXq::Constant(2, Rational(-1) / 2);
    const auto around = facet_halfspaces(centered);
    CHECK(intersect_halfspaces(around, 2, VertexEnumeration::polar) == centered);
    CHECK(intersect_halfspaces(around, 2, VertexEnumeration::double_description) == centered);
}

TEST_CASE("unbounded and infeasible systems") {
    CHECK_THROWS_AS(intersect_halfspaces({hs({1, 0}, 1), hs({0, 1}, 1)}, 2), unbounded_error);
    CHECK_THROWS_AS(intersect_halfspaces({hs({1, 0}, -1), hs({-1, 0}, -1), hs({0, 1}, 1), hs({0, -1}, 1)}, 2),
                    empty_error);
    CHECK_THROWS_AS(
        intersect_halfspaces({hs({1, 0}, 1), hs({-1, 0}, 1)}, 2, VertexEnumeration::double_description),
        unbounded_error);
}

TEST_CASE("lower-dimensional intersections") {
    const Polytope seg = intersect_halfspaces({hs({0, 1}, 0), hs({0, -1}, 0), hs({1, 0}, 1), hs({-1, 0}, 0)}, 2);
    CHECK(seg.dim() == 1);
    CHECK(seg == corpus("seg-x", 2));
}

TEST_CASE("round trip V to H to V on random bodies, both routes") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 30; ++i) {
        const int n = 2 + i % 3;
        const Polytope p = random_polytope(rng, n);
        const Polytope c = p + (-vertex_centroid(p));
        const auto h = facet_halfspaces(c);
        CHECK(intersect_halfspaces(h, n, VertexEnumeration::double_description) == c);
        CHECK(intersect_halfspaces(h, n, VertexEnumeration::polar) == c);
    }
}

TEST_CASE("redundant constraints vanish") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 15; ++i) {
        const Polytope p = random_polytope(rng, 3);
        auto h = facet_halfspaces(p);
        for (int j = 0; j < 4; ++j) {
            const Direction w = random_direction(rng, 3);
            h.push_back({w, support_value(p, w) + random_positive(rng, 3, 2)});
        }
        CHECK(intersect_halfspaces(h, 3) == p);
    }
}
