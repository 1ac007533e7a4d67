#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "wulffbez/decomposition.hpp"
#include "wulffbez/errors.hpp"

using namespace wulffbez;
using namespace testing_support;

TEST_CASE("facet moves") {
    const Polytope sq = corpus("square");
    const FacetMove out = facet_move(sq, Direction{1, 0}, 1);
    CHECK(out.normals_preserved);
    CHECK(out.body.volume() == 2);
    CHECK(facet_move(sq, Direction{1, 0}, 0).body == sq);
    CHECK_THROWS_AS(facet_move(sq, Direction{1, 1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(facet_move(sq, Direction{1, 0}, -2), empty_error);
    // Pushing the diagonal of the triangle inward until it meets the origin.
    const FacetMove collapse = facet_move(corpus("simplex-2"), Direction{1, 1}, -1);
    CHECK_FALSE(collapse.normals_preserved);
}

TEST_CASE("survival bound") {
    CHECK(facet_survival_bound(corpus("square"), Direction{1, 0}) == 1);
    CHECK(facet_survival_bound(corpus("simplex-2"), Direction{1, 1}) == 1);
}

TEST_CASE("witnesses for non-simplices") {
    for (const std::string name : {"square", "cube-3", "prism", "truncated-simplex-3", "octahedron", "hexagon"}) {
        const auto w = weak_witness_search(corpus(name));
        REQUIRE_MESSAGE(w, name);
        CHECK(w->valid());
        CHECK(absolutely_continuous(w->sum_measure, w->base_measure));
        CHECK_FALSE(is_homothetic(w->mover, corpus(name)));
    }
}

TEST_CASE("simplices only produce homothets") {
    for (int n = 2; n <= 4; ++n) CHECK_FALSE(weak_witness_search(corpus("simplex-" + std::to_string(n))));
}

TEST_CASE("constructed sums are weakly decomposable through their summand") {
    std::mt19937_64 rng(83);
    for (int i = 0; i < 8; ++i) {
        const int n = 2 + i % 2;
        const Polytope l = random_polytope(rng, n), m = random_polytope(rng, n);
        const Polytope k = l + m;
        CHECK(absolutely_continuous(surface_area_measure(k + m), surface_area_measure(k)));
    }
}

TEST_CASE("homothet chain") {
    const Polytope k = corpus("prism");
    VectorXq a(3);
    a << 1, -1, 2;
    for (int r = 0; r <= 2; ++r) {
        const ChainCheck c = homothet_chain_check(k, Rational(2) * k + a, r);
        CHECK(c.lambda == 2);
        CHECK(c.mixed == c.scaled);
    }
    const ChainCheck same = homothet_chain_check(k, k, 1);
    CHECK(same.lambda == 1);
    CHECK(same.mixed == same.scaled);
    const ChainCheck other = homothet_chain_check(k, corpus("cube-3"), 1);
    CHECK_FALSE(other.mixed == other.scaled);
    CHECK_THROWS_AS(homothet_chain_check(k, k, 3), std::invalid_argument);
}
