#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "wulffbez/sphere_measure.hpp"

using namespace wulffbez;
using namespace testing_support;

TEST_CASE("measure arithmetic drops zero atoms") {
    DiscreteSphereMeasure mu(2);
    mu.add(Direction{1, 0}, 2);
    mu.add(Direction{1, 0}, -2);
    CHECK(mu.empty());
    mu.add(Direction{0, 1}, 1);
    DiscreteSphereMeasure nu = Rational(3) * mu + mu;
    CHECK(nu.at(Direction{0, 1}) == 4);
    CHECK(nu.at(Direction{1, 0}) == 0);
}

TEST_CASE("surface area measures") {
    const DiscreteSphereMeasure sq = surface_area_measure(corpus("square"));
    CHECK(sq.atoms().size() == 4);
    CHECK(sq.at(Direction{-1, 0}) == 1);
    const DiscreteSphereMeasure moved = surface_area_measure(corpus("square") + VectorXq::Constant(2, Rational(3)));
    CHECK(moved == sq);
    const Polytope disk = make_polytope({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}});
    const DiscreteSphereMeasure d = surface_area_measure(disk);
    CHECK(d.at(Direction{0, 0, 1}) == 2);
    CHECK(d.at(Direction{0, 0, -1}) == 2);
    CHECK(surface_area_measure(corpus("seg-x", 3)).empty());
}

TEST_CASE("two segments in R^3") {
    const DiscreteSphereMeasure mu = mixed_area_measure({corpus("seg-x", 3), corpus("seg-y", 3)});
    CHECK(mu.atoms().size() == 2);
    CHECK(mu.at(Direction{0, 0, 1}) == Rational(1) / 2);
    CHECK(mu.at(Direction{0, 0, -1}) == Rational(1) / 2);
}

TEST_CASE("mixed area measure pairs to mixed volumes") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 25; ++i) {
        const int n = 2 + i % 2;
        const BodyTuple t = random_tuple(rng, n, 0.4);
        const BodyTuple rest(t.begin() + 1, t.end());
        CHECK(pairing(t[0], mixed_area_measure(rest)) == mixed_volume(t));
    }
}

TEST_CASE("atoms equal mixed volumes of faces") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 20; ++i) {
        const int n = 2 + i % 2;
        BodyTuple t;
        for (int j = 0; j < n - 1; ++j) t.push_back(random_body(rng, n, 0.4));
        const DiscreteSphereMeasure mu = mixed_area_measure(t);
        for (const auto& [w, c] : mu.atoms()) {
            const auto [atom, faces] = atom_check(t, w);
            CHECK(atom == c);
            CHECK(faces == c);
        }
    }
}

TEST_CASE("mixed area measure is linear in each slot") {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 10; ++i) {
        const Polytope a = random_body(rng, 3), b = random_body(rng, 3), c = random_body(rng, 3);
        const Rational lam = random_positive(rng, 3, 2);
        CHECK(mixed_area_measure({lam * a + b, c}) ==
              lam * mixed_area_measure({a, c}) + mixed_area_measure({b, c}));
    }
}

TEST_CASE("sum expansion matches S_{L+M}") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 12; ++i) {
        const int n = 2 + i % 2;
        const auto [sum, expansion] = sum_expansion_sides(random_body(rng, n), random_body(rng, n));
        CHECK(sum == expansion);
    }
}

TEST_CASE("absolute continuity") {
    const DiscreteSphereMeasure sq = surface_area_measure(corpus("square"));
    const DiscreteSphereMeasure tri = surface_area_measure(corpus("simplex-2"));
    CHECK(absolutely_continuous(sq, sq));
    CHECK_FALSE(absolutely_continuous(tri, sq));
    CHECK(absolutely_continuous(DiscreteSphereMeasure(2), tri));
}
