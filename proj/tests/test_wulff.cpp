#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "wulffbez/errors.hpp"
#include "wulffbez/halfspace.hpp"
#include "wulffbez/wulff.hpp"

using namespace wulffbez;
using namespace testing_support;

namespace {

Polytope centered_square() { return corpus("square") + VectorXq::Constant(2, Rational(-1) / 2); }

}  // namespace

TEST_CASE("Wulff shape of the support data returns the body") {
    for (const auto& name : corpus_names()) {
        const Polytope k = corpus(name);
        CHECK(wulff_shape(support_spec(k)) == k);
    }
    CHECK_THROWS_AS(wulff_shape(SupportSpec{2, {{Direction{1, 0}, 1}}}), unbounded_error);
}

TEST_CASE("perturbation examples") {
    const auto f = std::map<Direction, Rational>{{Direction{0, 1}, Rational(1)}};
    const PerturbationSpec tri = centered(corpus("simplex-2"), f);
    CHECK(perturb(tri, Rational(1) / 4) == tri.base);
    const Polytope cut = perturb(tri, Rational(-1) / 4);
    CHECK(support_value(cut, Direction{0, 1}) == support_value(tri.base, Direction{0, 1}) - Rational(1) / 4);

    const PerturbationSpec sq = make_perturbation(centered_square(), {{Direction{1, 0}, Rational(1)}});
    const Polytope moved = perturb(sq, Rational(-1) / 4);
    CHECK(moved.volume() == Rational(3) / 4);
    CHECK(support_value(moved, Direction{1, 0}) == Rational(1) / 4);
    CHECK_THROWS_AS(perturb(sq, -1), range_error);
    CHECK_THROWS_AS(make_perturbation(corpus("square"), {}), std::invalid_argument);
}

TEST_CASE("support derivatives on the square") {
    const PerturbationSpec sq = make_perturbation(centered_square(), {{Direction{1, 0}, Rational(1)}});
    const DerivativeReport left = support_derivative(sq, Direction{1, 0}, Side::left);
    CHECK(left.exact);
    CHECK(left.value == 1);
    const DerivativeReport right = support_derivative(sq, Direction{1, 0}, Side::right);
    CHECK(right.exact);
    CHECK(right.value == 0);
}

TEST_CASE("one-sided derivatives at a vertex direction") {
    const PerturbationSpec tri = centered(corpus("simplex-2"), {{Direction{0, 1}, Rational(1)}});
    CHECK(support_derivative(tri, Direction{0, 1}, Side::right).value == 0);
    for (const auto& q : support_derivative(tri, Direction{0, 1}, Side::left).quotients) CHECK(q >= 1);
    const std::vector<Rational> samples{Rational(-1) / 8, Rational(-1) / 16, 0, Rational(1) / 16, Rational(1) / 8};
    CHECK(concavity_probe(tri, Direction{0, 1}, samples));
}

TEST_CASE("volume derivative closed form") {
    const PerturbationSpec one = make_perturbation(centered_square(), {{Direction{1, 0}, Rational(1)}});
    CHECK(volume_mixed_derivative(one, Side::left).value == Rational(1) / 2);
    std::map<Direction, Rational> all;
    for (const auto& w : facet_normals(centered_square())) all[w] = 1;
    const DerivativeReport rep = volume_mixed_derivative(make_perturbation(centered_square(), all), Side::left);
    CHECK(rep.exact);
    CHECK(rep.value == 2);
    CHECK(volume_mixed_derivative(make_perturbation(centered_square(), {}), Side::left).value == 0);
}

TEST_CASE("affine regime at facet normals") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 10; ++i) {
        const Polytope k = random_polytope(rng, 2 + i % 2, 3);
        std::map<Direction, Rational> f;
        for (const auto& facet : k.facets()) f[facet.normal] = random_positive(rng, 3, 2);
        const PerturbationSpec spec = centered(k, f);
        const Rational t = default_steps(spec, Side::left, 6).back();
        const Polytope kt = perturb(spec, t);
        for (const auto& facet : spec.base.facets()) {
            CHECK(support_value(kt, facet.normal) == facet.offset + t * f[facet.normal]);
        }
    }
}

TEST_CASE("monotone in t for nonnegative f") {
    std::mt19937_64 rng(67);
    for (int i = 0; i < 10; ++i) {
        const Polytope k = random_polytope(rng, 3, 3);
        std::map<Direction, Rational> f;
        for (int j = 0; j < 4; ++j) f[random_direction(rng, 3)] = random_positive(rng, 2, 3);
        const PerturbationSpec spec = centered(k, f);
        const auto steps = default_steps(spec, Side::left, 4);
        CHECK(contains(perturb(spec, steps[2]), perturb(spec, steps[1])));
        CHECK(contains(spec.base, perturb(spec, steps[3])));
    }
}

TEST_CASE("grid engine") {
    const Polytope k = corpus("cube-3") + VectorXq::Constant(3, Rational(-1) / 2);
    const CapBump cap{Direction{0, 0, 1}, 0.5, 1};
    CHECK(cap.value(Direction{0, 0, 1}) == 1);
    CHECK(cap.value(Direction{1, 0, 0}) == 0);
    const GridSpec g2 = make_grid(k, 2);
    for (const auto& w : facet_normals(k)) {
        CHECK(std::find(g2.directions.begin(), g2.directions.end(), w) != g2.directions.end());
    }
    CHECK(wulff_grid(k, cap, g2, 0) == k);
    // Outer approximations shrink under refinement.
    const Rational t = Rational(-1) / 4;
    const Rational v2 = wulff_grid(k, cap, make_grid(k, 2), t).volume();
    const Rational v3 = wulff_grid(k, cap, make_grid(k, 3), t).volume();
    CHECK(v3 <= v2);
    CHECK(v2 < 1);
    const double q = to_double(grid_support_quotient(k, cap, 3, Direction{0, 0, 1}, -Rational(1) / 4096));
    CHECK(q == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("superadditivity of Wulff shapes") {
    std::mt19937_64 rng(71);
    for (int i = 0; i < 8; ++i) {
        const Polytope a = random_polytope(rng, 2, 3), b = random_polytope(rng, 2, 3);
        SupportSpec g1{2, {}}, g2{2, {}}, mix{2, {}};
        for (const auto& w : facet_normals(a)) g1.entries[w] = g2.entries[w] = 0;
        for (const auto& w : facet_normals(b)) g1.entries[w] = g2.entries[w] = 0;
        for (auto& [w, v] : g1.entries) v = support_value(a, w);
        for (auto& [w, v] : g2.entries) v = support_value(b, w);
        const Rational lam = Rational(1) / 3;
        for (const auto& [w, v] : g1.entries) mix.entries[w] = (1 - lam) * v + lam * g2.entries[w];
        CHECK(contains(wulff_shape(mix), (1 - lam) * wulff_shape(g1) + lam * wulff_shape(g2)));
    }
}
