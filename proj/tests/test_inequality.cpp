#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "wulffbez/errors.hpp"
#include "wulffbez/inequality.hpp"

using namespace wulffbez;
using namespace testing_support;

namespace {

const Rational quarter = Rational(1) / 4;

Polytope s(const char* axis, int n) { return corpus(std::string("seg-") + axis, n); }

}  // namespace

TEST_CASE("form names, arity and constants") {
    CHECK(InequalityForm::parse("b-full").id == FormId::b_full);
    CHECK(InequalityForm::parse("bezout-r", 3).r == 3);
    CHECK(InequalityForm{FormId::b_full}.arity(3) == 3);
    CHECK(InequalityForm{FormId::main}.arity(3) == 2);
    CHECK(InequalityForm{FormId::iso_zonoid}.constant(4) == 3);
    CHECK(InequalityForm{FormId::iso_2}.constant(3) == 2);
    CHECK_THROWS_AS(InequalityForm::parse("nope"), std::invalid_argument);
    CHECK_THROWS_AS(evaluate(InequalityForm{FormId::b_full}, {s("x", 2)}, corpus("square")), arity_error);
}

TEST_CASE("verdicts") {
    CHECK(compare(1, 2) == Verdict::holds_strict);
    CHECK(compare(2, 2) == Verdict::equality);
    CHECK(compare(3, 2) == Verdict::violated);
    CHECK(compare(0, 0) == Verdict::indeterminate_zero);
    CHECK(compare(1, 0) == Verdict::violated);
}

TEST_CASE("exact instances") {
    const auto b = evaluate(InequalityForm{FormId::b_full}, {s("x", 2), s("y", 2)}, corpus("simplex-2"));
    CHECK(b.lhs == quarter);
    CHECK(b.rhs == quarter);
    CHECK(b.verdict == Verdict::equality);

    const auto sq = evaluate(InequalityForm{FormId::bezout_r, 2}, {s("x", 2), s("y", 2)}, corpus("square"));
    CHECK(sq.lhs == Rational(1) / 2);
    CHECK(sq.rhs == quarter);
    CHECK(*sq.ratio == 2);
    CHECK(sq.verdict == Verdict::violated);

    const auto cyl = evaluate(InequalityForm{FormId::iso_n}, {s("z", 3), s("x", 3), s("y", 3)}, corpus("cylinder-3"));
    CHECK(cyl.lhs == Rational(1) / 6);
    CHECK(cyl.rhs == Rational(1) / 6);

    const auto pyr = evaluate(InequalityForm{FormId::iso_2}, {s("x", 3), s("y", 3)}, corpus("pyramid-3"));
    CHECK(pyr.verdict == Verdict::equality);
    CHECK(pyr.lhs == Rational(1) / 18);
}

TEST_CASE("measure route agrees with polarization") {
    std::mt19937_64 rng(89);
    const std::vector<FormId> forms{FormId::b_full, FormId::main, FormId::bezout_r, FormId::iso_n,
                                    FormId::iso_main_n, FormId::iso_zonoid, FormId::iso_2};
    for (int i = 0; i < 21; ++i) {
        const int n = 2 + i % 2;
        InequalityForm form{forms[static_cast<std::size_t>(i) % forms.size()], 2};
        const Polytope k = random_polytope(rng, n);
        BodyTuple ls;
        for (int j = 0; j < form.arity(n); ++j) ls.push_back(random_body(rng, n));
        const auto a = evaluate(form, ls, k), b = evaluate_by_polarization(form, ls, k);
        CHECK(a.lhs == b.lhs);
        CHECK(a.rhs == b.rhs);
        CHECK(a.verdict == b.verdict);
    }
}

TEST_CASE("verdicts are scale and translation invariant") {
    std::mt19937_64 rng(97);
    for (int i = 0; i < 10; ++i) {
        const int n = 2 + i % 2;
        const Polytope k = random_polytope(rng, n);
        BodyTuple ls;
        for (int j = 0; j < n; ++j) ls.push_back(random_body(rng, n));
        const auto base = evaluate(InequalityForm{FormId::b_full}, ls, k);
        BodyTuple scaled;
        for (const auto& l : ls) scaled.push_back(random_positive(rng, 4, 3) * l + random_point(rng, n, 3));
        const auto moved =
            evaluate(InequalityForm{FormId::b_full}, scaled, random_positive(rng, 4, 3) * k + random_point(rng, n, 3));
        CHECK(moved.verdict == base.verdict);
    }
}

TEST_CASE("simplex certification") {
    const CertifyReport rep = simplex_certify(corpus("simplex-3"), 30, 7);
    CHECK(rep.b_full.total() == 30);
    CHECK(rep.b_full.violated == 0);
    CHECK(rep.main.violated == 0);
    CHECK(rep.rows.size() == 60);
    // Affine images of a simplex are simplices.
    const Polytope skew = make_polytope({{0, 0}, {3, 1}, {1, 2}});
    const CertifyReport img = simplex_certify(skew, 30, 8);
    CHECK(img.b_full.violated + img.main.violated == 0);
}

TEST_CASE("counterexample search") {
    const SearchResult sq = counterexample_search(corpus("square"), SearchFamily::segments, 100);
    REQUIRE(sq.violation);
    CHECK(sq.violation->verdict == Verdict::violated);
    const SearchResult oct = counterexample_search(corpus("octahedron"), SearchFamily::truncations, 1000);
    CHECK(oct.violation);
    const SearchResult tri = counterexample_search(corpus("simplex-3"), SearchFamily::all, 400);
    CHECK_FALSE(tri.violation);
    CHECK(parse_family("boxes") == SearchFamily::boxes);
    CHECK_THROWS_AS(parse_family("cones"), std::invalid_argument);
}

TEST_CASE("derivative probe") {
    const std::map<Direction, Rational> f{{Direction{1, 0}, Rational(1)}};
    const ProbeReport sq = derivative_probe(corpus("square"), s("y", 2), f, Side::left);
    CHECK(sq.exact);
    CHECK(sq.value == quarter);
    // F <= 0 with F(0) = 0 allows a nonnegative left derivative, so this
    // positive value is no certificate.
    CHECK_FALSE(sq.certifies_violation);
    const ProbeReport flipped =
        derivative_probe(corpus("square"), s("y", 2), {{Direction{1, 0}, Rational(-1)}}, Side::right);
    CHECK(flipped.value == -quarter);
    CHECK_FALSE(flipped.certifies_violation);

    std::map<Direction, Rational> all;
    const Polytope t = corpus("simplex-2");
    for (const auto& w : facet_normals(t)) all[w] = 1;
    const ProbeReport tri = derivative_probe(t, Rational(1) / 2 * t, all, Side::left);
    CHECK(tri.value == 0);
    CHECK_FALSE(tri.certifies_violation);

    CHECK(derivative_probe(corpus("square"), s("y", 2), {}, Side::right).value == 0);
}

TEST_CASE("zonoid equality readings") {
    const auto [a, b] = zonoid_equality_readings(3);
    CHECK(a.verdict == Verdict::equality);
    CHECK(a.lhs == Rational(1) / 18);
    CHECK(b.verdict != Verdict::violated);
}
