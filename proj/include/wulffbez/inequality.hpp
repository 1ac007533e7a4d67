#pragma once

#include "wulffbez/direction.hpp"
#include "wulffbez/mixed_volume.hpp"
#include "wulffbez/polytope.hpp"
#include "wulffbez/wulff.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wulffbez {

/// Inequality families, written lhs <= c·rhs:
///   b_full      V(L_1..L_n) V_n(K)                  <= V(L_1,K[n-1]) V(L_2..L_n,K)          c = 1
///   main        V(L_1..L_{n-1},K) V_n(K)            <= V(L_1,K[n-1]) V(L_2..L_{n-1},K,K)    c = 1
///   bezout_r    V(L_1..L_r,K[n-r]) V_n(K)^{r-1}     <= Π V(L_i,K[n-1])                      c = 1
///   iso_n       b_full with c = n
///   iso_main_n  main with c = n
///   iso_zonoid  main with c = n-1 (stated for zonoids L_i)
///   iso_2       bezout_r at r = 2 with c = 2
enum class FormId { b_full, main, bezout_r, iso_n, iso_main_n, iso_zonoid, iso_2 };

struct InequalityForm {
    FormId id = FormId::b_full;
    int r = 2;  // only read by bezout_r

    /// Number of L bodies in R^n.
    int arity(int n) const;
    Rational constant(int n) const;
    std::string name() const;

    /// Accepts the CLI spellings b-full, main, bezout-r, iso-n, iso-main-n,
    /// iso-zonoid, iso-2. Throws std::invalid_argument otherwise.
    static InequalityForm parse(const std::string& name, int r = 2);
};

enum class Verdict { holds_strict, equality, violated, indeterminate_zero };

std::string to_string(Verdict v);

struct InequalityReport {
    InequalityForm form;
    Rational lhs;
    Rational rhs;                  // includes the constant
    std::optional<Rational> ratio;  // lhs/rhs when rhs != 0
    Verdict verdict = Verdict::indeterminate_zero;
    BodyTuple ls;
    Polytope k;
};

/// Verdict of lhs <= rhs, with rhs = 0 reported as indeterminate_zero when
/// lhs = 0 and as violated when lhs > 0.
Verdict compare(const Rational& lhs, const Rational& rhs);

/// Exact evaluation. Every mixed volume is read off as a pairing against one
/// mixed area measure, e.g. for b_full with μ = S(L_2..L_n, ·):
/// V(L_1..L_n) = pairing(L_1, μ) and V(L_2..L_n, K) = pairing(K, μ).
/// Throws arity_error on a wrong number of L bodies and std::invalid_argument
/// when K is not full-dimensional.
InequalityReport evaluate(const InequalityForm& form, const BodyTuple& ls, const Polytope& k);

/// Same sides computed with mixed_volume directly; used to cross-check evaluate.
InequalityReport evaluate_by_polarization(const InequalityForm& form, const BodyTuple& ls, const Polytope& k);

struct VerdictCounts {
    int holds_strict = 0;
    int equality = 0;
    int violated = 0;
    int indeterminate = 0;

    void add(Verdict v);
    int total() const { return holds_strict + equality + violated + indeterminate; }
};

struct CertifyRow {
    int trial = 0;
    FormId form = FormId::b_full;
    Rational lhs, rhs;
    Verdict verdict = Verdict::holds_strict;
};

struct CertifyReport {
    int trials = 0;
    std::uint64_t seed = 0;
    VerdictCounts b_full;
    VerdictCounts main;
    std::vector<CertifyRow> rows;
};

/// Draws `trials` random tuples L_1..L_n (integer grid [-4,4]^n, 4-8 points
/// each) and evaluates b_full and main (the latter on L_1..L_{n-1}).
CertifyReport simplex_certify(const Polytope& k, int trials, std::uint64_t seed);

enum class SearchFamily { segments, faces, truncations, boxes, all };

SearchFamily parse_family(const std::string& name);
std::string to_string(SearchFamily family);

/// Segments [0,v] used as the first body: facet normals, edge directions,
/// vertex directions from the centroid, coordinate axes (deduplicated, in
/// that order).
std::vector<Polytope> candidate_segments(const Polytope& k);

/// Second-body candidates of a family, in canonical order.
std::vector<Polytope> candidate_bodies(const Polytope& k, SearchFamily family);

struct SearchResult {
    std::optional<InequalityReport> violation;
    int evaluated = 0;
};

/// Pairs every candidate segment L_1 with every family body L_2 and evaluates
/// bezout_r (r = 2) and then main (L_1, L_2, K, ..., K). Returns the first
/// violated instance; failing to find one within `budget` evaluations proves
/// nothing.
SearchResult counterexample_search(const Polytope& k, SearchFamily family, int budget);

struct ProbeReport {
    Side side = Side::right;
    Rational value;           // F'(0) on the chosen side
    Rational mixed_rate;      // d/dt V(K_t, M, K[n-2])
    Rational volume_rate;     // d/dt V(K_t, K[n-1])
    bool exact = false;       // every support derivative was certified
    bool certifies_violation = false;
};

/// One-sided derivative at t = 0 of
///   F(t) = V(K_t, M, K[n-2]) V_n(K) - V(K_t, K[n-1]) V(M, K[n-1]),
/// with K_t = W(h_K + t f) built on K centered at its vertex centroid (mixed
/// volumes are translation invariant). If K satisfied bezout_r (r = 2) for
/// all bodies, F would be <= 0 near 0 with F(0) = 0, so a positive right
/// derivative or a negative left derivative certifies a violation.
ProbeReport derivative_probe(const Polytope& k, const Polytope& m, const std::map<Direction, Rational>& f, Side side);

/// The two readings of the equality case for iso_zonoid on the pyramid
/// K = conv{[0,1]^{n-1} × {0}, e_n}:
///   reading A: L_i = [0, e_i] for i = 1..n-1;
///   reading B: L_i = [0, e_{i+1}] for i = 1..n-2, and L_{n-1} = K.
std::pair<InequalityReport, InequalityReport> zonoid_equality_readings(int n);

}  // namespace wulffbez
