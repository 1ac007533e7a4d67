#include "wulffbez/inequality.hpp"

#include "wulffbez/errors.hpp"
#include "wulffbez/random_polytope.hpp"
#include "wulffbez/sphere_measure.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace wulffbez {

int InequalityForm::arity(int n) const {
    switch (id) {
    case FormId::b_full:
    case FormId::iso_n:
        return n;
    case FormId::main:
    case FormId::iso_main_n:
    case FormId::iso_zonoid:
        return n - 1;
    case FormId::bezout_r:
        return r;
    case FormId::iso_2:
        return 2;
    }
    return 0;
}

Rational InequalityForm::constant(int n) const {
    switch (id) {
    case FormId::iso_n:
    case FormId::iso_main_n:
        return n;
    case FormId::iso_zonoid:
        return n - 1;
    case FormId::iso_2:
        return 2;
    default:
        return 1;
    }
}

std::string InequalityForm::name() const {
    switch (id) {
    case FormId::b_full: return "b-full";
    case FormId::main: return "main";
    case FormId::bezout_r: return "bezout-r";
    case FormId::iso_n: return "iso-n";
    case FormId::iso_main_n: return "iso-main-n";
    case FormId::iso_zonoid: return "iso-zonoid";
    case FormId::iso_2: return "iso-2";
    }
    return "?";
}

InequalityForm InequalityForm::parse(const std::string& name, int r) {
    static const std::map<std::string, FormId> ids{
        {"b-full", FormId::b_full},         {"main", FormId::main},           {"bezout-r", FormId::bezout_r},
        {"iso-n", FormId::iso_n},           {"iso-main-n", FormId::iso_main_n}, {"iso-zonoid", FormId::iso_zonoid},
        {"iso-2", FormId::iso_2},
    };
    auto it = ids.find(name);
    if (it == ids.end()) throw std::invalid_argument("unknown inequality form '" + name + "'");
    return InequalityForm{it->second, it->second == FormId::iso_2 ? 2 : r};
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::holds_strict: return "holds_strict";
    case Verdict::equality: return "equality";
    case Verdict::violated: return "violated";
    case Verdict::indeterminate_zero: return "indeterminate_zero";
    }
    return "?";
}

Verdict compare(const Rational& lhs, const Rational& rhs) {
    if (rhs == 0) return lhs == 0 ? Verdict::indeterminate_zero : (lhs > 0 ? Verdict::violated : Verdict::holds_strict);
    if (lhs < rhs) return Verdict::holds_strict;
    if (lhs == rhs) return Verdict::equality;
    return Verdict::violated;
}

namespace {

int check_instance(const InequalityForm& form, const BodyTuple& ls, const Polytope& k) {
    const int n = k.ambient_dim();
    if (!k.full_dimensional()) throw std::invalid_argument("inequality body K must be full-dimensional");
    if (form.id == FormId::bezout_r && (form.r < 1 || form.r > n)) {
        throw std::invalid_argument("bezout-r needs 1 <= r <= n, got r = " + std::to_string(form.r));
    }
    if (static_cast<int>(ls.size()) != form.arity(n)) {
        throw arity_error(form.name() + " in R^" + std::to_string(n) + " takes " + std::to_string(form.arity(n)) +
                          " L bodies, got " + std::to_string(ls.size()));
    }
    for (const auto& l : ls) {
        if (l.ambient_dim() != n) throw dimension_mismatch("L body in R^" + std::to_string(l.ambient_dim()));
    }
    return n;
}

InequalityReport finish(const InequalityForm& form, const BodyTuple& ls, const Polytope& k, Rational lhs,
                        Rational rhs) {
    InequalityReport rep{form, std::move(lhs), std::move(rhs), std::nullopt, Verdict::indeterminate_zero, ls, k};
    if (rep.rhs != 0) rep.ratio = rep.lhs / rep.rhs;
    rep.verdict = compare(rep.lhs, rep.rhs);
    return rep;
}

BodyTuple slice(const BodyTuple& ls, std::size_t from) { return BodyTuple(ls.begin() + from, ls.end()); }

}  // namespace

InequalityReport evaluate(const InequalityForm& form, const BodyTuple& ls, const Polytope& k) {
    const int n = check_instance(form, ls, k);
    const Rational c = form.constant(n);
    const DiscreteSphereMeasure s_k = surface_area_measure(k);
    const Rational vol = k.volume();

    switch (form.id) {
    case FormId::b_full:
    case FormId::iso_n: {
        const auto mu = mixed_area_measure(slice(ls, 1));
        return finish(form, ls, k, pairing(ls[0], mu) * vol, c * pairing(ls[0], s_k) * pairing(k, mu));
    }
    case FormId::main:
    case FormId::iso_main_n:
    case FormId::iso_zonoid: {
        const auto mu = mixed_area_measure(repeat(slice(ls, 1), k, 1));
        return finish(form, ls, k, pairing(ls[0], mu) * vol, c * pairing(ls[0], s_k) * pairing(k, mu));
    }
    case FormId::bezout_r:
    case FormId::iso_2: {
        const int r = form.arity(n);
        const auto mu = mixed_area_measure(repeat(slice(ls, 1), k, n - r));
        Rational rhs = c;
        for (const auto& l : ls) rhs *= pairing(l, s_k);
        return finish(form, ls, k, pairing(ls[0], mu) * power(vol, r - 1), rhs);
    }
    }
    throw std::logic_error("evaluate: unhandled form");
}

InequalityReport evaluate_by_polarization(const InequalityForm& form, const BodyTuple& ls, const Polytope& k) {
    const int n = check_instance(form, ls, k);
    const Rational c = form.constant(n);
    const Rational vol = k.volume();
    const Rational first = mixed_volume(repeat({ls[0]}, k, n - 1));

    switch (form.id) {
    case FormId::b_full:
    case FormId::iso_n:
        return finish(form, ls, k, mixed_volume(ls) * vol, c * first * mixed_volume(repeat(slice(ls, 1), k, 1)));
    case FormId::main:
    case FormId::iso_main_n:
    case FormId::iso_zonoid:
        return finish(form, ls, k, mixed_volume(repeat(ls, k, 1)) * vol,
                      c * first * mixed_volume(repeat(slice(ls, 1), k, 2)));
    case FormId::bezout_r:
    case FormId::iso_2: {
        const int r = form.arity(n);
        Rational rhs = c;
        for (const auto& l : ls) rhs *= mixed_volume(repeat({l}, k, n - 1));
        return finish(form, ls, k, mixed_volume(repeat(ls, k, n - r)) * power(vol, r - 1), rhs);
    }
    }
    throw std::logic_error("evaluate_by_polarization: unhandled form");
}

void VerdictCounts::add(Verdict v) {
    switch (v) {
    case Verdict::holds_strict: ++holds_strict; break;
    case Verdict::equality: ++equality; break;
    case Verdict::violated: ++violated; break;
    case Verdict::indeterminate_zero: ++indeterminate; break;
    }
}

CertifyReport simplex_certify(const Polytope& k, int trials, std::uint64_t seed) {
    if (trials <= 0) throw std::invalid_argument("simplex_certify: trials must be positive");
    const int n = k.ambient_dim();
    std::mt19937_64 rng(seed);
    CertifyReport report;
    report.trials = trials;
    report.seed = seed;
    for (int trial = 0; trial < trials; ++trial) {
        BodyTuple ls;
        for (int i = 0; i < n; ++i) ls.push_back(random_polytope(rng, n));
        const auto full = evaluate(InequalityForm{FormId::b_full}, ls, k);
        report.b_full.add(full.verdict);
        report.rows.push_back(CertifyRow{trial, FormId::b_full, full.lhs, full.rhs, full.verdict});
        ls.pop_back();
        const auto main = evaluate(InequalityForm{FormId::main}, ls, k);
        report.main.add(main.verdict);
        report.rows.push_back(CertifyRow{trial, FormId::main, main.lhs, main.rhs, main.verdict});
    }
    return report;
}

SearchFamily parse_family(const std::string& name) {
    if (name == "segments") return SearchFamily::segments;
    if (name == "faces") return SearchFamily::faces;
    if (name == "truncations") return SearchFamily::truncations;
    if (name == "boxes") return SearchFamily::boxes;
    if (name == "all") return SearchFamily::all;
    throw std::invalid_argument("unknown search family '" + name + "'");
}

std::string to_string(SearchFamily family) {
    switch (family) {
    case SearchFamily::segments: return "segments";
    case SearchFamily::faces: return "faces";
    case SearchFamily::truncations: return "truncations";
    case SearchFamily::boxes: return "boxes";
    case SearchFamily::all: return "all";
    }
    return "?";
}

namespace {

/// Facet normals, then vertex directions from the centroid, deduplicated.
std::vector<Direction> cut_directions(const Polytope& k) {
    std::vector<Direction> out;
    std::set<Direction> seen;
    for (const auto& f : k.facets()) {
        if (seen.insert(f.normal).second) out.push_back(f.normal);
    }
    const VectorXq c = vertex_centroid(k);
    for (const auto& v : k.vertices()) {
        const Direction d(VectorXq(v - c));
        if (seen.insert(d).second) out.push_back(d);
    }
    return out;
}

}  // namespace

std::vector<Polytope> candidate_segments(const Polytope& k) {
    const int n = k.ambient_dim();
    std::vector<Direction> dirs;
    std::set<Direction> seen;
    auto push = [&](const Direction& d) {
        const Direction line = line_representative(d);
        if (seen.insert(line).second) dirs.push_back(line);
    };
    for (const auto& f : k.facets()) push(f.normal);
    if (k.full_dimensional()) {
        for (const auto& [a, b] : edges(k)) push(Direction(VectorXq(k.vertices()[b] - k.vertices()[a])));
    }
    const VectorXq c = vertex_centroid(k);
    for (const auto& v : k.vertices()) {
        if (!equal(v, c)) push(Direction(VectorXq(v - c)));
    }
    for (int i = 0; i < n; ++i) push(Direction(unit_vector(n, i)));

    std::vector<Polytope> out;
    out.reserve(dirs.size());
    for (const auto& d : dirs) out.push_back(segment(d.as_rational()));
    return out;
}

std::vector<Polytope> candidate_bodies(const Polytope& k, SearchFamily family) {
    const int n = k.ambient_dim();
    std::vector<Polytope> out;
    const bool all = family == SearchFamily::all;
    if (family == SearchFamily::segments || all) {
        for (auto& s : candidate_segments(k)) out.push_back(std::move(s));
    }
    if (family == SearchFamily::faces || all) {
        for (const auto& f : k.facets()) out.push_back(face(k, f.normal));
        for (const auto& [a, b] : edges(k)) out.push_back(convex_hull({k.vertices()[a], k.vertices()[b]}, n));
    }
    if (family == SearchFamily::truncations || all) {
        for (const auto& u : cut_directions(k)) {
            const Rational w = width(k, u);
            for (int q = 1; q <= 3; ++q) out.push_back(truncate(k, u, w * q / 4));
        }
    }
    if (family == SearchFamily::boxes || all) {
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            PointList corner{VectorXq::Constant(n, Rational(0))};
            for (int i = 0; i < n; ++i) {
                if (!(mask & (1u << i))) continue;
                PointList next;
                for (const auto& p : corner) {
                    next.push_back(p);
                    next.push_back(p + unit_vector(n, i));
                }
                corner = std::move(next);
            }
            out.push_back(convex_hull(std::move(corner), n));
        }
        for (int i = 0; i < n; ++i) {
            PointList corner{VectorXq::Constant(n, Rational(0))};
            for (int j = 0; j < n; ++j) {
                PointList next;
                for (const auto& p : corner) {
                    next.push_back(p);
                    next.push_back(p + unit_vector(n, j) * Rational(i == j ? 2 : 1));
                }
                corner = std::move(next);
            }
            out.push_back(convex_hull(std::move(corner), n));
        }
    }
    return out;
}

SearchResult counterexample_search(const Polytope& k, SearchFamily family, int budget) {
    if (!k.full_dimensional()) throw std::invalid_argument("counterexample_search: K must be full-dimensional");
    const int n = k.ambient_dim();
    SearchResult result;
    const auto firsts = candidate_segments(k);
    const auto seconds = candidate_bodies(k, family);
    for (const auto& l1 : firsts) {
        for (const auto& l2 : seconds) {
            if (result.evaluated >= budget) return result;
            ++result.evaluated;
            auto bez = evaluate(InequalityForm{FormId::bezout_r, 2}, {l1, l2}, k);
            if (bez.verdict == Verdict::violated) {
                result.violation = std::move(bez);
                return result;
            }
            if (n < 3) continue;
            if (result.evaluated >= budget) return result;
            ++result.evaluated;
            auto main = evaluate(InequalityForm{FormId::main}, repeat({l1, l2}, k, n - 3), k);
            if (main.verdict == Verdict::violated) {
                result.violation = std::move(main);
                return result;
            }
        }
    }
    return result;
}

ProbeReport derivative_probe(const Polytope& k, const Polytope& m, const std::map<Direction, Rational>& f,
                             Side side) {
    const int n = k.ambient_dim();
    if (m.ambient_dim() != n) throw dimension_mismatch("derivative_probe: M in another dimension");
    const PerturbationSpec spec = centered(k, f);
    const Polytope& kc = spec.base;

    ProbeReport report;
    report.side = side;

    const DiscreteSphereMeasure s_k = surface_area_measure(kc);
    const DiscreteSphereMeasure mu = mixed_area_measure(repeat({m}, kc, n - 2));

    // h_{K_t}(w) for all atoms of μ at a shared step ladder
    const auto steps = default_steps(spec, side);
    std::vector<Polytope> bodies;
    bodies.reserve(steps.size());
    for (const auto& t : steps) bodies.push_back(perturb(spec, t));

    bool all_exact = true;
    Rational mixed_rate = 0;
    for (const auto& [w, weight] : mu.atoms()) {
        const Rational h0 = support_value(kc, w);
        std::optional<Rational> prev, derivative;
        Rational last = 0;
        for (std::size_t i = 0; i < steps.size(); ++i) {
            last = (support_value(bodies[i], w) - h0) / steps[i];
            if (prev && *prev == last) {
                derivative = last;
                break;
            }
            prev = last;
        }
        if (!derivative) all_exact = false;
        mixed_rate += weight * derivative.value_or(last);
    }
    report.mixed_rate = mixed_rate / n;

    const DerivativeReport vol = volume_mixed_derivative(spec, side);
    report.volume_rate = vol.value;
    report.exact = all_exact && vol.exact;

    report.value = report.mixed_rate * kc.volume() - report.volume_rate * pairing(m, s_k);
    report.certifies_violation =
        report.exact && ((side == Side::right && report.value > 0) || (side == Side::left && report.value < 0));
    return report;
}

std::pair<InequalityReport, InequalityReport> zonoid_equality_readings(int n) {
    if (n < 3) throw std::invalid_argument("zonoid_equality_readings: n must be at least 3");
    PointList pts;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        VectorXq p = VectorXq::Constant(n, Rational(0));
        for (int i = 0; i < n - 1; ++i) {
            if (mask & (1u << i)) p[i] = 1;
        }
        pts.push_back(std::move(p));
    }
    pts.push_back(unit_vector(n, n - 1));
    const Polytope k = convex_hull(std::move(pts), n);
    const InequalityForm form{FormId::iso_zonoid};

    BodyTuple a;
    for (int i = 0; i < n - 1; ++i) a.push_back(segment(unit_vector(n, i)));
    BodyTuple b;
    for (int i = 1; i <= n - 2; ++i) b.push_back(segment(unit_vector(n, i)));
    b.push_back(k);
    return {evaluate(form, a, k), evaluate(form, b, k)};
}

}  // namespace wulffbez
