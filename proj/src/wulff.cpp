#include "wulffbez/wulff.hpp"

#include "wulffbez/errors.hpp"
#include "wulffbez/halfspace.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace wulffbez {

namespace {

bool origin_interior(const Polytope& k) {
    if (!k.full_dimensional()) return false;
    return std::all_of(k.facets().begin(), k.facets().end(), [](const Facet& f) { return f.offset > 0; });
}

/// min(|bound|, 1); halving it gives steps strictly inside the admissible range.
Rational step_scale(const std::optional<Rational>& bound) {
    Rational tau = 1;
    if (bound) tau = std::min(tau, abs(*bound));
    return tau;
}

}  // namespace

SupportSpec support_spec(const Polytope& k) {
    if (!k.full_dimensional()) throw std::invalid_argument("support_spec: body must be full-dimensional");
    SupportSpec spec;
    spec.n = k.ambient_dim();
    for (const auto& f : k.facets()) spec.entries.emplace(f.normal, f.offset);
    return spec;
}

Polytope wulff_shape(const SupportSpec& spec) {
    if (spec.entries.empty()) throw unbounded_error("wulff_shape: no constraints");
    std::vector<Hyperplane> hs;
    hs.reserve(spec.entries.size());
    for (const auto& [w, b] : spec.entries) {
        if (w.dim() != spec.n) throw dimension_mismatch("wulff_shape: direction " + w.str() + " not in R^" +
                                                        std::to_string(spec.n));
        hs.push_back(Hyperplane{w, b});
    }
    return intersect_halfspaces(hs, spec.n);
}

std::string to_string(Side side) { return side == Side::left ? "left" : "right"; }

bool PerturbationSpec::admits(const Rational& t) const {
    return (!t_min || *t_min < t) && (!t_max || t < *t_max);
}

PerturbationSpec make_perturbation(Polytope k, std::map<Direction, Rational> f) {
    if (!origin_interior(k)) throw std::invalid_argument("perturbation base must contain the origin in its interior");
    PerturbationSpec spec{std::move(k), std::move(f), std::nullopt, std::nullopt};
    for (const auto& [w, value] : spec.f) {
        if (w.dim() != spec.base.ambient_dim()) throw dimension_mismatch("perturbation direction " + w.str());
        if (value == 0) continue;
        // h + t·value > 0
        const Rational limit = -support_value(spec.base, w) / value;
        if (value > 0) {
            if (!spec.t_min || limit > *spec.t_min) spec.t_min = limit;
        } else {
            if (!spec.t_max || limit < *spec.t_max) spec.t_max = limit;
        }
    }
    return spec;
}

PerturbationSpec centered(const Polytope& k, std::map<Direction, Rational> f) {
    return make_perturbation(translate(k, -vertex_centroid(k)), std::move(f));
}

Polytope perturb(const PerturbationSpec& spec, const Rational& t) {
    if (!spec.admits(t)) throw range_error("perturb: t = " + to_string(t) + " outside the admissible range");
    std::vector<Hyperplane> hs = facet_halfspaces(spec.base);
    bool tightened = false;
    for (const auto& [w, value] : spec.f) {
        if (t * value < 0) {
            hs.push_back(Hyperplane{w, support_value(spec.base, w) + t * value});
            tightened = true;
        }
    }
    if (!tightened) return spec.base;
    return intersect_halfspaces(hs, spec.base.ambient_dim());
}

std::vector<Rational> default_steps(const PerturbationSpec& spec, Side side, int count) {
    Rational tau = step_scale(side == Side::left ? spec.t_min : spec.t_max);
    if (side == Side::left) tau = -tau;
    std::vector<Rational> steps;
    for (int i = 0; i < count; ++i) {
        tau /= 2;
        steps.push_back(tau);
    }
    return steps;
}

namespace {

bool supported_on_facets(const PerturbationSpec& spec) {
    for (const auto& [w, value] : spec.f) {
        if (value != 0 && spec.base.find_facet(w) == nullptr) return false;
    }
    return true;
}

void certify(DerivativeReport& report) {
    report.exact = false;
    for (std::size_t i = 1; i < report.quotients.size(); ++i) {
        if (report.quotients[i] == report.quotients[i - 1]) {
            report.exact = true;
            report.value = report.quotients[i];
            return;
        }
    }
    if (!report.quotients.empty()) report.value = report.quotients.back();
}

void check_steps(const std::vector<Rational>& steps, Side side) {
    for (const auto& t : steps) {
        if (t == 0 || (side == Side::left) != (t < 0)) {
            throw std::invalid_argument("derivative steps must be nonzero and on the " + to_string(side) + " side");
        }
    }
}

}  // namespace

DerivativeReport support_derivative(const PerturbationSpec& spec, const Direction& u, Side side,
                                    std::vector<Rational> steps) {
    if (steps.empty()) steps = default_steps(spec, side);
    check_steps(steps, side);
    DerivativeReport report;
    report.side = side;
    report.steps = steps;
    report.facet_support = supported_on_facets(spec);
    const Rational h0 = support_value(spec.base, u);
    for (const auto& t : steps) report.quotients.push_back((support_value(perturb(spec, t), u) - h0) / t);
    certify(report);
    return report;
}

DerivativeReport volume_mixed_derivative(const PerturbationSpec& spec, Side side) {
    const int n = spec.base.ambient_dim();
    DerivativeReport report;
    report.side = side;
    report.steps = default_steps(spec, side);
    report.facet_support = supported_on_facets(spec);

    // tightened on the left: f > 0; on the right: f < 0
    Rational closed = 0;
    for (const auto& [w, value] : spec.f) {
        const bool tight = side == Side::left ? value > 0 : value < 0;
        if (!tight) continue;
        if (const Facet* facet = spec.base.find_facet(w)) closed += value * facet->co_weight;
    }
    closed /= n;

    const DiscreteSphereMeasure s_k = surface_area_measure(spec.base);
    const Rational v0 = pairing(spec.base, s_k);
    for (const auto& t : report.steps) {
        report.quotients.push_back((pairing(perturb(spec, t), s_k) - v0) / t);
        const auto m = report.quotients.size();
        if (m >= 2 && report.quotients[m - 1] == report.quotients[m - 2]) break;
    }
    report.steps.resize(report.quotients.size());
    certify(report);
    report.exact = report.exact && report.value == closed;
    report.value = closed;
    return report;
}

bool concavity_probe(const PerturbationSpec& spec, const Direction& u, const std::vector<Rational>& samples) {
    std::map<Rational, Rational> h;
    auto value = [&](const Rational& t) -> const Rational& {
        auto it = h.find(t);
        if (it == h.end()) it = h.emplace(t, support_value(perturb(spec, t), u)).first;
        return it->second;
    };
    for (std::size_t i = 0; i < samples.size(); ++i) {
        for (std::size_t j = i + 1; j < samples.size(); ++j) {
            const Rational mid = (samples[i] + samples[j]) / 2;
            if (value(mid) * 2 < value(samples[i]) + value(samples[j])) return false;
        }
    }
    return true;
}

double CapBump::value_at_unit(const Direction& w) const {
    const double c = dot(w.coords(), center.coords()).convert_to<double>() / (w.norm() * center.norm());
    const double angle = std::acos(std::clamp(c, -1.0, 1.0));
    return std::max(0.0, 1.0 - angle / radius) * to_double(height);
}

Rational CapBump::value(const Direction& w) const {
    const double c = dot(w.coords(), center.coords()).convert_to<double>() / (w.norm() * center.norm());
    const double angle = std::acos(std::clamp(c, -1.0, 1.0));
    const double profile = std::max(0.0, 1.0 - angle / radius);
    if (profile == 0) return 0;
    if (profile == 1 && w.norm2() == 1) return height;
    return rationalize(w.norm() * profile) * height;
}

GridSpec make_grid(const Polytope& k, int level) {
    if (level < 1) throw std::invalid_argument("make_grid: level must be positive");
    const int n = k.ambient_dim();
    std::set<Direction> dirs;
    VectorXz v = VectorXz::Constant(n, BigInt(-level));
    while (true) {
        BigInt g = 0;
        for (int i = 0; i < n; ++i) g = gcd(g, v[i]);
        if (g == 1) dirs.insert(Direction(v));
        int i = 0;
        while (i < n && v[i] == level) v[i++] = -level;
        if (i == n) break;
        ++v[i];
    }
    for (const auto& f : k.facets()) dirs.insert(f.normal);
    return GridSpec{std::vector<Direction>(dirs.begin(), dirs.end()), level};
}

Polytope wulff_grid(const Polytope& k, const CapBump& cap, const GridSpec& grid, const Rational& t) {
    if (!origin_interior(k)) throw std::invalid_argument("wulff_grid: body must contain the origin in its interior");
    std::vector<Hyperplane> hs;
    hs.reserve(grid.directions.size());
    for (const auto& w : grid.directions) {
        const Rational offset = support_value(k, w) + (t == 0 ? Rational(0) : t * cap.value(w));
        if (offset <= 0) throw range_error("wulff_grid: t too large for the cap height");
        hs.push_back(Hyperplane{w, offset});
    }
    return intersect_halfspaces(hs, k.ambient_dim(), VertexEnumeration::polar);
}

Rational grid_support_quotient(const Polytope& k, const CapBump& cap, int level, const Direction& u,
                               const Rational& t) {
    const Polytope body = wulff_grid(k, cap, make_grid(k, level), t);
    return (support_value(body, u) - support_value(k, u)) / t;
}

}  // namespace wulffbez
