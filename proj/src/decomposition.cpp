#include "wulffbez/decomposition.hpp"

#include "wulffbez/errors.hpp"
#include "wulffbez/halfspace.hpp"

#include <stdexcept>

namespace wulffbez {

FacetMove facet_move(const Polytope& k, const Direction& w, const Rational& eps) {
    if (k.find_facet(w) == nullptr) throw std::invalid_argument("facet_move: " + w.str() + " is not a facet normal");
    if (eps == 0) return FacetMove{k, true};
    auto hs = facet_halfspaces(k);
    for (auto& h : hs) {
        if (h.normal == w) h.offset += eps;
    }
    Polytope moved = intersect_halfspaces(hs, k.ambient_dim());
    const bool preserved = moved.full_dimensional() && facet_normals(moved) == facet_normals(k);
    return FacetMove{std::move(moved), preserved};
}

Rational facet_survival_bound(const Polytope& k, const Direction& w) {
    const Facet* f = k.find_facet(w);
    if (f == nullptr) throw std::invalid_argument("facet_survival_bound: " + w.str() + " is not a facet normal");
    std::optional<Rational> best;
    for (const auto& v : k.vertices()) {
        const Rational gap = f->offset - dot(w.coords(), v);
        if (gap > 0 && (!best || gap < *best)) best = gap;
    }
    return *best;
}

std::optional<Witness> weak_witness_search(const Polytope& k, const std::vector<Rational>& eps) {
    if (!k.full_dimensional()) throw std::invalid_argument("weak_witness_search: body must be full-dimensional");
    const DiscreteSphereMeasure s_k = surface_area_measure(k);
    for (const auto& facet : k.facets()) {
        std::vector<Rational> moves = eps;
        if (moves.empty()) {
            const Rational beta = facet_survival_bound(k, facet.normal);
            moves = {beta / 4, beta / 2, beta};
        }
        for (const auto& e : moves) {
            Polytope m = [&] {
                try {
                    return facet_move(k, facet.normal, e).body;
                } catch (const empty_error&) {
                    return Polytope{};
                }
            }();
            if (!m.full_dimensional() || m.ambient_dim() != k.ambient_dim()) continue;
            Witness w{m, facet.normal, e, false, false, surface_area_measure(k + m), s_k};
            w.absolutely_continuous = absolutely_continuous(w.sum_measure, s_k);
            w.homothetic = is_homothetic(m, k);
            if (w.valid()) return w;
        }
    }
    return std::nullopt;
}

ChainCheck homothet_chain_check(const Polytope& k, const Polytope& m, int r) {
    const int n = k.ambient_dim();
    if (r < 0 || r > n - 1) throw std::invalid_argument("homothet_chain_check: r must lie in [0, n-1]");
    if (!k.full_dimensional()) throw std::invalid_argument("homothet_chain_check: K must be full-dimensional");
    const DiscreteSphereMeasure s_k = surface_area_measure(k);
    const Rational lambda = pairing(m, s_k) / k.volume();
    DiscreteSphereMeasure mixed = mixed_area_measure(repeat(repeat({}, m, r), k, n - 1 - r));
    return ChainCheck{std::move(mixed), power(lambda, r) * s_k, lambda};
}

}  // namespace wulffbez
