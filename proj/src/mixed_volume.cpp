#include "wulffbez/mixed_volume.hpp"

#include "linalg.hpp"
#include "wulffbez/errors.hpp"

#include <functional>
#include <string>

namespace wulffbez {

namespace {

int check_tuple(const BodyTuple& bodies) {
    if (bodies.empty()) throw arity_error("mixed volume of an empty tuple");
    const int n = bodies.front().ambient_dim();
    for (const auto& b : bodies) {
        if (b.ambient_dim() != n) throw dimension_mismatch("mixed volume: bodies in different dimensions");
    }
    if (static_cast<int>(bodies.size()) != n) {
        throw arity_error("mixed volume in R^" + std::to_string(n) + " needs " + std::to_string(n) + " bodies, got " +
                          std::to_string(bodies.size()));
    }
    return n;
}

/// Σ c_i·K_i as a polytope (all c_i >= 0, not all zero).
Polytope weighted_sum(const std::vector<const Polytope*>& bodies, const std::vector<Rational>& c) {
    const int n = bodies.front()->ambient_dim();
    PointList acc{VectorXq::Constant(n, Rational(0))};
    for (std::size_t i = 0; i < bodies.size(); ++i) {
        if (c[i] == 0) continue;
        PointList next;
        next.reserve(acc.size() * bodies[i]->vertices().size());
        for (const auto& a : acc) {
            for (const auto& v : bodies[i]->vertices()) next.push_back(a + v * c[i]);
        }
        // reduce to extreme points before the next factor
        acc = convex_hull(std::move(next), n).vertices();
    }
    return convex_hull(std::move(acc), n);
}

}  // namespace

BodyTuple repeat(BodyTuple tuple, const Polytope& k, int m) {
    for (int i = 0; i < m; ++i) tuple.push_back(k);
    return tuple;
}

Rational mixed_volume(const BodyTuple& bodies) {
    const int n = check_tuple(bodies);

    std::vector<const Polytope*> groups;
    std::vector<int> mult;
    for (const auto& b : bodies) {
        std::size_t g = 0;
        while (g < groups.size() && !(*groups[g] == b)) ++g;
        if (g == groups.size()) {
            groups.push_back(&b);
            mult.push_back(0);
        }
        ++mult[g];
    }
    if (groups.size() == 1) return groups.front()->volume();
    for (const auto* g : groups) {
        if (g->dim() == 0) return 0;
    }

    Rational total = 0;
    std::vector<int> c(groups.size(), 0);
    std::function<void(std::size_t)> visit = [&](std::size_t i) {
        if (i == groups.size()) {
            int size = 0;
            BigInt weight = 1;
            std::vector<Rational> coeff(groups.size());
            for (std::size_t g = 0; g < groups.size(); ++g) {
                size += c[g];
                weight *= binomial(mult[g], c[g]);
                coeff[g] = c[g];
            }
            if (size == 0) return;
            const Rational vol = weighted_sum(groups, coeff).volume();
            if (vol == 0) return;
            const Rational term = Rational(weight) * vol;
            if ((n - size) % 2 == 0) total += term;
            else total -= term;
            return;
        }
        for (c[i] = 0; c[i] <= mult[i]; ++c[i]) visit(i + 1);
    };
    visit(0);
    return total / factorial(n);
}

Rational mixed_volume_oracle(const BodyTuple& bodies) {
    const int n = check_tuple(bodies);
    std::vector<const Polytope*> ptrs;
    for (const auto& b : bodies) ptrs.push_back(&b);

    // exponent vectors of degree n, and lattice samples a with |a| = n
    std::vector<std::vector<int>> compositions;
    std::vector<int> cur(n, 0);
    std::function<void(int, int)> gen = [&](int i, int left) {
        if (i == n - 1) {
            cur[i] = left;
            compositions.push_back(cur);
            return;
        }
        for (int k = left; k >= 0; --k) {
            cur[i] = k;
            gen(i + 1, left - k);
        }
    };
    gen(0, n);

    const auto m = static_cast<Eigen::Index>(compositions.size());
    MatrixXq a(m, m);
    VectorXq rhs(m);
    for (Eigen::Index r = 0; r < m; ++r) {
        std::vector<Rational> lambda(n);
        for (int i = 0; i < n; ++i) lambda[i] = 1 + compositions[r][i];
        rhs[r] = weighted_sum(ptrs, lambda).volume();
        for (Eigen::Index c = 0; c < m; ++c) {
            Rational mono = 1;
            for (int i = 0; i < n; ++i) mono *= power(lambda[i], compositions[c][i]);
            a(r, c) = mono;
        }
    }
    const VectorXq coeff = detail::solve(a, rhs);
    for (Eigen::Index c = 0; c < m; ++c) {
        bool square_free = true;
        for (int i = 0; i < n; ++i) square_free = square_free && compositions[c][i] == 1;
        if (square_free) return coeff[c] / factorial(n);
    }
    throw std::logic_error("mixed_volume_oracle: missing square-free monomial");
}

Rational segment_projection_formula(const Direction& w, const BodyTuple& rest) {
    const int n = w.dim();
    if (static_cast<int>(rest.size()) != n - 1) throw arity_error("segment_projection_formula: need n-1 bodies");
    const Rational factor = Rational(w.norm2()) / Rational(abs(w[w.first_nonzero()])) / n;
    if (n == 1) return factor;
    BodyTuple projected;
    projected.reserve(rest.size());
    for (const auto& k : rest) projected.push_back(project(k, w));
    return factor * mixed_volume(projected);
}

Rational minkowski_gap(const Polytope& k, const Polytope& l) {
    const int n = k.ambient_dim();
    const Rational v = mixed_volume(repeat({k}, l, n - 1));
    return power(v, n) - k.volume() * power(l.volume(), n - 1);
}

Rational af_gap(const Polytope& k1, const Polytope& k2, const BodyTuple& rest) {
    BodyTuple t12{k1, k2}, t11{k1, k1}, t22{k2, k2};
    for (const auto& c : rest) {
        t12.push_back(c);
        t11.push_back(c);
        t22.push_back(c);
    }
    const Rational mixed = mixed_volume(t12);
    return mixed * mixed - mixed_volume(t11) * mixed_volume(t22);
}

}  // namespace wulffbez
