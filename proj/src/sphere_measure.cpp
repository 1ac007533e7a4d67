#include "wulffbez/sphere_measure.hpp"

#include "wulffbez/errors.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace wulffbez {

Rational DiscreteSphereMeasure::at(const Direction& w) const {
    auto it = atoms_.find(w);
    return it == atoms_.end() ? Rational(0) : it->second;
}

void DiscreteSphereMeasure::add(const Direction& w, const Rational& c) {
    if (w.dim() != n_) throw dimension_mismatch("measure atom of wrong dimension");
    if (c == 0) return;
    auto [it, inserted] = atoms_.emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) atoms_.erase(it);
}

std::vector<Direction> DiscreteSphereMeasure::support() const {
    std::vector<Direction> out;
    out.reserve(atoms_.size());
    for (const auto& [w, c] : atoms_) out.push_back(w);
    return out;
}

DiscreteSphereMeasure& DiscreteSphereMeasure::operator+=(const DiscreteSphereMeasure& other) {
    if (other.n_ != n_) throw dimension_mismatch("adding measures of different dimensions");
    for (const auto& [w, c] : other.atoms_) add(w, c);
    return *this;
}

DiscreteSphereMeasure& DiscreteSphereMeasure::operator*=(const Rational& lambda) {
    if (lambda == 0) {
        atoms_.clear();
        return *this;
    }
    for (auto& [w, c] : atoms_) c *= lambda;
    return *this;
}

DiscreteSphereMeasure operator+(DiscreteSphereMeasure a, const DiscreteSphereMeasure& b) { return a += b; }

DiscreteSphereMeasure operator*(const Rational& lambda, DiscreteSphereMeasure a) { return a *= lambda; }

DiscreteSphereMeasure surface_area_measure(const Polytope& p) {
    DiscreteSphereMeasure mu(p.ambient_dim());
    if (p.full_dimensional()) {
        for (const auto& f : p.facets()) mu.add(f.normal, f.co_weight);
    } else if (p.flat_normal()) {
        mu.add(*p.flat_normal(), p.flat_co_weight());
        mu.add(-*p.flat_normal(), p.flat_co_weight());
    }
    return mu;
}

DiscreteSphereMeasure mixed_area_measure(const BodyTuple& bodies) {
    if (bodies.empty()) throw arity_error("mixed_area_measure: no bodies");
    const int n = bodies.front().ambient_dim();
    for (const auto& b : bodies) {
        if (b.ambient_dim() != n) throw dimension_mismatch("mixed_area_measure: bodies in different dimensions");
    }
    if (static_cast<int>(bodies.size()) != n - 1) {
        throw arity_error("mixed_area_measure in R^" + std::to_string(n) + " needs " + std::to_string(n - 1) +
                          " bodies, got " + std::to_string(bodies.size()));
    }

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
    if (groups.size() == 1) return surface_area_measure(*groups.front());

    DiscreteSphereMeasure total(n);
    std::vector<int> c(groups.size(), 0);
    std::function<void(std::size_t)> visit = [&](std::size_t i) {
        if (i == groups.size()) {
            int size = 0;
            BigInt weight = 1;
            PointList acc{VectorXq::Constant(n, Rational(0))};
            for (std::size_t g = 0; g < groups.size(); ++g) {
                size += c[g];
                weight *= binomial(mult[g], c[g]);
                if (c[g] == 0) continue;
                PointList next;
                for (const auto& a : acc) {
                    for (const auto& v : groups[g]->vertices()) next.push_back(a + v * Rational(c[g]));
                }
                acc = convex_hull(std::move(next), n).vertices();
            }
            if (size == 0) return;
            DiscreteSphereMeasure s = surface_area_measure(convex_hull(std::move(acc), n));
            const int sign = (n - 1 - size) % 2 == 0 ? 1 : -1;
            s *= Rational(weight * sign);
            total += s;
            return;
        }
        for (c[i] = 0; c[i] <= mult[i]; ++c[i]) visit(i + 1);
    };
    visit(0);
    total *= 1 / factorial(n - 1);
    for (const auto& [w, x] : total.atoms()) {
        if (x < 0) throw std::logic_error("mixed_area_measure: negative atom at " + w.str());
    }
    return total;
}

std::pair<Rational, Rational> atom_check(const BodyTuple& bodies, const Direction& w) {
    const Rational atom = mixed_area_measure(bodies).at(w);
    const int n = w.dim();
    BodyTuple faces;
    faces.reserve(bodies.size());
    for (const auto& k : bodies) faces.push_back(project(face(k, w), w));
    Rational chart;
    if (n == 1) {
        chart = 1;
    } else {
        chart = mixed_volume(faces);
    }
    return {atom, chart / Rational(abs(w[w.first_nonzero()]))};
}

Rational pairing(const Polytope& l, const DiscreteSphereMeasure& mu) {
    if (l.ambient_dim() != mu.ambient_dim()) throw dimension_mismatch("pairing: dimensions differ");
    Rational s = 0;
    for (const auto& [w, c] : mu.atoms()) s += support_value(l, w) * c;
    return s / mu.ambient_dim();
}

bool absolutely_continuous(const DiscreteSphereMeasure& mu, const DiscreteSphereMeasure& nu) {
    if (mu.ambient_dim() != nu.ambient_dim()) throw dimension_mismatch("absolutely_continuous: dimensions differ");
    for (const auto& [w, c] : mu.atoms()) {
        if (nu.at(w) == 0) return false;
    }
    return true;
}

std::pair<DiscreteSphereMeasure, DiscreteSphereMeasure> sum_expansion_sides(const Polytope& l, const Polytope& m) {
    if (l.ambient_dim() != m.ambient_dim()) throw dimension_mismatch("sum_expansion_sides: dimensions differ");
    const int n = l.ambient_dim();
    DiscreteSphereMeasure direct = surface_area_measure(l + m);
    DiscreteSphereMeasure expansion(n);
    for (int r = 0; r <= n - 1; ++r) {
        DiscreteSphereMeasure term = mixed_area_measure(repeat(repeat({}, m, r), l, n - 1 - r));
        term *= Rational(binomial(n - 1, r));
        expansion += term;
    }
    return {std::move(direct), std::move(expansion)};
}

}  // namespace wulffbez
