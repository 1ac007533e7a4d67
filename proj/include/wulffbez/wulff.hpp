#pragma once

#include "wulffbez/direction.hpp"
#include "wulffbez/polytope.hpp"
#include "wulffbez/sphere_measure.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wulffbez {

/// Finite data g for W(g) = ∩_w {x : <x, w> <= g(w)}, in the unnormalized
/// convention: the value at w is ‖w‖·g(w/‖w‖).
struct SupportSpec {
    int n = 0;
    std::map<Direction, Rational> entries;
};

/// Facet data (normal, offset) of a full-dimensional polytope.
SupportSpec support_spec(const Polytope& k);

/// Wulff shape of the finite entry set. Throws unbounded_error / empty_error.
Polytope wulff_shape(const SupportSpec& spec);

enum class Side { left, right };

std::string to_string(Side side);

/// Body K (origin in its interior) with a finitely supported perturbation f,
/// unnormalized like SupportSpec values. The admissible t form the open
/// interval (t_min, t_max) where every offset h_K(w) + t·f(w) stays positive;
/// an absent bound means unbounded on that side.
struct PerturbationSpec {
    Polytope base;
    std::map<Direction, Rational> f;
    std::optional<Rational> t_min;
    std::optional<Rational> t_max;

    bool admits(const Rational& t) const;
};

/// Validates K (full-dimensional, origin interior) and computes the t range.
PerturbationSpec make_perturbation(Polytope k, std::map<Direction, Rational> f);

/// Same, after translating K so its vertex centroid is the origin.
PerturbationSpec centered(const Polytope& k, std::map<Direction, Rational> f);

/// K_t = W(h_K + t f) over the whole sphere. Because f has finite support,
/// relaxed directions (t·f(w) > 0) change nothing, so
///   K_t = K ∩ {<x,w> <= h_K(w) + t f(w) : t·f(w) < 0}.
/// Throws range_error for t outside the admissible interval.
Polytope perturb(const PerturbationSpec& spec, const Rational& t);

/// One-sided difference quotients (h_{K_t}(u) - h_K(u))/t.
///
/// t ↦ h_{K_t}(u) is concave, so two equal quotients at t1, t2 of the same
/// sign force it to be affine between t1 and 0, and the common quotient is the
/// exact one-sided derivative. `exact` reports whether that happened.
struct DerivativeReport {
    Side side = Side::left;
    std::vector<Rational> steps;
    std::vector<Rational> quotients;
    bool exact = false;
    Rational value = 0;  // exact derivative, or the last quotient otherwise
    bool facet_support = true;  // supp f consists of facet normals of K
};

/// Default step ladder on the given side: τ/2, τ/4, ... (count entries),
/// with τ the admissible bound on that side capped at 1.
std::vector<Rational> default_steps(const PerturbationSpec& spec, Side side, int count = 12);

DerivativeReport support_derivative(const PerturbationSpec& spec, const Direction& u, Side side,
                                    std::vector<Rational> steps = {});

/// One-sided derivative of t ↦ V(K_t, K[n-1]) at 0. The closed form is
/// (1/n)·Σ f(w)·co_weight(w) over the facet normals w tightened on that side;
/// `quotients` holds difference quotients of V(K_t, K[n-1]) = pairing(K_t, S_K)
/// at halving t, and `exact` says two of them agreed with each other and with
/// the closed form. When supp f leaves the facet normals, `facet_support` is
/// false (the closed form still holds for polytopes: cutting near a lower
/// face changes no facet offset to first order).
DerivativeReport volume_mixed_derivative(const PerturbationSpec& spec, Side side);

/// Midpoint concavity of t ↦ h_{K_t}(u) on all sample pairs, exactly.
bool concavity_probe(const PerturbationSpec& spec, const Direction& u, const std::vector<Rational>& samples);

/// Continuous bump supported on the cap of angular radius `radius` (radians)
/// around `center`: f(u) = height·max(0, 1 - angle(u, center)/radius).
struct CapBump {
    Direction center;
    double radius = 0.5;
    Rational height = 1;

    /// ‖w‖·f(w/‖w‖), rounded to a dyadic rational with 40 fractional bits.
    Rational value(const Direction& w) const;
    double value_at_unit(const Direction& w) const;
};

/// Finite sample of the sphere: every primitive vector with sup-norm at most
/// `level`, together with the facet normals of a base body.
struct GridSpec {
    std::vector<Direction> directions;
    int level = 0;
};

GridSpec make_grid(const Polytope& k, int level);

/// Halfspace intersection over the grid with offsets h_K(w) + t·cap(w).
/// An outer approximation of W(h_K + t f) that shrinks as the grid refines.
/// K must contain the origin in its interior and the offsets must stay positive.
Polytope wulff_grid(const Polytope& k, const CapBump& cap, const GridSpec& grid, const Rational& t);

/// (h_{K_t}(u) - h_K(u))/t for the grid body at a given level and t.
Rational grid_support_quotient(const Polytope& k, const CapBump& cap, int level, const Direction& u,
                               const Rational& t);

}  // namespace wulffbez
