#pragma once

#include "wulffbez/direction.hpp"
#include "wulffbez/polytope.hpp"

#include <vector>

namespace wulffbez {

/// Argument list of V(K_1, ..., K_n); repetitions allowed.
using BodyTuple = std::vector<Polytope>;

/// Appends m copies of k; repeat({}, K, 2) reads as K[2].
BodyTuple repeat(BodyTuple tuple, const Polytope& k, int m);

/// Mixed volume by inclusion-exclusion over Minkowski subset sums:
///   V(K_1..K_n) = (1/n!) Σ_{S≠∅} (-1)^{n-|S|} V_n(Σ_{i∈S} K_i).
/// Repeated bodies are grouped, so K[m] costs m+1 sums rather than 2^m.
/// The ambient dimension is that of the bodies; the tuple must have exactly
/// that many entries (arity_error otherwise).
Rational mixed_volume(const BodyTuple& bodies);

/// Independent evaluation: interpolates the degree-n form
/// λ ↦ V_n(λ_1 K_1 + ... + λ_n K_n) on the lattice λ = 1 + a, |a| = n, and
/// reads off the λ_1⋯λ_n coefficient divided by n!.
Rational mixed_volume_oracle(const BodyTuple& bodies);

/// Right-hand side of the segment projection formula
///   V([0,w], K_2..K_n) = (1/n)·‖w‖·V_{n-1}(K_2|w^⊥, ..., K_n|w^⊥),
/// evaluated exactly in the project() chart, where the (n-1)-volume carries an
/// extra factor |w_j|/‖w‖.
Rational segment_projection_formula(const Direction& w, const BodyTuple& rest);

/// V(K, L[n-1])^n - V_n(K)·V_n(L)^{n-1}; nonnegative by Minkowski's first inequality.
Rational minkowski_gap(const Polytope& k, const Polytope& l);

/// V(K1,K2,C)^2 - V(K1,K1,C)·V(K2,K2,C) with C the n-2 remaining bodies;
/// nonnegative by the Aleksandrov-Fenchel inequality.
Rational af_gap(const Polytope& k1, const Polytope& k2, const BodyTuple& rest);

}  // namespace wulffbez
