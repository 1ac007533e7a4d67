#pragma once

#include "wulffbez/direction.hpp"
#include "wulffbez/scalar.hpp"

#include <initializer_list>
#include <optional>
#include <vector>

namespace wulffbez {

using PointList = std::vector<VectorXq>;

/// A facet of a full-dimensional polytope.
///
/// `co_weight` is Vol_{n-1}(facet) / ‖normal‖ for the primitive integer normal,
/// which is rational for rational polytopes. The true facet area is
/// co_weight·‖normal‖ and h_P(u)·area = offset·co_weight for u = normal/‖normal‖.
struct Facet {
    Direction normal;
    Rational offset;          // max over P of <x, normal>
    Rational co_weight;
    std::vector<int> vertices;  // indices into Polytope::vertices()
};

/// Convex polytope in R^n held in both vertex and facet form.
///
/// Instances are immutable and only produced by convex_hull (directly or via
/// the operations below). Vertices are exactly the extreme points in
/// lexicographic order; facets are sorted by normal. Polytopes of dimension
/// below n carry no facets; when dim == n-1 they carry the normal line of their
/// affine hull and the co-weight Vol_{n-1}/‖normal‖.
class Polytope {
public:
    int ambient_dim() const { return n_; }
    int dim() const { return dim_; }
    bool full_dimensional() const { return dim_ == n_; }

    const PointList& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }

    /// Facet with the given outer normal, or nullptr.
    const Facet* find_facet(const Direction& normal) const;

    /// Exact n-volume, from a fan triangulation of the boundary.
    const Rational& volume() const { return volume_; }

    const std::optional<Direction>& flat_normal() const { return flat_normal_; }
    const Rational& flat_co_weight() const { return flat_co_weight_; }

    bool operator==(const Polytope& other) const {
        return n_ == other.n_ && dim_ == other.dim_ && vertices_ == other.vertices_;
    }

private:
    friend Polytope convex_hull(PointList points, int n);

    int n_ = 0;
    int dim_ = 0;
    PointList vertices_;
    std::vector<Facet> facets_;
    Rational volume_ = 0;
    std::optional<Direction> flat_normal_;
    Rational flat_co_weight_ = 0;
};

/// Convex hull of a finite point set in R^n. Lower-dimensional input yields a
/// lower-dimensional polytope. Throws dimension_mismatch for inconsistent point
/// lengths and std::invalid_argument for an empty set.
Polytope convex_hull(PointList points, int n);
Polytope convex_hull(PointList points);

/// Literal helper: make_polytope({{0, 0}, {1, 0}, {0, 1}}).
Polytope make_polytope(std::initializer_list<std::initializer_list<Rational>> points);

/// Segment [0, v].
Polytope segment(const VectorXq& v);

Rational support_value(const Polytope& p, const Direction& w);
Rational support_value(const Polytope& p, const VectorXq& w);

/// h_P(w) + h_P(-w).
Rational width(const Polytope& p, const Direction& w);

/// Exposed face {x in P : <x, w> = h_P(w)}.
Polytope face(const Polytope& p, const Direction& w);

/// Image of x under the orthogonal projection onto w^⊥, written in the chart
/// that drops coordinate w.first_nonzero().
VectorXq project_point(const VectorXq& x, const Direction& w);

/// P|w^⊥ in the (n-1)-dimensional chart of project_point. The chart is not
/// isometric: volumes in it equal true volumes times |w_j|/‖w‖.
Polytope project(const Polytope& p, const Direction& w);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Polytope operator+(const Polytope& p, const Polytope& q);

/// λP for λ >= 0.
Polytope scale(const Polytope& p, const Rational& lambda);
Polytope operator*(const Rational& lambda, const Polytope& p);

Polytope translate(const Polytope& p, const VectorXq& a);
Polytope operator+(const Polytope& p, const VectorXq& a);

inline const Rational& volume(const Polytope& p) { return p.volume(); }

/// (1/n)·Σ offset·co_weight over facets; equals volume() for every full-dimensional P.
Rational pairing_volume(const Polytope& p);

/// {x in K : <x, u> <= h_K(u) - eps}. Throws empty_error if the result has no interior.
Polytope truncate(const Polytope& k, const Direction& u, const Rational& eps);

/// True iff Q = λP + a for some λ > 0 and a in R^n.
bool is_homothetic(const Polytope& p, const Polytope& q);

/// Average of the vertices; lies in the relative interior.
VectorXq vertex_centroid(const Polytope& p);

bool contains(const Polytope& p, const VectorXq& x);
bool contains(const Polytope& outer, const Polytope& inner);

/// Outer normals of all facets, in facet order.
std::vector<Direction> facet_normals(const Polytope& p);

/// Pairs of vertex indices spanning edges of P (full-dimensional P only).
std::vector<std::pair<int, int>> edges(const Polytope& p);

}  // namespace wulffbez
