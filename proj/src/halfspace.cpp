#include "wulffbez/halfspace.hpp"

#include "hull_kernel.hpp"
#include "linalg.hpp"
#include "wulffbez/errors.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <stdexcept>

namespace wulffbez {

namespace {

using Row = detail::IntRow<BigInt>;

struct Ray {
    Row y;
    boost::dynamic_bitset<> zeros;  // constraints tight at y, among those processed
};

BigInt eval(const Row& a, const Row& y) {
    BigInt s = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] != 0 && y[j] != 0) s += a[j] * y[j];
    }
    return s;
}

/// Integer row (w·d, -b·d) for <w,x> - b·s <= 0.
Row homogenize(const Hyperplane& h) {
    const int n = h.normal.dim();
    const BigInt d = denominator(h.offset);
    Row row(n + 1);
    for (int j = 0; j < n; ++j) row[j] = h.normal[j] * d;
    row[n] = -numerator(h.offset);
    return row;
}

/// Extreme rays of the pointed cone {y : a·y <= 0 for a in rows}. The rows
/// must span the whole space.
std::vector<Ray> cone_rays(const std::vector<Row>& rows, int dim) {
    const std::size_t m = rows.size();

    // initial simplicial cone on dim independent rows
    std::vector<std::size_t> basis_rows;
    detail::EchelonBasis<BigInt> echelon(dim);
    for (std::size_t i = 0; i < m && static_cast<int>(basis_rows.size()) < dim; ++i) {
        if (echelon.insert(rows[i])) basis_rows.push_back(i);
    }
    if (static_cast<int>(basis_rows.size()) < dim) throw std::logic_error("cone_rays: constraint rows do not span");

    MatrixXq b(dim, dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) b(r, c) = Rational(rows[basis_rows[r]][c]);
    }
    std::vector<bool> processed(m, false);
    for (std::size_t i : basis_rows) processed[i] = true;

    std::vector<Ray> rays;
    for (int k = 0; k < dim; ++k) {
        VectorXq rhs = VectorXq::Constant(dim, Rational(0));
        rhs[k] = -1;
        const Direction dir(detail::solve(b, rhs));
        Ray ray{Row(dir.coords().data(), dir.coords().data() + dim), boost::dynamic_bitset<>(m)};
        for (int r = 0; r < dim; ++r) {
            if (r != k) ray.zeros.set(basis_rows[r]);
        }
        rays.push_back(std::move(ray));
    }

    for (std::size_t c = 0; c < m; ++c) {
        if (processed[c]) continue;
        processed[c] = true;
        const Row& a = rows[c];
        std::vector<BigInt> val(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            val[r] = eval(a, rays[r].y);
            if (val[r] > 0) pos.push_back(r);
            else if (val[r] < 0) neg.push_back(r);
            else rays[r].zeros.set(c);
        }
        if (pos.empty()) continue;

        std::vector<Ray> next;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            if (val[r] <= 0) next.push_back(rays[r]);
        }
        for (std::size_t p : pos) {
            for (std::size_t q : neg) {
                const auto common = rays[p].zeros & rays[q].zeros;
                if (static_cast<int>(common.count()) < dim - 2) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r != p && r != q && common.is_subset_of(rays[r].zeros)) adjacent = false;
                }
                if (!adjacent) continue;
                Row y(dim);
                for (int j = 0; j < dim; ++j) y[j] = val[p] * rays[q].y[j] - val[q] * rays[p].y[j];
                detail::make_primitive(y);
                Ray ray{std::move(y), common};
                ray.zeros.set(c);
                next.push_back(std::move(ray));
            }
        }
        rays = std::move(next);
    }
    return rays;
}

Polytope double_description(const std::vector<Hyperplane>& hs, int n) {
    std::vector<Row> rows;
    rows.reserve(hs.size() + 1);
    for (const auto& h : hs) rows.push_back(homogenize(h));

    // Normals that miss a subspace L leave the set invariant under L, so
    // slicing with L^⊥ preserves emptiness and any nonempty answer is unbounded.
    MatrixXq w(static_cast<Eigen::Index>(hs.size()), n);
    for (std::size_t i = 0; i < hs.size(); ++i) {
        for (int j = 0; j < n; ++j) w(i, j) = Rational(hs[i].normal[j]);
    }
    const auto lineality = detail::nullspace(w);
    for (const auto& v : lineality) {
        const Direction d(v);
        rows.push_back(homogenize(Hyperplane{d, 0}));
        rows.push_back(homogenize(Hyperplane{-d, 0}));
    }
    Row s_row(n + 1, BigInt(0));
    s_row[n] = -1;
    rows.push_back(s_row);

    const auto rays = cone_rays(rows, n + 1);
    PointList points;
    bool recedes = false;
    for (const auto& r : rays) {
        if (r.y[n] > 0) {
            VectorXq x(n);
            for (int j = 0; j < n; ++j) x[j] = Rational(r.y[j], r.y[n]);
            points.push_back(std::move(x));
        } else {
            recedes = true;
        }
    }
    if (points.empty()) throw empty_error("intersect_halfspaces: system is infeasible");
    if (recedes || !lineality.empty()) throw unbounded_error("intersect_halfspaces: intersection is unbounded");
    return convex_hull(std::move(points), n);
}

Polytope polar_route(const std::vector<Hyperplane>& hs, int n) {
    PointList q;
    q.reserve(hs.size());
    for (const auto& h : hs) q.push_back(h.normal.as_rational() / h.offset);
    const Polytope dual = convex_hull(std::move(q), n);
    if (!dual.full_dimensional()) throw unbounded_error("intersect_halfspaces: intersection is unbounded");
    PointList points;
    points.reserve(dual.facets().size());
    for (const auto& f : dual.facets()) {
        if (f.offset <= 0) throw unbounded_error("intersect_halfspaces: intersection is unbounded");
        points.push_back(f.normal.as_rational() / f.offset);
    }
    return convex_hull(std::move(points), n);
}

}  // namespace

Hyperplane make_halfspace(const VectorXq& a, const Rational& b) {
    const Direction d(a);
    // a = c·d for a positive rational c
    int j = d.first_nonzero();
    const Rational c = a[j] / Rational(d[j]);
    return Hyperplane{d, b / c};
}

std::vector<Hyperplane> facet_halfspaces(const Polytope& p) {
    std::vector<Hyperplane> hs;
    hs.reserve(p.facets().size());
    for (const auto& f : p.facets()) hs.push_back(Hyperplane{f.normal, f.offset});
    return hs;
}

Polytope intersect_halfspaces(const std::vector<Hyperplane>& halfspaces, int n, VertexEnumeration method) {
    if (halfspaces.empty()) throw unbounded_error("intersect_halfspaces: no constraints");
    for (const auto& h : halfspaces) {
        if (h.normal.dim() != n) throw dimension_mismatch("intersect_halfspaces: normal dimension");
    }
    const bool all_positive = std::all_of(halfspaces.begin(), halfspaces.end(),
                                          [](const Hyperplane& h) { return h.offset > 0; });
    if (method == VertexEnumeration::automatic) {
        method = all_positive ? VertexEnumeration::polar : VertexEnumeration::double_description;
    }
    if (method == VertexEnumeration::polar) {
        if (!all_positive) throw std::invalid_argument("intersect_halfspaces: polar route needs positive offsets");
        return polar_route(halfspaces, n);
    }
    return double_description(halfspaces, n);
}

}  // namespace wulffbez
