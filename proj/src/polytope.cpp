#include "wulffbez/polytope.hpp"

#include "hull_kernel.hpp"
#include "wulffbez/errors.hpp"
#include "wulffbez/halfspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace wulffbez {

namespace {

using detail::CheckedInt;

struct Chart {
    int rank = 0;
    std::vector<int> columns;               // coordinates kept by the chart
    std::vector<detail::IntRow<BigInt>> basis;  // integer basis of the direction space
};

BigInt common_denominator(const PointList& pts) {
    BigInt l = 1;
    for (const auto& p : pts) {
        for (Eigen::Index j = 0; j < p.size(); ++j) l = lcm(l, denominator(p[j]));
    }
    return l;
}

detail::IntRow<BigInt> scaled_row(const VectorXq& p, const BigInt& s) {
    detail::IntRow<BigInt> row(p.size());
    for (Eigen::Index j = 0; j < p.size(); ++j) row[j] = numerator(p[j]) * (s / denominator(p[j]));
    return row;
}

Chart affine_chart(const PointList& pts, int n) {
    const BigInt s = common_denominator(pts);
    const auto base = scaled_row(pts[0], s);
    detail::EchelonBasis<BigInt> echelon(n);
    Chart chart;
    for (std::size_t i = 1; i < pts.size() && static_cast<int>(echelon.rank()) < n; ++i) {
        auto row = scaled_row(pts[i], s);
        for (int j = 0; j < n; ++j) row[j] -= base[j];
        if (echelon.insert(row)) chart.basis.push_back(std::move(row));
    }
    chart.rank = static_cast<int>(echelon.rank());
    for (std::size_t c : echelon.pivots()) chart.columns.push_back(static_cast<int>(c));
    std::sort(chart.columns.begin(), chart.columns.end());
    return chart;
}

/// Primitive normal of the hyperplane spanned by n-1 integer vectors in Z^n.
Direction cross_normal(const std::vector<detail::IntRow<BigInt>>& rows, int n) {
    VectorXz a(n);
    for (int j = 0; j < n; ++j) {
        std::vector<detail::IntRow<BigInt>> minor(n - 1, detail::IntRow<BigInt>(n - 1));
        for (int r = 0; r < n - 1; ++r) {
            for (int c = 0, cc = 0; c < n; ++c) {
                if (c != j) minor[r][cc++] = rows[r][c];
            }
        }
        BigInt det = detail::determinant(std::move(minor));
        a[j] = (j % 2 == 0) ? det : BigInt(-det);
    }
    return Direction(std::move(a));
}

template <class Int>
detail::HullKernelResult<BigInt> widen(detail::HullKernelResult<Int>&& r) {
    if constexpr (std::is_same_v<Int, BigInt>) {
        return std::move(r);
    } else {
        detail::HullKernelResult<BigInt> out;
        for (const auto& row : r.normals) {
            detail::IntRow<BigInt> big;
            for (const auto& x : row) big.push_back(detail::to_big(x));
            out.normals.push_back(std::move(big));
        }
        for (const auto& x : r.offsets) out.offsets.push_back(detail::to_big(x));
        out.vertices = std::move(r.vertices);
        out.plane_vertices = std::move(r.plane_vertices);
        for (const auto& x : r.plane_area_det) out.plane_area_det.push_back(detail::to_big(x));
        out.plane_drop = std::move(r.plane_drop);
        out.volume_det = detail::to_big(r.volume_det);
        return out;
    }
}

/// Runs the hull kernel on chart coordinates, 64-bit first.
detail::HullKernelResult<BigInt> run_kernel(const std::vector<detail::IntRow<BigInt>>& big, int d) {
    const BigInt limit = BigInt(1) << 62;
    bool small = true;
    for (const auto& row : big) {
        for (const auto& x : row) {
            if (abs(x) >= limit) {
                small = false;
                break;
            }
        }
        if (!small) break;
    }
    if (small) {
        std::vector<detail::IntRow<CheckedInt>> pts;
        pts.reserve(big.size());
        for (const auto& row : big) {
            detail::IntRow<CheckedInt> r;
            r.reserve(row.size());
            for (const auto& x : row) r.emplace_back(x.convert_to<std::int64_t>());
            pts.push_back(std::move(r));
        }
        try {
            return widen(detail::hull_kernel(pts, d));
        } catch (const detail::int_overflow&) {
        }
    }
    return detail::hull_kernel(big, d);
}

}  // namespace

const Facet* Polytope::find_facet(const Direction& normal) const {
    auto it = std::lower_bound(facets_.begin(), facets_.end(), normal,
                               [](const Facet& f, const Direction& w) { return f.normal < w; });
    if (it == facets_.end() || !(it->normal == normal)) return nullptr;
    return &*it;
}

Polytope convex_hull(PointList points, int n) {
    if (points.empty()) throw std::invalid_argument("convex_hull: empty point set");
    for (const auto& p : points) {
        if (p.size() != n) throw dimension_mismatch("convex_hull: point of length " + std::to_string(p.size()) +
                                                    " in R^" + std::to_string(n));
    }
    std::sort(points.begin(), points.end(), lex_less<Rational>);
    points.erase(std::unique(points.begin(), points.end(), equal<Rational>), points.end());

    Polytope poly;
    poly.n_ = n;
    const Chart chart = affine_chart(points, n);
    poly.dim_ = chart.rank;
    const int k = chart.rank;

    if (k == 0) {
        poly.vertices_ = {points[0]};
        return poly;
    }

    PointList chart_pts;
    chart_pts.reserve(points.size());
    for (const auto& p : points) {
        VectorXq c(k);
        for (int j = 0; j < k; ++j) c[j] = p[chart.columns[j]];
        chart_pts.push_back(std::move(c));
    }
    const BigInt s = common_denominator(chart_pts);
    std::vector<detail::IntRow<BigInt>> ints;
    ints.reserve(chart_pts.size());
    for (const auto& c : chart_pts) ints.push_back(scaled_row(c, s));

    const auto hull = run_kernel(ints, k);

    std::vector<int> vertex_of(points.size(), -1);
    for (int idx : hull.vertices) {
        vertex_of[idx] = static_cast<int>(poly.vertices_.size());
        poly.vertices_.push_back(points[idx]);
    }

    const Rational chart_volume = Rational(hull.volume_det) / (factorial(k) * power(Rational(s), k));

    if (k == n) {
        poly.volume_ = chart_volume;
        const Rational s_pow = power(Rational(s), n - 1);
        for (std::size_t h = 0; h < hull.normals.size(); ++h) {
            VectorXz a(n);
            for (int j = 0; j < n; ++j) a[j] = hull.normals[h][j];
            Facet f{Direction(a), Rational(hull.offsets[h]) / Rational(s), 0, {}};
            const BigInt& aj = hull.normals[h][hull.plane_drop[h]];
            f.co_weight = Rational(hull.plane_area_det[h]) / (factorial(n - 1) * Rational(abs(aj)) * s_pow);
            for (int idx : hull.plane_vertices[h]) f.vertices.push_back(vertex_of[idx]);
            std::sort(f.vertices.begin(), f.vertices.end());
            poly.facets_.push_back(std::move(f));
        }
        std::sort(poly.facets_.begin(), poly.facets_.end(),
                  [](const Facet& a, const Facet& b) { return a.normal < b.normal; });
    } else if (k == n - 1) {
        const Direction w = line_representative(cross_normal(chart.basis, n));
        int dropped = 0;
        while (std::find(chart.columns.begin(), chart.columns.end(), dropped) != chart.columns.end()) ++dropped;
        poly.flat_normal_ = w;
        poly.flat_co_weight_ = chart_volume / Rational(abs(w[dropped]));
    }
    return poly;
}

Polytope convex_hull(PointList points) {
    if (points.empty()) throw std::invalid_argument("convex_hull: empty point set");
    const int n = static_cast<int>(points.front().size());
    return convex_hull(std::move(points), n);
}

Polytope make_polytope(std::initializer_list<std::initializer_list<Rational>> points) {
    PointList pts;
    for (const auto& p : points) {
        VectorXq v(static_cast<Eigen::Index>(p.size()));
        Eigen::Index i = 0;
        for (const auto& x : p) v[i++] = x;
        pts.push_back(std::move(v));
    }
    return convex_hull(std::move(pts));
}

Polytope segment(const VectorXq& v) {
    return convex_hull({VectorXq::Constant(v.size(), Rational(0)), v}, static_cast<int>(v.size()));
}

Rational support_value(const Polytope& p, const Direction& w) {
    if (w.dim() != p.ambient_dim()) throw dimension_mismatch("support_value: direction dimension");
    Rational best = dot(w.coords(), p.vertices().front());
    for (const auto& v : p.vertices()) {
        Rational x = dot(w.coords(), v);
        if (x > best) best = std::move(x);
    }
    return best;
}

Rational support_value(const Polytope& p, const VectorXq& w) {
    if (w.size() != p.ambient_dim()) throw dimension_mismatch("support_value: direction dimension");
    Rational best = w.dot(p.vertices().front());
    for (const auto& v : p.vertices()) {
        Rational x = w.dot(v);
        if (x > best) best = std::move(x);
    }
    return best;
}

Rational width(const Polytope& p, const Direction& w) { return support_value(p, w) + support_value(p, -w); }

Polytope face(const Polytope& p, const Direction& w) {
    const Rational h = support_value(p, w);
    PointList pts;
    for (const auto& v : p.vertices()) {
        if (dot(w.coords(), v) == h) pts.push_back(v);
    }
    return convex_hull(std::move(pts), p.ambient_dim());
}

VectorXq project_point(const VectorXq& x, const Direction& w) {
    const int n = w.dim();
    const int j = w.first_nonzero();
    const Rational t = dot(w.coords(), x) / Rational(w.norm2());
    VectorXq y(n - 1);
    for (int i = 0, ii = 0; i < n; ++i) {
        if (i == j) continue;
        y[ii++] = x[i] - t * Rational(w[i]);
    }
    return y;
}

Polytope project(const Polytope& p, const Direction& w) {
    if (w.dim() != p.ambient_dim()) throw dimension_mismatch("project: direction dimension");
    PointList pts;
    pts.reserve(p.vertices().size());
    for (const auto& v : p.vertices()) pts.push_back(project_point(v, w));
    return convex_hull(std::move(pts), p.ambient_dim() - 1);
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
    if (p.ambient_dim() != q.ambient_dim()) throw dimension_mismatch("minkowski_sum: ambient dimensions differ");
    PointList pts;
    pts.reserve(p.vertices().size() * q.vertices().size());
    for (const auto& a : p.vertices()) {
        for (const auto& b : q.vertices()) pts.push_back(a + b);
    }
    return convex_hull(std::move(pts), p.ambient_dim());
}

Polytope operator+(const Polytope& p, const Polytope& q) { return minkowski_sum(p, q); }

Polytope scale(const Polytope& p, const Rational& lambda) {
    if (lambda < 0) throw std::invalid_argument("scale: negative factor");
    PointList pts;
    pts.reserve(p.vertices().size());
    for (const auto& v : p.vertices()) pts.push_back(v * lambda);
    return convex_hull(std::move(pts), p.ambient_dim());
}

Polytope operator*(const Rational& lambda, const Polytope& p) { return scale(p, lambda); }

Polytope translate(const Polytope& p, const VectorXq& a) {
    if (a.size() != p.ambient_dim()) throw dimension_mismatch("translate: vector dimension");
    PointList pts;
    pts.reserve(p.vertices().size());
    for (const auto& v : p.vertices()) pts.push_back(v + a);
    return convex_hull(std::move(pts), p.ambient_dim());
}

Polytope operator+(const Polytope& p, const VectorXq& a) { return translate(p, a); }

Rational pairing_volume(const Polytope& p) {
    if (!p.full_dimensional()) return 0;
    Rational s = 0;
    for (const auto& f : p.facets()) s += f.offset * f.co_weight;
    return s / p.ambient_dim();
}

Polytope truncate(const Polytope& k, const Direction& u, const Rational& eps) {
    if (eps < 0) throw std::invalid_argument("truncate: negative depth");
    if (!k.full_dimensional()) throw std::invalid_argument("truncate: body must be full-dimensional");
    if (eps == 0) return k;
    auto hs = facet_halfspaces(k);
    hs.push_back(Hyperplane{u, support_value(k, u) - eps});
    Polytope cut = intersect_halfspaces(hs, k.ambient_dim());
    if (!cut.full_dimensional()) throw empty_error("truncate: cut leaves no interior");
    return cut;
}

bool is_homothetic(const Polytope& p, const Polytope& q) {
    if (p.ambient_dim() != q.ambient_dim() || p.dim() != q.dim()) return false;
    if (p.vertices().size() != q.vertices().size()) return false;
    const int n = p.ambient_dim();
    const VectorXq& p0 = p.vertices().front();
    const VectorXq& q0 = q.vertices().front();
    Rational lambda = 1;
    for (int i = 0; i < n; ++i) {
        const Direction e(unit_vector(n, i));
        const Rational wp = width(p, e), wq = width(q, e);
        if (wp != 0 && wq != 0) {
            lambda = wq / wp;
            break;
        }
        if ((wp == 0) != (wq == 0)) return false;
    }
    for (std::size_t i = 0; i < p.vertices().size(); ++i) {
        const VectorXq a = (p.vertices()[i] - p0) * lambda;
        const VectorXq b = q.vertices()[i] - q0;
        if (!equal(a, b)) return false;
    }
    return true;
}

VectorXq vertex_centroid(const Polytope& p) {
    VectorXq c = VectorXq::Constant(p.ambient_dim(), Rational(0));
    for (const auto& v : p.vertices()) c += v;
    return c / Rational(static_cast<long>(p.vertices().size()));
}

bool contains(const Polytope& p, const VectorXq& x) {
    if (x.size() != p.ambient_dim()) throw dimension_mismatch("contains: point dimension");
    if (p.full_dimensional()) {
        for (const auto& f : p.facets()) {
            if (dot(f.normal.coords(), x) > f.offset) return false;
        }
        return true;
    }
    PointList pts = p.vertices();
    pts.push_back(x);
    return convex_hull(std::move(pts), p.ambient_dim()) == p;
}

bool contains(const Polytope& outer, const Polytope& inner) {
    for (const auto& v : inner.vertices()) {
        if (!contains(outer, v)) return false;
    }
    return true;
}

std::vector<Direction> facet_normals(const Polytope& p) {
    std::vector<Direction> out;
    out.reserve(p.facets().size());
    for (const auto& f : p.facets()) out.push_back(f.normal);
    return out;
}

std::vector<std::pair<int, int>> edges(const Polytope& p) {
    if (!p.full_dimensional()) throw std::invalid_argument("edges: body must be full-dimensional");
    const int n = p.ambient_dim();
    const int nv = static_cast<int>(p.vertices().size());
    std::vector<std::vector<int>> facets_at(nv);
    for (int f = 0; f < static_cast<int>(p.facets().size()); ++f) {
        for (int v : p.facets()[f].vertices) facets_at[v].push_back(f);
    }
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < nv; ++a) {
        for (int b = a + 1; b < nv; ++b) {
            detail::EchelonBasis<BigInt> basis(n);
            for (int f : facets_at[a]) {
                if (!std::binary_search(facets_at[b].begin(), facets_at[b].end(), f)) continue;
                const auto& c = p.facets()[f].normal.coords();
                basis.insert(detail::IntRow<BigInt>(c.data(), c.data() + c.size()));
            }
            if (static_cast<int>(basis.rank()) == n - 1) out.emplace_back(a, b);
        }
    }
    return out;
}

}  // namespace wulffbez
