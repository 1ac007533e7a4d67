#pragma once

// Incremental (beneath-beyond) convex hull over integer points.
//
// The kernel is templated on the integer type: the caller first runs it with
// CheckedInt, which throws int_overflow on any 64-bit overflow, and re-runs
// with BigInt when that happens. Points must be distinct, lexicographically
// sorted and affinely spanning Z^d.

#include "wulffbez/scalar.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace wulffbez::detail {

struct int_overflow {};

class CheckedInt {
public:
    CheckedInt() = default;
    CheckedInt(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

    std::int64_t value() const { return v_; }

    friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
        std::int64_t r;
        if (__builtin_add_overflow(a.v_, b.v_, &r)) throw int_overflow{};
        return r;
    }
    friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw int_overflow{};
        return r;
    }
    friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw int_overflow{};
        return r;
    }
    // exact division only
    friend CheckedInt operator/(CheckedInt a, CheckedInt b) {
        if (b.v_ == -1) return -a;
        return a.v_ / b.v_;
    }
    CheckedInt operator-() const {
        if (v_ == INT64_MIN) throw int_overflow{};
        return -v_;
    }
    CheckedInt& operator+=(CheckedInt o) { return *this = *this + o; }
    CheckedInt& operator-=(CheckedInt o) { return *this = *this - o; }

    auto operator<=>(const CheckedInt&) const = default;
    bool operator==(const CheckedInt&) const = default;

private:
    std::int64_t v_ = 0;
};

inline CheckedInt abs_value(CheckedInt a) { return a < CheckedInt(0) ? -a : a; }
inline CheckedInt gcd_value(CheckedInt a, CheckedInt b) {
    return std::gcd(abs_value(a).value(), abs_value(b).value());
}
inline BigInt abs_value(const BigInt& a) { return abs(a); }
inline BigInt gcd_value(const BigInt& a, const BigInt& b) { return gcd(a, b); }

inline BigInt to_big(const CheckedInt& a) { return BigInt(a.value()); }
inline BigInt to_big(const BigInt& a) { return a; }

template <class Int>
using IntRow = std::vector<Int>;

/// Bareiss fraction-free determinant.
template <class Int>
Int determinant(std::vector<IntRow<Int>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Int(1);
    Int sign(1), prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k] == Int(0)) ++p;
        if (p == n) return Int(0);
        if (p != k) {
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = Int(0);
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Divides a row by the gcd of its entries; returns false for the zero row.
template <class Int>
bool make_primitive(IntRow<Int>& row) {
    Int g(0);
    for (const Int& x : row) g = gcd_value(g, x);
    if (g == Int(0)) return false;
    if (g != Int(1)) {
        for (Int& x : row) x = x / g;
    }
    return true;
}

/// Incremental row-echelon basis over the integers, used for rank tests.
template <class Int>
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t width) : width_(width) {}

    /// Adds v if it is independent of the current rows; returns whether it was.
    bool insert(IntRow<Int> v) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t c = pivots_[r];
            if (v[c] == Int(0)) continue;
            const Int a = rows_[r][c], b = v[c];
            for (std::size_t j = 0; j < width_; ++j) v[j] = a * v[j] - b * rows_[r][j];
            make_primitive(v);
        }
        std::size_t c = 0;
        while (c < width_ && v[c] == Int(0)) ++c;
        if (c == width_) return false;
        rows_.push_back(std::move(v));
        pivots_.push_back(c);
        return true;
    }

    std::size_t rank() const { return rows_.size(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    std::size_t width_;
    std::vector<IntRow<Int>> rows_;
    std::vector<std::size_t> pivots_;
};

template <class Int>
struct HullKernelResult {
    std::vector<IntRow<Int>> normals;            // primitive outer normals, one per facet hyperplane
    std::vector<Int> offsets;                    // <normal, x> <= offset
    std::vector<int> vertices;                   // extreme point indices, ascending
    std::vector<std::vector<int>> plane_vertices;  // extreme points on each hyperplane
    std::vector<Int> plane_area_det;             // sum over boundary simplices of |det| after dropping coordinate
    std::vector<int> plane_drop;                 // dropped coordinate (first nonzero normal entry)
    Int volume_det{0};                           // sum of |det| of the fan from point 0
};

template <class Int>
class HullKernel {
public:
    HullKernel(const std::vector<IntRow<Int>>& pts, int d) : pts_(pts), d_(d) {}

    HullKernelResult<Int> run() {
        build_initial_simplex();
        for (std::size_t i = 0; i < pts_.size(); ++i) {
            if (in_initial_[i]) continue;
            insert_point(static_cast<int>(i));
        }
        return collect();
    }

private:
    struct Facet {
        std::vector<int> v;  // sorted point indices
        IntRow<Int> a;
        Int b;
        bool alive = true;
    };

    Int dot_point(const IntRow<Int>& a, int p) const {
        Int s(0);
        const auto& x = pts_[p];
        for (int j = 0; j < d_; ++j) s += a[j] * x[j];
        return s;
    }

    void build_initial_simplex() {
        in_initial_.assign(pts_.size(), false);
        std::vector<int> simplex{0};
        EchelonBasis<Int> basis(d_);
        for (std::size_t i = 1; i < pts_.size() && static_cast<int>(simplex.size()) < d_ + 1; ++i) {
            IntRow<Int> diff(d_);
            for (int j = 0; j < d_; ++j) diff[j] = pts_[i][j] - pts_[0][j];
            if (basis.insert(diff)) simplex.push_back(static_cast<int>(i));
        }
        csum_.assign(d_, Int(0));
        for (int idx : simplex) {
            in_initial_[idx] = true;
            for (int j = 0; j < d_; ++j) csum_[j] += pts_[idx][j];
        }
        for (int omit = 0; omit <= d_; ++omit) {
            std::vector<int> v;
            for (int k = 0; k <= d_; ++k) {
                if (k != omit) v.push_back(simplex[k]);
            }
            add_facet(std::move(v));
        }
    }

    void add_facet(std::vector<int> v) {
        std::sort(v.begin(), v.end());
        std::vector<IntRow<Int>> m(d_ - 1, IntRow<Int>(d_));
        for (int k = 1; k < d_; ++k) {
            for (int j = 0; j < d_; ++j) m[k - 1][j] = pts_[v[k]][j] - pts_[v[0]][j];
        }
        IntRow<Int> a(d_);
        for (int j = 0; j < d_; ++j) {
            std::vector<IntRow<Int>> minor(d_ - 1, IntRow<Int>(d_ - 1));
            for (int r = 0; r < d_ - 1; ++r) {
                for (int c = 0, cc = 0; c < d_; ++c) {
                    if (c != j) minor[r][cc++] = m[r][c];
                }
            }
            Int det = determinant(std::move(minor));
            a[j] = (j % 2 == 0) ? det : -det;
        }
        make_primitive(a);
        Int b = dot_point(a, v[0]);
        Int side(0);
        for (int j = 0; j < d_; ++j) side += a[j] * csum_[j];
        side -= Int(d_ + 1) * b;
        if (side > Int(0)) {
            for (Int& x : a) x = -x;
            b = -b;
        }
        facets_.push_back(Facet{std::move(v), std::move(a), std::move(b), true});
        ++alive_;
    }

    void insert_point(int p) {
        std::vector<std::size_t> visible;
        for (std::size_t f = 0; f < facets_.size(); ++f) {
            if (facets_[f].alive && dot_point(facets_[f].a, p) > facets_[f].b) visible.push_back(f);
        }
        if (visible.empty()) return;

        std::map<std::vector<int>, int> ridges;
        for (std::size_t f : visible) {
            const auto& v = facets_[f].v;
            for (int omit = 0; omit < d_; ++omit) {
                std::vector<int> r;
                r.reserve(d_ - 1);
                for (int k = 0; k < d_; ++k) {
                    if (k != omit) r.push_back(v[k]);
                }
                ++ridges[std::move(r)];
            }
        }
        for (std::size_t f : visible) {
            facets_[f].alive = false;
            --alive_;
        }
        for (auto& [ridge, count] : ridges) {
            if (count != 1) continue;
            std::vector<int> v = ridge;
            v.push_back(p);
            add_facet(std::move(v));
        }
        if (facets_.size() > 64 && facets_.size() > 2 * alive_) compact();
    }

    void compact() {
        std::vector<Facet> kept;
        kept.reserve(alive_);
        for (auto& f : facets_) {
            if (f.alive) kept.push_back(std::move(f));
        }
        facets_ = std::move(kept);
    }

    HullKernelResult<Int> collect() {
        compact();
        HullKernelResult<Int> out;
        std::map<std::pair<IntRow<Int>, Int>, int> plane_index;
        std::vector<int> plane_of(facets_.size());
        for (std::size_t f = 0; f < facets_.size(); ++f) {
            auto key = std::make_pair(facets_[f].a, facets_[f].b);
            auto it = plane_index.find(key);
            if (it == plane_index.end()) {
                it = plane_index.emplace(std::move(key), static_cast<int>(out.normals.size())).first;
                out.normals.push_back(facets_[f].a);
                out.offsets.push_back(facets_[f].b);
            }
            plane_of[f] = it->second;
        }
        const std::size_t nplanes = out.normals.size();
        out.plane_area_det.assign(nplanes, Int(0));
        out.plane_drop.assign(nplanes, 0);
        for (std::size_t h = 0; h < nplanes; ++h) {
            int j = 0;
            while (out.normals[h][j] == Int(0)) ++j;
            out.plane_drop[h] = j;
        }

        std::map<int, std::set<int>> planes_at;
        for (std::size_t f = 0; f < facets_.size(); ++f) {
            const auto& v = facets_[f].v;
            const int h = plane_of[f];
            for (int idx : v) planes_at[idx].insert(h);

            std::vector<IntRow<Int>> full(d_, IntRow<Int>(d_));
            for (int k = 0; k < d_; ++k) {
                for (int j = 0; j < d_; ++j) full[k][j] = pts_[v[k]][j] - pts_[0][j];
            }
            out.volume_det += abs_value(determinant(std::move(full)));

            const int drop = out.plane_drop[h];
            std::vector<IntRow<Int>> face(d_ - 1, IntRow<Int>(d_ - 1));
            for (int k = 1; k < d_; ++k) {
                for (int j = 0, jj = 0; j < d_; ++j) {
                    if (j != drop) face[k - 1][jj++] = pts_[v[k]][j] - pts_[v[0]][j];
                }
            }
            out.plane_area_det[h] += abs_value(determinant(std::move(face)));
        }

        out.plane_vertices.assign(nplanes, {});
        for (const auto& [idx, planes] : planes_at) {
            EchelonBasis<Int> basis(d_);
            for (int h : planes) {
                basis.insert(out.normals[h]);
                if (static_cast<int>(basis.rank()) == d_) break;
            }
            if (static_cast<int>(basis.rank()) < d_) continue;
            out.vertices.push_back(idx);
            for (int h : planes) out.plane_vertices[h].push_back(idx);
        }
        return out;
    }

    const std::vector<IntRow<Int>>& pts_;
    int d_;
    std::vector<bool> in_initial_;
    IntRow<Int> csum_;
    std::vector<Facet> facets_;
    std::size_t alive_ = 0;
};

template <class Int>
HullKernelResult<Int> hull_kernel(const std::vector<IntRow<Int>>& pts, int d) {
    return HullKernel<Int>(pts, d).run();
}

}  // namespace wulffbez::detail
