#pragma once

// Hand-rolled generators and independent oracles shared by the test binaries.

#include "wulffbez/corpus.hpp"
#include "wulffbez/mixed_volume.hpp"
#include "wulffbez/polytope.hpp"
#include "wulffbez/random_polytope.hpp"
#include "wulffbez/scalar.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace testing_support {

using namespace wulffbez;

/// p/q with p in [-range, range], q in [1, den].
inline Rational random_rational(std::mt19937_64& rng, int range, int den) {
    std::uniform_int_distribution<int> num(-range, range), d(1, den);
    return Rational(num(rng)) / Rational(d(rng));
}

inline Rational random_positive(std::mt19937_64& rng, int range, int den) {
    std::uniform_int_distribution<int> num(1, range), d(1, den);
    return Rational(num(rng)) / Rational(d(rng));
}

inline VectorXq random_point(std::mt19937_64& rng, int n, int height) {
    std::uniform_int_distribution<int> coord(-height, height);
    VectorXq v(n);
    for (int i = 0; i < n; ++i) v[i] = coord(rng);
    return v;
}

inline Direction random_direction(std::mt19937_64& rng, int n, int height = 3) {
    for (;;) {
        VectorXq v = random_point(rng, n, height);
        bool zero = true;
        for (int i = 0; i < n; ++i) zero = zero && v[i] == 0;
        if (!zero) return Direction(v);
    }
}

/// n bodies in R^n, each lower-dimensional with probability `degenerate`.
inline BodyTuple random_tuple(std::mt19937_64& rng, int n, double degenerate = 0.25, int height = 3) {
    BodyTuple t;
    for (int i = 0; i < n; ++i) t.push_back(random_body(rng, n, degenerate, height));
    return t;
}

/// Facets by brute force: for every n-subset of vertices spanning a
/// hyperplane with all vertices on one side, record the primitive normal and
/// offset. Independent of the incremental hull.
inline std::vector<std::pair<Direction, Rational>> brute_force_facets(const Polytope& p) {
    const int n = p.ambient_dim();
    const auto& verts = p.vertices();
    const int m = static_cast<int>(verts.size());
    std::vector<std::pair<Direction, Rational>> out;
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    if (m < n) return out;
    for (;;) {
        // Normal via the nullspace of the difference matrix (n-1) x n, by cofactors.
        MatrixXq d(n - 1, n);
        for (int r = 1; r < n; ++r) d.row(r - 1) = (verts[idx[r]] - verts[idx[0]]).transpose();
        VectorXq normal(n);
        for (int c = 0; c < n; ++c) {
            MatrixXq minor(n - 1, n - 1);
            for (int r = 0; r < n - 1; ++r) {
                int cc = 0;
                for (int j = 0; j < n; ++j) {
                    if (j != c) minor(r, cc++) = d(r, j);
                }
            }
            // Exact Laplace-free determinant by fraction-keeping elimination.
            Rational det = 1;
            for (int k = 0; k < n - 1; ++k) {
                int piv = -1;
                for (int r = k; r < n - 1; ++r) {
                    if (minor(r, k) != 0) {
                        piv = r;
                        break;
                    }
                }
                if (piv < 0) {
                    det = 0;
                    break;
                }
                if (piv != k) {
                    minor.row(piv).swap(minor.row(k));
                    det = -det;
                }
                det *= minor(k, k);
                for (int r = k + 1; r < n - 1; ++r) {
                    const Rational f = minor(r, k) / minor(k, k);
                    for (int j = k; j < n - 1; ++j) minor(r, j) -= f * minor(k, j);
                }
            }
            normal[c] = ((c % 2) ? -det : det);
        }
        bool nonzero = false;
        for (int c = 0; c < n; ++c) nonzero = nonzero || normal[c] != 0;
        if (nonzero) {
            Rational off = 0;
            for (int c = 0; c < n; ++c) off += normal[c] * verts[idx[0]][c];
            int above = 0, below = 0;
            for (const auto& v : verts) {
                Rational s = -off;
                for (int c = 0; c < n; ++c) s += normal[c] * v[c];
                if (s > 0) ++above;
                if (s < 0) ++below;
            }
            if (above == 0 || below == 0) {
                if (above > 0) normal = -normal;
                const Direction w(normal);
                const Rational offset = support_value(p, w);
                if (std::find_if(out.begin(), out.end(), [&](const auto& e) { return e.first == w; }) == out.end()) {
                    out.emplace_back(w, offset);
                }
            }
        }
        int i = n - 1;
        while (i >= 0 && idx[i] == m - n + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

/// Every corpus body plus the tuples (K, ..., K) and (K, Q, ..., Q).
inline std::vector<BodyTuple> corpus_tuples() {
    std::vector<BodyTuple> out;
    for (const auto& name : corpus_names()) {
        const Polytope k = corpus(name);
        const int n = k.ambient_dim();
        if (n > 3) continue;
        out.push_back(repeat({}, k, n));
        out.push_back(repeat({k}, corpus("cube-" + std::to_string(n)), n - 1));
        out.push_back(repeat({corpus("seg-x", n)}, k, n - 1));
    }
    return out;
}

}  // namespace testing_support
