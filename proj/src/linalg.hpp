#pragma once

// Small exact linear algebra over Q. Eigen's decompositions pivot on
// magnitude and assume floating point, so elimination is done by hand.

#include "wulffbez/scalar.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace wulffbez::detail {

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<int> rref(MatrixXq& m) {
    std::vector<int> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index p = row;
        while (p < m.rows() && m(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        m.row(p).swap(m.row(row));
        const Rational inv = 1 / m(row, col);
        for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            const Rational f = m(i, col);
            for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

/// Solution of A x = b for square nonsingular A.
inline VectorXq solve(const MatrixXq& a, const VectorXq& b) {
    const Eigen::Index n = a.rows();
    MatrixXq aug(n, n + 1);
    aug.leftCols(n) = a;
    aug.col(n) = b;
    const auto pivots = rref(aug);
    if (static_cast<Eigen::Index>(pivots.size()) != n || pivots.back() >= n) {
        throw std::domain_error("solve: singular system");
    }
    return aug.col(n);
}

/// Basis of {x : A x = 0}.
inline std::vector<VectorXq> nullspace(MatrixXq a) {
    const auto pivots = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<VectorXq> basis;
    for (Eigen::Index free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        VectorXq v = VectorXq::Constant(a.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace wulffbez::detail
