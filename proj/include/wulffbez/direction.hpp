#pragma once

#include "wulffbez/scalar.hpp"

#include <compare>
#include <initializer_list>
#include <string>

namespace wulffbez {

/// A ray {λw : λ > 0} represented by its primitive integer generator.
///
/// Every unit direction u with a rational ray is stored as the unique integer
/// vector w with coprime entries and u = w/‖w‖. Quantities the geometry pairs
/// with u are kept in the unnormalized convention (support values at w,
/// measures divided by ‖w‖) so that they stay rational.
class Direction {
public:
    /// Normalizes to the primitive representative. Throws std::invalid_argument
    /// for the zero vector.
    explicit Direction(VectorXz coords);
    explicit Direction(const VectorXq& coords);
    Direction(std::initializer_list<long> coords);

    int dim() const { return static_cast<int>(coords_.size()); }
    const VectorXz& coords() const { return coords_; }
    const BigInt& operator[](int i) const { return coords_[i]; }

    VectorXq as_rational() const { return to_rational(coords_); }
    BigInt norm2() const { return dot(coords_, coords_); }
    double norm() const;

    Direction operator-() const;

    /// Smallest index with a nonzero entry.
    int first_nonzero() const;

    std::strong_ordering operator<=>(const Direction& other) const;
    bool operator==(const Direction& other) const;

    std::string str() const;

private:
    VectorXz coords_;
};

/// Sign-canonical line representative: the primitive vector whose first
/// nonzero entry is positive.
Direction line_representative(const Direction& w);

}  // namespace wulffbez
