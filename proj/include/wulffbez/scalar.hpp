#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>
#include <string_view>
#include <vector>

namespace wulffbez {

// Exact scalars. Expression templates are disabled so that `auto` and Eigen
// expressions always hold concrete values.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VectorXq = Vector<Rational>;
using VectorXz = Vector<BigInt>;
using MatrixXq = Matrix<Rational>;

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, with "/q" omitted when q == 1.
std::string to_string(const Rational& value);

inline std::string to_string(const BigInt& value) { return value.str(); }

/// Lexicographic order on equal-length vectors.
template <typename Scalar>
bool lex_less(const Vector<Scalar>& a, const Vector<Scalar>& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return false;
}

template <typename Scalar>
bool equal(const Vector<Scalar>& a, const Vector<Scalar>& b) {
    return a.size() == b.size() && (a.array() == b.array()).all();
}

Rational dot(const VectorXz& a, const VectorXq& b);
BigInt dot(const VectorXz& a, const VectorXz& b);

VectorXq to_rational(const VectorXz& v);

/// Unit vector e_i in R^n (0-based index).
VectorXq unit_vector(int n, int i);

/// Integer power by squaring; negative exponents invert.
Rational power(const Rational& base, int exponent);

Rational factorial(int k);
BigInt binomial(int n, int k);

/// Nearest rational with denominator 2^bits; used only where a floating-point
/// quantity has to enter exact geometry.
Rational rationalize(double value, int bits = 40);

double to_double(const Rational& value);

}  // namespace wulffbez
