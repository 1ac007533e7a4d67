#include "wulffbez/scalar.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace wulffbez {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den)) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    if (num.front() == '+') num.remove_prefix(1);
    if (den.front() == '+') den.remove_prefix(1);
    BigInt p{std::string(num)}, q{std::string(den)};
    if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return Rational(p, q);
}

std::string to_string(const Rational& value) {
    const BigInt& q = denominator(value);
    if (q == 1) return numerator(value).str();
    return numerator(value).str() + "/" + q.str();
}

Rational dot(const VectorXz& a, const VectorXq& b) {
    Rational s = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i] != 0) s += Rational(a[i]) * b[i];
    }
    return s;
}

BigInt dot(const VectorXz& a, const VectorXz& b) {
    BigInt s = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

VectorXq to_rational(const VectorXz& v) {
    VectorXq out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
    return out;
}

VectorXq unit_vector(int n, int i) {
    VectorXq e = VectorXq::Constant(n, Rational(0));
    e[i] = 1;
    return e;
}

Rational power(const Rational& base, int exponent) {
    if (exponent < 0) return 1 / power(base, -exponent);
    Rational r = 1, b = base;
    for (; exponent; exponent >>= 1) {
        if (exponent & 1) r *= b;
        b *= b;
    }
    return r;
}

Rational factorial(int k) {
    Rational f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

Rational rationalize(double value, int bits) {
    if (!std::isfinite(value)) throw std::invalid_argument("cannot rationalize a non-finite value");
    const double scaled = std::nearbyint(std::ldexp(value, bits));
    BigInt num(scaled);
    BigInt den = BigInt(1) << bits;
    return Rational(num, den);
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace wulffbez
