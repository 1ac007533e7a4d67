#include "wulffbez/direction.hpp"

#include <cmath>
#include <stdexcept>

namespace wulffbez {

namespace {

VectorXz make_primitive(VectorXz v) {
    BigInt g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v[i]);
    if (g == 0) throw std::invalid_argument("direction must be nonzero");
    if (g != 1) {
        for (Eigen::Index i = 0; i < v.size(); ++i) v[i] /= g;
    }
    return v;
}

VectorXz clear_denominators(const VectorXq& v) {
    BigInt l = 1;
    for (Eigen::Index i = 0; i < v.size(); ++i) l = lcm(l, denominator(v[i]));
    VectorXz out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = numerator(v[i]) * (l / denominator(v[i]));
    return out;
}

}  // namespace

Direction::Direction(VectorXz coords) : coords_(make_primitive(std::move(coords))) {}

Direction::Direction(const VectorXq& coords) : coords_(make_primitive(clear_denominators(coords))) {}

Direction::Direction(std::initializer_list<long> coords) {
    VectorXz v(static_cast<Eigen::Index>(coords.size()));
    Eigen::Index i = 0;
    for (long c : coords) v[i++] = BigInt(c);
    coords_ = make_primitive(std::move(v));
}

double Direction::norm() const { return std::sqrt(norm2().convert_to<double>()); }

Direction Direction::operator-() const { return Direction(VectorXz(-coords_)); }

int Direction::first_nonzero() const {
    for (int i = 0; i < dim(); ++i) {
        if (coords_[i] != 0) return i;
    }
    return -1;
}

std::strong_ordering Direction::operator<=>(const Direction& other) const {
    if (dim() != other.dim()) return dim() <=> other.dim();
    for (int i = 0; i < dim(); ++i) {
        if (coords_[i] < other.coords_[i]) return std::strong_ordering::less;
        if (other.coords_[i] < coords_[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

bool Direction::operator==(const Direction& other) const { return (*this <=> other) == 0; }

std::string Direction::str() const {
    std::string s = "(";
    for (int i = 0; i < dim(); ++i) {
        if (i) s += ",";
        s += coords_[i].str();
    }
    return s + ")";
}

Direction line_representative(const Direction& w) {
    return w[w.first_nonzero()] < 0 ? -w : w;
}

}  // namespace wulffbez
