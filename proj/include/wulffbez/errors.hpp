#pragma once

#include <stdexcept>
#include <string>

namespace wulffbez {

/// Base class for failures of geometric preconditions (bad input, not bugs).
class geometry_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class dimension_mismatch : public geometry_error {
public:
    using geometry_error::geometry_error;
};

/// Halfspace system whose intersection is not bounded.
class unbounded_error : public geometry_error {
public:
    using geometry_error::geometry_error;
};

/// Halfspace system with no solution, or a cut that leaves no interior.
class empty_error : public geometry_error {
public:
    using geometry_error::geometry_error;
};

class arity_error : public geometry_error {
public:
    using geometry_error::geometry_error;
};

/// Parameter outside its admissible range (e.g. t outside the perturbation range).
class range_error : public geometry_error {
public:
    using geometry_error::geometry_error;
};

}  // namespace wulffbez
