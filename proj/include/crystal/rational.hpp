#pragma once

#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "crystal/errors.hpp"

namespace crystal {

// All engine arithmetic is exact.  Rationals are kept in lowest terms
// with positive denominator by the backend.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) {
    return denominator(r) == 1;
}

inline Integer to_integer(const Rational& r) {
    if (!is_integer(r))
        throw InvariantViolation("expected an integer, got " + r.str());
    return numerator(r);
}

// Exact narrowing used for wire formats and string statistics.
inline int to_int_exact(const Rational& r) {
    Integer z = to_integer(r);
    if (z > std::numeric_limits<int>::max() || z < std::numeric_limits<int>::min())
        throw InvariantViolation("integer out of int range: " + z.str());
    return static_cast<int>(z);
}

} // namespace crystal
