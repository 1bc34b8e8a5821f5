#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace diamforge {

// All bound arithmetic is exact. Diameters are integers and the certified
// comparisons below must never be decided by float rounding.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer floor_rational(const Rational& r) {
    Integer q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

inline Integer ceil_rational(const Rational& r) {
    Integer q = numerator(r) / denominator(r);
    if (numerator(r) > 0 && q * denominator(r) != numerator(r)) ++q;
    return q;
}

}  // namespace diamforge
