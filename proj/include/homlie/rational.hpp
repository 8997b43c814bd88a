#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace homlie {

// The exact scalar field: arbitrary-precision rationals, always canonical
// (positive denominator, gcd(|num|, den) = 1). No floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denom(const Rational& r) { return boost::multiprecision::denominator(r); }

/// num/den with the sign moved to the numerator; the backend constructor
/// rejects negative denominators outright.
inline Rational make_rational(Integer num, Integer den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

/// "n" for integers, "n/d" otherwise.
inline std::string rational_str(const Rational& r) { return r.str(); }

}  // namespace homlie
