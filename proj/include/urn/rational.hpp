#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace urn {

// Arbitrary-precision rational. Denominators in the exact urn law are
// products of total-ball counts along paths, which overflow 64 bits well
// below the distribution cap, so fixed-width types are not an option.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Every finite double is a dyadic rational; the conversion is exact.
inline Rational rational_from_double(double x) { return Rational(x); }

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

inline Rational rational(std::int64_t num, std::int64_t den) {
    return Rational(BigInt(num), BigInt(den));
}

} // namespace urn
