#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace percoperm {

/// Arbitrary-precision signed integer used on every public counting surface.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational; always normalized with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// C(a, b), zero when b < 0 or b > a (including negative a).
Integer binomial(std::int64_t a, std::int64_t b);

Integer factorial(int n);

/// 2^k for k >= 0.
Integer power_of_two(unsigned k);

bool is_power_of_two(const Integer& x);

inline std::string to_string(const Integer& x) { return x.str(); }

}  // namespace percoperm
