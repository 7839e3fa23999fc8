#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace besse {

// All arithmetic in this project is exact. Int is an arbitrary-precision
// integer; Rational is always stored reduced with a positive denominator.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Floor division, correct for negative operands. b must be nonzero.
Int floor_div(const Int& a, const Int& b);

// Largest integer <= q.
Int rational_floor(const Rational& q);

bool is_integer(const Rational& q);

// Exact integer value of q. Throws std::domain_error if q is not an integer.
Int integer_value(const Rational& q);

std::int64_t to_int64(const Int& v);

// Renders "num/den", omitting "/den" when the denominator is 1.
std::string to_string(const Rational& q);

}  // namespace besse
