#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace weylfan {

/// Exact rational scalar. Coefficients and weights never touch floating point.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" and canonicalizes. Throws Error(parse) on junk.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// Smallest integer >= q.
Integer ceil(const Rational& q);

Integer floor(const Rational& q);

/// Least common multiple of all denominators.
Integer common_denominator(const std::vector<Rational>& values);

/// Scales a rational vector by a positive factor so that it becomes a
/// primitive integer vector (gcd of entries is 1). The zero vector is
/// returned unchanged.
std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& values);

}  // namespace weylfan
