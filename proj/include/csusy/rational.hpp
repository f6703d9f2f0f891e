#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace csusy {

/// Exact rational number. GMP keeps results of arithmetic in lowest terms
/// with a positive denominator; values built from a raw numerator and
/// denominator go through make_rational() so the invariant always holds.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long numerator, long denominator = 1);
Rational make_rational(const Integer& numerator, const Integer& denominator);

/// Canonical text form `p/q`. Integers are written with an explicit `/1`.
std::string to_string(const Rational& value);

/// Parses `p/q` or `p`. Throws std::invalid_argument on malformed input or a
/// zero denominator.
Rational parse_rational(std::string_view text);

/// Nearest double; loses precision for large numerators.
double to_double(const Rational& value);

}  // namespace csusy
