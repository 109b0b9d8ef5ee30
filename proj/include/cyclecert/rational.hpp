#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cyclecert {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p", "p/q" or a terminating decimal such as "0.6" into a
/// canonical rational. Throws Error(ParseError) on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

inline Rational abs_value(const Rational& value) { return abs(value); }

inline double to_double(const Rational& value) { return value.get_d(); }

Rational pow(const Rational& base, unsigned exponent);

}  // namespace cyclecert
