#pragma once

#include <gmpxx.h>

#include <string>

namespace qsr {

/// Exact arbitrary-precision rational. All geometry in the library is
/// computed with it; floating point only appears when formatting SVG.
using Rational = mpq_class;

/// Builds num/den in canonical form.
Rational make_rational(long num, long den = 1);

/// Parses "p", "p/q" or a finite decimal such as "0.001" exactly.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

/// "num/den" with den >= 1 always present, e.g. "3/1", "-1/2".
std::string rational_string(const Rational& q);

/// Decimal rendering rounded half-up to `digits` fractional digits.
std::string decimal_string(const Rational& q, int digits = 6);

Rational abs_value(const Rational& q);

}  // namespace qsr
