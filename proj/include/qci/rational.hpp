#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>

#include "qci/errors.hpp"

namespace qci {

/// Exact rational scalar.  GMP keeps values canonical (positive denominator,
/// gcd(num, den) = 1) through arithmetic; only direct num/den surgery would
/// need an explicit canonicalize, which this codebase never does.
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional leading '-').  Throws SchemaError on
/// malformed input or zero denominator.
Rational rat_parse(const std::string& s);

/// Canonical string form: "p/q", or "p" when the denominator is 1.
std::string rat_str(const Rational& x);

/// Exact square root when x is the square of a rational, otherwise empty.
std::optional<Rational> rational_sqrt(const Rational& x);

/// Writes x = scale^2 * d with d a squarefree integer (carrying the sign of
/// x) and scale a positive rational.  x = 0 gives d = 0, scale = 0.
/// Square extraction uses trial division up to 10^6 plus a perfect-square
/// check on the cofactor, which is exhaustive for every value this library
/// produces; a d that overflows long raises MathError.
std::pair<long, Rational> squarefree_part(const Rational& x);

}  // namespace qci
