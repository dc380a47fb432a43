#pragma once

#include <gmpxx.h>

#include <string>

namespace lie {

using Integer = mpz_class;

/// Exact arbitrary-precision fraction, always kept canonical
/// (lowest terms, positive denominator). The scalar type everywhere.
using Rational = mpq_class;

/// Builds a canonical fraction from numerator and denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p" or "p/q". Accepts any integer q != 0 and canonicalizes.
Rational rational_from_string(const std::string& text);

/// Canonical rendering: "p/q" when q != 1, "p" otherwise.
std::string rational_to_string(const Rational& value);

/// base^exp with exp possibly negative (base must be nonzero then).
Rational rational_pow(const Rational& base, long exp);

}  // namespace lie
