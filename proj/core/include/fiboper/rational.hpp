#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace fiboper {

// Exact arithmetic backbone. mpq_class keeps values canonical (lowest terms,
// positive denominator) as long as every mutation goes through canonicalize(),
// which the class operators already guarantee.
using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p" or "p/q" with optional leading '-'. Throws DomainError on
/// anything else (floats, empty, zero denominator).
Rational parse_rational(std::string_view text);

/// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string rational_str(const Rational& r);

/// LaTeX rendering: integers verbatim, fractions as \frac{p}{q} with the sign
/// pulled out front.
std::string rational_latex(const Rational& r);

bool is_integer(const Rational& r);

/// num/den in lowest terms. mpq_class(num, den) alone does not canonicalize.
inline Rational make_ratio(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace fiboper
