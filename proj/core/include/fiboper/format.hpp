#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fiboper/polynomial.hpp"

namespace fiboper {

enum class OutputFormat { Json, Latex, Plain };

OutputFormat parse_format(std::string_view text);  // throws DomainError

/// Descending-power plain text, e.g. "x^3 - 4x^2 + 3x" or
/// "x^5 + 5x^4 + (15/2)x^3 + 5x^2 + x + 1/8". Zero renders as "0".
std::string render_plain(const Polynomial& p);

/// LaTeX with braced exponents and \frac for non-integer coefficients.
std::string render_latex(const Polynomial& p);

/// Ascending coefficient strings ("p" or "p/q"), the JSON wire form.
std::vector<std::string> coefficient_strings(const Polynomial& p);

/// Inverse of coefficient_strings; throws DomainError on malformed input.
Polynomial polynomial_from_strings(const std::vector<std::string>& coeffs);

}  // namespace fiboper
