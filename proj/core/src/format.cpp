#include "fiboper/format.hpp"

#include "fiboper/errors.hpp"

namespace fiboper {

OutputFormat parse_format(std::string_view text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "latex") return OutputFormat::Latex;
  if (text == "plain") return OutputFormat::Plain;
  throw DomainError("unknown format '" + std::string(text) + "' (expected json, latex or plain)");
}

namespace {

std::string plain_magnitude(const Rational& c, std::size_t power) {
  Rational a = abs(c);
  if (power == 0) return rational_str(a);
  if (a == 1) return "";
  if (is_integer(a)) return rational_str(a);
  return "(" + rational_str(a) + ")";
}

std::string latex_magnitude(const Rational& c, std::size_t power) {
  Rational a = abs(c);
  if (power != 0 && a == 1) return "";
  return rational_latex(a);
}

std::string variable(std::size_t power, bool latex) {
  if (power == 0) return "";
  if (power == 1) return "x";
  if (latex) return "x^{" + std::to_string(power) + "}";
  return "x^" + std::to_string(power);
}

std::string render(const Polynomial& p, bool latex) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t idx = c.size(); idx-- > 0;) {
    if (c[idx] == 0) continue;
    if (out.empty()) {
      if (c[idx] < 0) out += "-";
    } else {
      out += c[idx] < 0 ? " - " : " + ";
    }
    out += latex ? latex_magnitude(c[idx], idx) : plain_magnitude(c[idx], idx);
    out += variable(idx, latex);
  }
  return out;
}

}  // namespace

std::string render_plain(const Polynomial& p) { return render(p, false); }

std::string render_latex(const Polynomial& p) { return render(p, true); }

std::vector<std::string> coefficient_strings(const Polynomial& p) {
  std::vector<std::string> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(rational_str(c));
  return out;
}

Polynomial polynomial_from_strings(const std::vector<std::string>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& s : coeffs) c.push_back(parse_rational(s));
  return Polynomial(std::move(c));
}

}  // namespace fiboper
