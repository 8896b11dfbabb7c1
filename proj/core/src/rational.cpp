#include "fiboper/rational.hpp"

#include <cctype>

#include "fiboper/errors.hpp"

namespace fiboper {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw DomainError("malformed rational '" + std::string(text) + "' (expected p or p/q)");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) {
    throw DomainError("zero denominator in rational '" + std::string(text) + "'");
  }
  Rational r(n, d);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

std::string rational_latex(const Rational& r) {
  if (is_integer(r)) return r.get_num().get_str();
  std::string sign = r < 0 ? "-" : "";
  Rational a = abs(r);
  return sign + "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace fiboper
