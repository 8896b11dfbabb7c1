#include "fiboper/polynomial.hpp"

#include <algorithm>

#include "fiboper/errors.hpp"

namespace fiboper {

Polynomial::Polynomial(Rational constant) : coeffs_{std::move(constant)} { normalize(); }

Polynomial::Polynomial(std::vector<Rational> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
  normalize();
}

Polynomial::Polynomial(std::initializer_list<Rational> ascending_coeffs)
    : coeffs_(ascending_coeffs) {
  normalize();
}

Polynomial Polynomial::monomial(std::size_t degree, Rational coeff) {
  std::vector<Rational> c(degree + 1, Rational(0));
  c[degree] = std::move(coeff);
  return Polynomial(std::move(c));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  normalize();
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  if (p.is_zero()) return os << "0";
  os << "[";
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (i) os << ", ";
    os << p.coeffs_[i].get_str();
  }
  return os << "]";
}

Polynomial f_derivative(const PsiSequence& seq, const Polynomial& p) {
  const auto& c = p.coefficients();
  if (c.size() <= 1) return Polynomial();
  std::vector<Rational> out(c.size() - 1, Rational(0));
  for (std::size_t i = 1; i < c.size(); ++i) {
    out[i - 1] = Rational(seq.value(i)) * c[i];
  }
  return Polynomial(std::move(out));
}

Polynomial xhat(const PsiSequence& seq, const Polynomial& p) {
  const auto& c = p.coefficients();
  if (c.empty()) return Polynomial();
  std::vector<Rational> out(c.size() + 1, Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i) {
    out[i + 1] = make_ratio(Integer(static_cast<unsigned long>(i + 1)), seq.value(i + 1)) * c[i];
  }
  return Polynomial(std::move(out));
}

Polynomial xhat_inverse(const PsiSequence& seq, const Polynomial& p) {
  const auto& c = p.coefficients();
  if (c.empty()) return Polynomial();
  if (c[0] != 0) {
    throw DomainError("xhat_inverse needs a zero constant term (constants are not in the image of xhat)");
  }
  std::vector<Rational> out(c.size() - 1, Rational(0));
  for (std::size_t i = 1; i < c.size(); ++i) {
    out[i - 1] = make_ratio(seq.value(i), Integer(static_cast<unsigned long>(i))) * c[i];
  }
  return Polynomial(std::move(out));
}

Polynomial derivative(const Polynomial& p) {
  const auto& c = p.coefficients();
  if (c.size() <= 1) return Polynomial();
  std::vector<Rational> out(c.size() - 1, Rational(0));
  for (std::size_t i = 1; i < c.size(); ++i) {
    out[i - 1] = Rational(static_cast<unsigned long>(i)) * c[i];
  }
  return Polynomial(std::move(out));
}

}  // namespace fiboper
