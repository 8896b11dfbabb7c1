#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <vector>

#include "fiboper/psi.hpp"
#include "fiboper/rational.hpp"

namespace fiboper {

/// Dense univariate polynomial with exact rational coefficients, stored
/// ascending. Canonical form: no trailing zero coefficients; the zero
/// polynomial has an empty coefficient vector and no degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Rational constant);
  explicit Polynomial(std::vector<Rational> ascending_coeffs);
  Polynomial(std::initializer_list<Rational> ascending_coeffs);

  static Polynomial monomial(std::size_t degree, Rational coeff = Rational(1));
  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return Polynomial(Rational(1)); }

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const;

  Rational operator()(const Rational& x) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }
  friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// F-derivative: the linear extension of x^n -> F_n x^{n-1}. Drops the degree
/// of every nonconstant polynomial by exactly one.
Polynomial f_derivative(const PsiSequence& seq, const Polynomial& p);

/// Deformed multiplication operator: x^n -> ((n+1)/F_{n+1}) x^{n+1}.
/// Satisfies [f_derivative, xhat] = identity.
Polynomial xhat(const PsiSequence& seq, const Polynomial& p);

/// Inverse of xhat on its image: x^{n+1} -> (F_{n+1}/(n+1)) x^n.
/// Throws DomainError when p has a nonzero constant term.
Polynomial xhat_inverse(const PsiSequence& seq, const Polynomial& p);

/// Classical derivative d/dx.
Polynomial derivative(const Polynomial& p);

}  // namespace fiboper
