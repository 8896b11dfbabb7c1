#pragma once

#include <cstddef>
#include <vector>

#include "fiboper/polynomial.hpp"
#include "fiboper/psi.hpp"
#include "fiboper/rational.hpp"

namespace fiboper {

/// A shift-invariant operator represented by its truncated indicator series
/// f(t) = sum_k c_k t^k: the operator is sum_k c_k * f_derivative^k. Terms of
/// degree > trunc are unknown, not zero, so binary operations truncate to the
/// smaller order and exact application to a polynomial requires
/// trunc >= degree.
///
/// Coefficients are stored plain (not divided by F_k!), which makes the
/// algebra product a literal Cauchy product; the divided form
/// a_k = c_k * F_k! is exposed as a view.
class OperatorSeries {
 public:
  /// coeffs are padded with zeros (or cut) to length trunc + 1.
  OperatorSeries(PsiSequence seq, std::vector<Rational> coeffs, std::size_t trunc);
  OperatorSeries(PsiSequence seq, std::vector<Rational> coeffs);

  static OperatorSeries zero(const PsiSequence& seq, std::size_t trunc);
  static OperatorSeries identity(const PsiSequence& seq, std::size_t trunc);

  std::size_t trunc() const { return coeffs_.size() - 1; }
  const PsiSequence& sequence() const { return seq_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t k) const;

  /// Divided-form coefficient a_k = c_k * F_k!.
  Rational divided_coefficient(std::size_t k) const;

  /// Delta criterion: constant term zero, linear term nonzero.
  bool is_delta() const;
  /// Invertibility criterion T1 != 0, i.e. nonzero constant term.
  bool is_invertible() const;
  bool is_zero() const;

  OperatorSeries truncated(std::size_t new_trunc) const;
  bool agrees_with(const OperatorSeries& other, std::size_t order) const;

  /// Exact action on a polynomial. Throws TruncationError when
  /// trunc < deg(p); at or beyond the degree the tail acts as zero, so the
  /// result is exact.
  Polynomial apply(const Polynomial& p) const;

  OperatorSeries operator-() const;
  OperatorSeries& operator+=(const OperatorSeries& rhs);
  OperatorSeries& operator-=(const OperatorSeries& rhs);
  OperatorSeries& operator*=(const Rational& s);

  friend OperatorSeries operator+(OperatorSeries a, const OperatorSeries& b) { return a += b; }
  friend OperatorSeries operator-(OperatorSeries a, const OperatorSeries& b) { return a -= b; }
  friend OperatorSeries operator*(const OperatorSeries& a, const OperatorSeries& b);
  friend OperatorSeries operator*(const Rational& s, OperatorSeries a) { return a *= s; }
  friend OperatorSeries operator*(OperatorSeries a, const Rational& s) { return a *= s; }

  /// Reciprocal with respect to the operator product. Throws
  /// NotInvertibleError when the constant term vanishes.
  OperatorSeries inverse() const;

  /// Graves-Pincherle derivative: d/dt on the indicator. Truncation order
  /// drops by one (floor 0).
  OperatorSeries pincherle() const;

  OperatorSeries power(std::size_t n) const;

  /// f(g(t)) truncated; throws DomainError unless g has zero constant term.
  OperatorSeries compose(const OperatorSeries& inner) const;

  /// Formal compositional inverse, solved order by order. Requires the delta
  /// invariants (DomainError otherwise); satisfies
  /// compose(*this, result) = t up to trunc.
  OperatorSeries compositional_inverse() const;

  friend bool operator==(const OperatorSeries& a, const OperatorSeries& b) {
    return a.seq_ == b.seq_ && a.coeffs_ == b.coeffs_;
  }

 private:
  PsiSequence seq_;
  std::vector<Rational> coeffs_;
};

/// exp_F of a series with zero constant term: sum_m u^m / F_m!.
/// Note the psi-factorial, not m!, in the denominator.
OperatorSeries exp_f(const OperatorSeries& u);

/// F-translation p(x +_F y) = sum_k y^k f_derivative^k p / F_k!. A formal
/// generalized shift; this is not evaluation at x + y.
Polynomial translate(const PsiSequence& seq, const Polynomial& p, const Rational& y);

// Named operators. Each returns the indicator at the requested truncation.
OperatorSeries f_derivative_op(const PsiSequence& seq, std::size_t trunc);            // t
OperatorSeries forward_difference_op(const PsiSequence& seq, std::size_t trunc);      // exp_F(t) - 1
OperatorSeries backward_difference_op(const PsiSequence& seq, std::size_t trunc);     // 1 - exp_F(-t)
OperatorSeries abel_op(const PsiSequence& seq, const Rational& a, std::size_t trunc); // t exp_F(a t)
OperatorSeries laguerre_op(const PsiSequence& seq, std::size_t trunc);                // t/(t - 1)
OperatorSeries translation_op(const PsiSequence& seq, const Rational& y, std::size_t trunc);  // exp_F(y t)
OperatorSeries hermite_s_op(const PsiSequence& seq, const Rational& a, std::size_t trunc);    // exp_F(a t^2 / 2)
OperatorSeries laguerre_s_op(const PsiSequence& seq, const Rational& alpha, std::size_t trunc);  // (1-t)^{-alpha-1}
OperatorSeries bernoulli_s_op(const PsiSequence& seq, std::size_t trunc);  // ((exp_F(t)-1)/t)^{-1}

}  // namespace fiboper
