#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fiboper/polynomial.hpp"
#include "fiboper/series.hpp"

namespace fiboper {

/// A delta indicator Q together with an invertible indicator S. Basic
/// sequences are the S = identity special case. Construction validates the
/// delta criterion on q and invertibility of s.
class ShefferScheme {
 public:
  ShefferScheme(OperatorSeries q, OperatorSeries s, std::string label);
  static ShefferScheme basic(OperatorSeries q, std::string label);

  const OperatorSeries& delta() const { return q_; }
  const OperatorSeries& invertible() const { return s_; }
  const std::string& label() const { return label_; }
  const PsiSequence& sequence() const { return q_.sequence(); }
  std::size_t trunc() const;
  bool is_basic() const;

 private:
  OperatorSeries q_;
  OperatorSeries s_;
  std::string label_;
};

enum class SequenceKind { Basic, Sheffer };

/// Degree-graded polynomial sequence attached to a scheme. Plain value type:
/// the construction routines validate the basic/Sheffer axioms, the container
/// itself does not.
class PolySequence {
 public:
  PolySequence(ShefferScheme scheme, SequenceKind kind, std::vector<Polynomial> polys);

  std::size_t max_index() const { return polys_.size() - 1; }
  const Polynomial& operator[](std::size_t n) const { return polys_.at(n); }
  const std::vector<Polynomial>& polynomials() const { return polys_; }
  const ShefferScheme& scheme() const { return scheme_; }
  SequenceKind kind() const { return kind_; }

 private:
  ShefferScheme scheme_;
  SequenceKind kind_;
  std::vector<Polynomial> polys_;
};

/// Basic sequence of the scheme's delta operator via the Rodrigues recursion
/// q_n = (F_n/n) xhat (Q')^{-1} q_{n-1}. Validates the basic axioms
/// (q_0 = 1, q_n(0) = 0, Q q_n = F_n q_{n-1}, deg q_n = n) on the result.
PolySequence basic_sequence(const ShefferScheme& scheme, std::size_t n_max);

/// Same sequence through one of the four Lagrange/Rodrigues routes
/// (variant 1..4, with Q = f_derivative * P):
///   1: q_n = Q' P^{-n-1} x^n
///   2: q_n = P^{-n} x^n - (F_n/n) (P^{-n})' x^{n-1}
///   3: q_n = (F_n/n) xhat P^{-n} x^{n-1}
///   4: the Rodrigues recursion
PolySequence basic_via_lagrange(const ShefferScheme& scheme, std::size_t n_max, int variant);

/// Re-expresses the basic sequence of one delta operator as that of another:
///   formula 2: q_n = xhat (P S^{-1})^n xhat^{-1} r_n   (n >= 1)
///   formula 1: q_n = Q' (R')^{-1} S^{-n-1} P^{n+1} r_n
/// with source R = f_derivative * P, target Q = f_derivative * S.
PolySequence transfer(const PolySequence& from, const ShefferScheme& to, int formula = 2);

/// Sheffer sequence s_n = S^{-1} q_n; validates the Sheffer axioms.
PolySequence sheffer_sequence(const ShefferScheme& scheme, std::size_t n_max);

/// Same sequence via the recurrence
/// s_{n+1} = (F_{n+1}/(n+1)) [xhat - S'/S] (Q')^{-1} s_n.
PolySequence sheffer_via_recurrence(const ShefferScheme& scheme, std::size_t n_max);

// Closed coefficient formulas, independent of the operator machinery.
Polynomial laguerre_basic_closed_form(const PsiSequence& seq, std::size_t n);
Polynomial hermite_closed_form(const PsiSequence& seq, const Rational& a, std::size_t n);
Polynomial laguerre_alpha_closed_form(const PsiSequence& seq, const Rational& alpha, std::size_t n);
Polynomial bernoulli_closed_form(const PsiSequence& seq, std::size_t n);

/// Expansion coefficients a_n = [T q_n(x)]_{x=0} of a shift-invariant
/// operator over the basic sequence of its scheme's delta operator.
std::vector<Rational> first_expansion(const OperatorSeries& T, const PolySequence& basis);

/// Rebuilds the indicator sum_n a_n / F_n! * q^n from expansion coefficients.
OperatorSeries expansion_series(const std::vector<Rational>& a, const OperatorSeries& q);

/// Builds sum_k s_k(0)/F_k! * Q^k and checks it equals S^{-1} up to the
/// scheme truncation (throws std::logic_error otherwise -- that would mean a
/// broken family construction).
OperatorSeries sheffer_zero_expansion(const ShefferScheme& scheme, std::size_t n_max);

/// Binomial-type identity p_n(x +_F y) = sum_k binom(n,k)_F p_k(x) p_{n-k}(y)
/// for every n in the sequence, at a fixed y.
bool check_binomial_type(const PolySequence& seq, const Rational& y);

/// Sheffer binomial identity s_n(x +_F y) = sum_k binom(n,k)_F s_k(x) q_{n-k}(y),
/// plus the y-independent corollary s_n(x) = sum_k binom(n,k)_F s_k(0) q_{n-k}(x).
bool check_sheffer_binomial(const ShefferScheme& scheme, const Rational& y, std::size_t n_max);

/// Generating-function identity
///   sum_k p_k(x)/F_k! z^k = (s(q^{-1}(z)))^{-1} exp_F{x q^{-1}(z)}
/// checked coefficient-by-coefficient in z up to the given order (the S =
/// identity case degenerates to the basic-sequence identity).
bool gf_check(const ShefferScheme& scheme, std::size_t order);

/// Command-line/table family naming: "basic:delta", "basic:forward",
/// "basic:backward", "basic:abel:<a>", "basic:laguerre",
/// "sheffer:hermite:<a>", "sheffer:laguerre:<alpha>", "sheffer:bernoulli".
struct FamilySpec {
  enum class Id {
    BasicDelta,
    BasicForward,
    BasicBackward,
    BasicAbel,
    BasicLaguerre,
    ShefferHermite,
    ShefferLaguerre,
    ShefferBernoulli,
  };

  Id id;
  std::optional<Rational> param;

  /// Parses the colon syntax above; rational parameters use "p/q".
  /// Throws DomainError on unknown families or malformed parameters.
  static FamilySpec parse(std::string_view text);

  std::string text() const;
  /// Family name without the parameter ("basic:abel" for "basic:abel:3/2").
  std::string base_text() const;
  /// Polynomial letter used in rendered tables (q, A, L, H, L^(a), B).
  std::string symbol() const;
  bool is_sheffer() const;

  ShefferScheme scheme(const PsiSequence& seq, std::size_t trunc) const;
  /// The sequence the family denotes (basic or Sheffer as appropriate).
  PolySequence sequence(const PsiSequence& seq, std::size_t n_max, std::size_t trunc) const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

}  // namespace fiboper
