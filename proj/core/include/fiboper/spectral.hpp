#pragma once

#include <cstddef>
#include <vector>

#include "fiboper/families.hpp"
#include "fiboper/polynomial.hpp"

namespace fiboper {

/// Coefficient table of the number operator
/// A = sum_{k>=1} (u_k + v_k xhat)/F_{k-1}! Q^k with A s_n = n s_n.
/// Index i holds the k = i+1 entry.
struct SpectralCoeffs {
  std::vector<Rational> u;
  std::vector<Rational> v;

  std::size_t order() const { return u.size(); }
};

/// Umbral operator for the basis {s_n}: expands f in the basis by triangular
/// back-substitution and replaces s_n by x^n.
Polynomial umbral_w(const Polynomial& f, const PolySequence& basis);

/// Natural inner product (f, g) = [(Wf)(Q) S g]_{x=0}. Requires the scheme
/// truncation to cover deg f + deg g (TruncationError otherwise).
Rational inner_product(const Polynomial& f, const Polynomial& g, const ShefferScheme& scheme);

/// Gram matrix G[n][k] = (s_n, s_k); diag(F_0!, ..., F_N!) for a valid scheme.
std::vector<std::vector<Rational>> gram_matrix(const ShefferScheme& scheme, std::size_t n_max);

/// Solves the defining eigen-equations A s_n = n s_n for (u_n, v_n)
/// sequentially; the unknowns at step n sit in the two lowest-degree
/// coefficient equations, every remaining coefficient equation is asserted.
/// Throws InconsistentAnsatzError when a residual equation fails.
SpectralCoeffs number_operator(const ShefferScheme& scheme, std::size_t n_max);

/// Same solver over an externally supplied Sheffer basis (the scheme overload
/// builds the sequence first and delegates here).
SpectralCoeffs number_operator(const PolySequence& sheffer_basis);

/// The closed u_k/v_k formulas from the printed reference, under the fixed
/// reading (log S)' = S' S^{-1} and v_k = [d/dx q_k(x)]_{x=0}:
///   u_k = -[(log S)' xhat^{-1} q_k(x)]_{x=0}.
/// Diagnostic only; known to disagree with the eigen-solved coefficients for
/// S != identity.
SpectralCoeffs reference_formula_coeffs(const ShefferScheme& scheme, std::size_t n_max);

/// Side-by-side comparison of the solver and the closed reference formulas.
struct SpectralReport {
  SpectralCoeffs solver;
  SpectralCoeffs reference;
  std::vector<bool> u_match;
  std::vector<bool> v_match;

  bool all_match() const;
};

SpectralReport spectral_report(const ShefferScheme& scheme, std::size_t n_max);

/// Applies the assembled A to each s_n and verifies n * s_n exactly, plus
/// self-adjointness (A s_n, s_k) = (s_n, A s_k) through the inner product.
bool eigencheck(const ShefferScheme& scheme, const SpectralCoeffs& coeffs, std::size_t n_max);

}  // namespace fiboper
