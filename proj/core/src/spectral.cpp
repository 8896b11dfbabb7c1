#include "fiboper/spectral.hpp"

#include <sstream>

#include "fiboper/errors.hpp"

namespace fiboper {

namespace {

Rational leading(const Polynomial& p) {
  return p.coefficient(p.degree().value());
}

// (Wf)(Q) S g evaluated at 0, with the basis supplied by the caller.
Rational inner_product_with_basis(const Polynomial& f, const Polynomial& g,
                                  const ShefferScheme& scheme, const PolySequence& basis) {
  if (f.is_zero() || g.is_zero()) return Rational(0);
  std::size_t need = *f.degree() + *g.degree();
  if (scheme.trunc() < need) {
    throw TruncationError("inner product of degrees " + std::to_string(*f.degree()) + "+" +
                          std::to_string(*g.degree()) + " needs truncation >= " +
                          std::to_string(need));
  }
  Polynomial wf = umbral_w(f, basis);
  Polynomial sg = scheme.invertible().apply(g);
  OperatorSeries op = OperatorSeries::zero(scheme.sequence(), scheme.trunc());
  OperatorSeries qpow = OperatorSeries::identity(scheme.sequence(), scheme.delta().trunc());
  for (std::size_t n = 0; n < wf.coefficients().size(); ++n) {
    if (n > 0) qpow = qpow * scheme.delta();
    op += qpow * wf.coefficient(n);
  }
  return op.apply(sg)(Rational(0));
}

}  // namespace

Polynomial umbral_w(const Polynomial& f, const PolySequence& basis) {
  if (f.is_zero()) return Polynomial();
  if (*f.degree() > basis.max_index()) {
    throw DomainError("umbral operator needs the basis built to deg f");
  }
  Polynomial remaining = f;
  Polynomial out;
  while (!remaining.is_zero()) {
    std::size_t n = *remaining.degree();
    if (basis[n].degree() != n) {
      throw DomainError("umbral operator needs a degree-graded basis");
    }
    Rational c = leading(remaining) / leading(basis[n]);
    out += Polynomial::monomial(n, c);
    remaining -= c * basis[n];
  }
  return out;
}

Rational inner_product(const Polynomial& f, const Polynomial& g, const ShefferScheme& scheme) {
  if (f.is_zero() || g.is_zero()) return Rational(0);
  PolySequence basis = sheffer_sequence(scheme, *f.degree());
  return inner_product_with_basis(f, g, scheme, basis);
}

std::vector<std::vector<Rational>> gram_matrix(const ShefferScheme& scheme, std::size_t n_max) {
  PolySequence basis = sheffer_sequence(scheme, n_max);
  std::vector<std::vector<Rational>> g(n_max + 1, std::vector<Rational>(n_max + 1, Rational(0)));
  for (std::size_t i = 0; i <= n_max; ++i) {
    for (std::size_t j = 0; j <= n_max; ++j) {
      g[i][j] = inner_product_with_basis(basis[i], basis[j], scheme, basis);
    }
  }
  return g;
}

SpectralCoeffs number_operator(const PolySequence& sheffer_basis) {
  const ShefferScheme& scheme = sheffer_basis.scheme();
  const PsiSequence& psi = scheme.sequence();
  std::size_t n_max = sheffer_basis.max_index();
  const Rational s0 = sheffer_basis[0].coefficient(0);
  if (s0 == 0) {
    throw DomainError("number operator needs s_0 = const != 0");
  }

  SpectralCoeffs out;
  out.u.reserve(n_max);
  out.v.reserve(n_max);

  for (std::size_t n = 1; n <= n_max; ++n) {
    // residual = n s_n - sum_{k<n} w_{n,k} (u_k s_{n-k} + v_k xhat s_{n-k}),
    // with w_{n,k} = (F_n!/F_{n-k}!)/F_{k-1}!; the k = n term carries the
    // unknowns u_n, v_n in the x^0 and x^1 coefficients only.
    Polynomial residual = Rational(static_cast<unsigned long>(n)) * sheffer_basis[n];
    for (std::size_t k = 1; k < n; ++k) {
      Rational w = make_ratio(psi.factorial(n), psi.factorial(n - k) * psi.factorial(k - 1));
      residual -= (w * out.u[k - 1]) * sheffer_basis[n - k];
      residual -= (w * out.v[k - 1]) * xhat(psi, sheffer_basis[n - k]);
    }
    Rational w_n = make_ratio(psi.factorial(n), psi.factorial(n - 1));  // = F_n
    Rational u_n = residual.coefficient(0) / (w_n * s0);
    Rational v_n = residual.coefficient(1) / (w_n * s0);
    residual -= Polynomial({u_n * w_n * s0, v_n * w_n * s0});
    if (!residual.is_zero()) {
      std::ostringstream os;
      os << residual;
      throw InconsistentAnsatzError(scheme.label(), n, os.str());
    }
    out.u.push_back(u_n);
    out.v.push_back(v_n);
  }
  return out;
}

SpectralCoeffs number_operator(const ShefferScheme& scheme, std::size_t n_max) {
  return number_operator(sheffer_sequence(scheme, n_max));
}

SpectralCoeffs reference_formula_coeffs(const ShefferScheme& scheme, std::size_t n_max) {
  const PsiSequence& psi = scheme.sequence();
  PolySequence basis = basic_sequence(scheme, n_max);
  const OperatorSeries& s = scheme.invertible();
  OperatorSeries log_s_prime = s.pincherle() * s.inverse();
  SpectralCoeffs out;
  out.u.reserve(n_max);
  out.v.reserve(n_max);
  for (std::size_t k = 1; k <= n_max; ++k) {
    Polynomial t = log_s_prime.apply(xhat_inverse(psi, basis[k]));
    out.u.push_back(-t(Rational(0)));
    out.v.push_back(basis[k].coefficient(1));  // [d/dx q_k]_{x=0}
  }
  return out;
}

bool SpectralReport::all_match() const {
  for (bool b : u_match) {
    if (!b) return false;
  }
  for (bool b : v_match) {
    if (!b) return false;
  }
  return true;
}

SpectralReport spectral_report(const ShefferScheme& scheme, std::size_t n_max) {
  SpectralReport report;
  report.solver = number_operator(scheme, n_max);
  report.reference = reference_formula_coeffs(scheme, n_max);
  report.u_match.resize(n_max);
  report.v_match.resize(n_max);
  for (std::size_t i = 0; i < n_max; ++i) {
    report.u_match[i] = report.solver.u[i] == report.reference.u[i];
    report.v_match[i] = report.solver.v[i] == report.reference.v[i];
  }
  return report;
}

bool eigencheck(const ShefferScheme& scheme, const SpectralCoeffs& coeffs, std::size_t n_max) {
  const PsiSequence& psi = scheme.sequence();
  PolySequence basis = sheffer_sequence(scheme, n_max);

  std::vector<Polynomial> a_applied(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    Polynomial acc;
    Polynomial qk = basis[n];
    for (std::size_t k = 1; k <= n && k <= coeffs.order(); ++k) {
      qk = scheme.delta().apply(qk);
      Rational inv_fact = make_ratio(Integer(1), psi.factorial(k - 1));
      acc += (coeffs.u[k - 1] * inv_fact) * qk;
      acc += (coeffs.v[k - 1] * inv_fact) * xhat(psi, qk);
    }
    if (!(acc == Rational(static_cast<unsigned long>(n)) * basis[n])) return false;
    a_applied[n] = acc;
  }
  // Self-adjointness through the inner product.
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (std::size_t k = 0; k <= n_max; ++k) {
      Rational lhs =
          inner_product_with_basis(a_applied[n], basis[k], scheme, basis);
      Rational rhs =
          inner_product_with_basis(basis[n], a_applied[k], scheme, basis);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace fiboper
