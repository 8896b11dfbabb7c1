#include "fiboper/families.hpp"

#include <algorithm>

#include "fiboper/errors.hpp"

namespace fiboper {

namespace {

// Ordinary generalized binomial C(x, m) = x(x-1)...(x-m+1)/m! over rationals.
Rational generalized_binomial(const Rational& x, std::size_t m) {
  Rational num(1);
  Integer mfact(1);
  for (std::size_t j = 0; j < m; ++j) {
    num *= x - Rational(static_cast<unsigned long>(j));
    mfact *= static_cast<unsigned long>(j + 1);
  }
  return num / Rational(mfact);
}

Integer ordinary_binomial(std::size_t n, std::size_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// Indicator of P from Q = f_derivative * P: coefficients shifted down one.
OperatorSeries shift_down(const OperatorSeries& q) {
  const auto& c = q.coefficients();
  std::vector<Rational> p(c.begin() + 1, c.end());
  return OperatorSeries(q.sequence(), std::move(p), q.trunc() - 1);
}

void validate_sequence(const PolySequence& seq) {
  const auto& scheme = seq.scheme();
  const auto& q = scheme.delta();
  const auto& psi = scheme.sequence();
  const bool basic = seq.kind() == SequenceKind::Basic;
  const Polynomial& p0 = seq[0];
  if (basic ? !(p0 == Polynomial::one()) : (p0.degree() != std::optional<std::size_t>(0))) {
    throw std::logic_error("sequence '" + scheme.label() + "': bad p_0");
  }
  for (std::size_t n = 1; n <= seq.max_index(); ++n) {
    if (seq[n].degree() != std::optional<std::size_t>(n)) {
      throw std::logic_error("sequence '" + scheme.label() + "': deg p_" + std::to_string(n) +
                             " != " + std::to_string(n));
    }
    if (basic && seq[n](Rational(0)) != 0) {
      throw std::logic_error("sequence '" + scheme.label() + "': p_n(0) != 0 at n=" +
                             std::to_string(n));
    }
    if (!(q.apply(seq[n]) == Rational(psi.value(n)) * seq[n - 1])) {
      throw std::logic_error("sequence '" + scheme.label() + "': Q p_n != F_n p_{n-1} at n=" +
                             std::to_string(n));
    }
  }
}

}  // namespace

ShefferScheme::ShefferScheme(OperatorSeries q, OperatorSeries s, std::string label)
    : q_(std::move(q)), s_(std::move(s)), label_(std::move(label)) {
  if (!(q_.sequence() == s_.sequence())) {
    throw DomainError("scheme '" + label_ + "': mixed psi sequences");
  }
  if (!q_.is_delta()) {
    throw DomainError("scheme '" + label_ + "': Q indicator fails the delta criterion");
  }
  if (!s_.is_invertible()) {
    throw NotInvertibleError("scheme '" + label_ + "': S has zero constant term");
  }
}

ShefferScheme ShefferScheme::basic(OperatorSeries q, std::string label) {
  OperatorSeries s = OperatorSeries::identity(q.sequence(), q.trunc());
  return ShefferScheme(std::move(q), std::move(s), std::move(label));
}

std::size_t ShefferScheme::trunc() const { return std::min(q_.trunc(), s_.trunc()); }

bool ShefferScheme::is_basic() const {
  if (s_.coefficient(0) != 1) return false;
  for (std::size_t k = 1; k <= s_.trunc(); ++k) {
    if (s_.coefficient(k) != 0) return false;
  }
  return true;
}

PolySequence::PolySequence(ShefferScheme scheme, SequenceKind kind, std::vector<Polynomial> polys)
    : scheme_(std::move(scheme)), kind_(kind), polys_(std::move(polys)) {
  if (polys_.empty()) throw DomainError("empty polynomial sequence");
}

PolySequence basic_sequence(const ShefferScheme& scheme, std::size_t n_max) {
  const auto& psi = scheme.sequence();
  OperatorSeries qp_inv = scheme.delta().pincherle().inverse();
  std::vector<Polynomial> polys;
  polys.reserve(n_max + 1);
  polys.push_back(Polynomial::one());
  for (std::size_t n = 1; n <= n_max; ++n) {
    Polynomial t = qp_inv.apply(polys.back());
    polys.push_back(make_ratio(psi.value(n), Integer(static_cast<unsigned long>(n))) *
                    xhat(psi, t));
  }
  PolySequence out(ShefferScheme::basic(scheme.delta(), scheme.label()), SequenceKind::Basic,
                   std::move(polys));
  validate_sequence(out);
  return out;
}

PolySequence basic_via_lagrange(const ShefferScheme& scheme, std::size_t n_max, int variant) {
  if (variant < 1 || variant > 4) {
    throw DomainError("lagrange variant must be 1..4");
  }
  if (variant == 4) return basic_sequence(scheme, n_max);

  const auto& psi = scheme.sequence();
  const OperatorSeries& q = scheme.delta();
  OperatorSeries p_inv = shift_down(q).inverse();
  OperatorSeries qp = q.pincherle();
  std::vector<Polynomial> polys;
  polys.reserve(n_max + 1);
  polys.push_back(Polynomial::one());
  for (std::size_t n = 1; n <= n_max; ++n) {
    Rational fn_over_n =
        make_ratio(psi.value(n), Integer(static_cast<unsigned long>(n)));
    Polynomial xn = Polynomial::monomial(n);
    Polynomial xn1 = Polynomial::monomial(n - 1);
    switch (variant) {
      case 1:
        polys.push_back((qp * p_inv.power(n + 1)).apply(xn));
        break;
      case 2: {
        OperatorSeries pn = p_inv.power(n);
        polys.push_back(pn.apply(xn) - fn_over_n * pn.pincherle().apply(xn1));
        break;
      }
      case 3:
        polys.push_back(fn_over_n * xhat(psi, p_inv.power(n).apply(xn1)));
        break;
    }
  }
  PolySequence out(ShefferScheme::basic(q, scheme.label()), SequenceKind::Basic,
                   std::move(polys));
  validate_sequence(out);
  return out;
}

PolySequence transfer(const PolySequence& from, const ShefferScheme& to, int formula) {
  if (formula != 1 && formula != 2) {
    throw DomainError("transfer formula must be 1 or 2");
  }
  if (from.kind() != SequenceKind::Basic) {
    throw DomainError("transfer source must be a basic sequence");
  }
  const auto& psi = to.sequence();
  const OperatorSeries& r_ind = from.scheme().delta();
  const OperatorSeries& q_ind = to.delta();
  OperatorSeries source_factor = shift_down(r_ind);  // P
  OperatorSeries target_factor = shift_down(q_ind);  // S
  std::vector<Polynomial> polys;
  polys.reserve(from.max_index() + 1);
  polys.push_back(Polynomial::one());
  if (formula == 2) {
    OperatorSeries step = source_factor * target_factor.inverse();
    for (std::size_t n = 1; n <= from.max_index(); ++n) {
      if (from[n](Rational(0)) != 0) {
        throw DomainError("transfer source r_n has nonzero constant term at n=" +
                          std::to_string(n));
      }
      polys.push_back(xhat(psi, step.power(n).apply(xhat_inverse(psi, from[n]))));
    }
  } else {
    OperatorSeries prefix = q_ind.pincherle() * r_ind.pincherle().inverse();
    OperatorSeries sf_inv = target_factor.inverse();
    for (std::size_t n = 1; n <= from.max_index(); ++n) {
      OperatorSeries op = prefix * sf_inv.power(n + 1) * source_factor.power(n + 1);
      polys.push_back(op.apply(from[n]));
    }
  }
  PolySequence out(ShefferScheme::basic(q_ind, to.label()), SequenceKind::Basic,
                   std::move(polys));
  validate_sequence(out);
  return out;
}

PolySequence sheffer_sequence(const ShefferScheme& scheme, std::size_t n_max) {
  OperatorSeries s_inv = scheme.invertible().inverse();
  PolySequence base = basic_sequence(scheme, n_max);
  std::vector<Polynomial> polys;
  polys.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) polys.push_back(s_inv.apply(base[n]));
  PolySequence out(scheme, SequenceKind::Sheffer, std::move(polys));
  validate_sequence(out);
  return out;
}

PolySequence sheffer_via_recurrence(const ShefferScheme& scheme, std::size_t n_max) {
  const auto& psi = scheme.sequence();
  const OperatorSeries& s = scheme.invertible();
  OperatorSeries s_ratio = s.pincherle() * s.inverse();  // S'/S
  OperatorSeries qp_inv = scheme.delta().pincherle().inverse();
  std::vector<Polynomial> polys;
  polys.reserve(n_max + 1);
  polys.push_back(s.inverse().apply(Polynomial::one()));
  for (std::size_t n = 0; n < n_max; ++n) {
    Polynomial t = qp_inv.apply(polys.back());
    Polynomial next = xhat(psi, t) - s_ratio.apply(t);
    polys.push_back(make_ratio(psi.value(n + 1), Integer(static_cast<unsigned long>(n + 1))) *
                    next);
  }
  PolySequence out(scheme, SequenceKind::Sheffer, std::move(polys));
  validate_sequence(out);
  return out;
}

Polynomial laguerre_basic_closed_form(const PsiSequence& seq, std::size_t n) {
  if (n == 0) return Polynomial::one();
  std::vector<Rational> c(n + 1, Rational(0));
  Rational fn_over_n = make_ratio(seq.value(n), Integer(static_cast<unsigned long>(n)));
  for (std::size_t k = 1; k <= n; ++k) {
    Rational term = fn_over_n * Rational(ordinary_binomial(n, k)) *
                    Rational(seq.falling_factorial(n - 1, n - k)) *
                    make_ratio(Integer(static_cast<unsigned long>(k)), seq.value(k));
    c[k] = (k % 2 == 0) ? term : -term;
  }
  return Polynomial(std::move(c));
}

Polynomial hermite_closed_form(const PsiSequence& seq, const Rational& a, std::size_t n) {
  std::vector<Rational> c(n + 1, Rational(0));
  Rational pw(1);  // (-a/2)^k
  for (std::size_t k = 0; 2 * k <= n; ++k) {
    c[n - 2 * k] = pw / Rational(seq.factorial(k)) * Rational(seq.falling_factorial(n, 2 * k));
    pw *= -a / 2;
  }
  return Polynomial(std::move(c));
}

Polynomial laguerre_alpha_closed_form(const PsiSequence& seq, const Rational& alpha,
                                      std::size_t n) {
  // alpha = -1 is the basic family; the generating formula carries the
  // "alpha != -1" caveat, so route it explicitly.
  if (alpha == -1) return laguerre_basic_closed_form(seq, n);
  std::vector<Rational> c(n + 1, Rational(0));
  for (std::size_t k = 0; k <= n; ++k) {
    Rational term = make_ratio(seq.factorial(n), seq.factorial(k)) *
                    generalized_binomial(alpha + Rational(static_cast<unsigned long>(n)), n - k);
    c[k] = (k % 2 == 0) ? term : -term;
  }
  return Polynomial(std::move(c));
}

Polynomial bernoulli_closed_form(const PsiSequence& seq, std::size_t n) {
  std::vector<Rational> c(n + 1, Rational(0));
  for (std::size_t k = 0; k <= n; ++k) {
    c[n - k] = make_ratio(seq.binomial(n, k), seq.value(k + 1));
  }
  return Polynomial(std::move(c));
}

std::vector<Rational> first_expansion(const OperatorSeries& T, const PolySequence& basis) {
  if (basis.kind() != SequenceKind::Basic) {
    throw DomainError("first expansion needs a basic sequence");
  }
  std::vector<Rational> a;
  a.reserve(basis.max_index() + 1);
  for (std::size_t n = 0; n <= basis.max_index(); ++n) {
    a.push_back(T.apply(basis[n])(Rational(0)));
  }
  return a;
}

OperatorSeries expansion_series(const std::vector<Rational>& a, const OperatorSeries& q) {
  const auto& psi = q.sequence();
  OperatorSeries acc = OperatorSeries::zero(psi, q.trunc());
  OperatorSeries qpow = OperatorSeries::identity(psi, q.trunc());
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (n > 0) qpow = qpow * q;
    acc += qpow * (a[n] / Rational(psi.factorial(n)));
  }
  return acc;
}

OperatorSeries sheffer_zero_expansion(const ShefferScheme& scheme, std::size_t n_max) {
  PolySequence s_seq = sheffer_sequence(scheme, n_max);
  std::vector<Rational> at_zero;
  at_zero.reserve(n_max + 1);
  for (std::size_t k = 0; k <= n_max; ++k) at_zero.push_back(s_seq[k](Rational(0)));
  OperatorSeries built = expansion_series(at_zero, scheme.delta());
  std::size_t order = std::min(n_max, scheme.trunc());
  if (!built.truncated(order).agrees_with(scheme.invertible().inverse().truncated(order), order)) {
    throw std::logic_error("scheme '" + scheme.label() +
                           "': sum s_k(0)/F_k! Q^k does not reproduce S^{-1}");
  }
  return built.truncated(order);
}

bool check_binomial_type(const PolySequence& seq, const Rational& y) {
  const auto& psi = seq.scheme().sequence();
  for (std::size_t n = 0; n <= seq.max_index(); ++n) {
    Polynomial lhs = translate(psi, seq[n], y);
    Polynomial rhs;
    for (std::size_t k = 0; k <= n; ++k) {
      rhs += (Rational(psi.binomial(n, k)) * seq[n - k](y)) * seq[k];
    }
    if (!(lhs == rhs)) return false;
  }
  return true;
}

bool check_sheffer_binomial(const ShefferScheme& scheme, const Rational& y, std::size_t n_max) {
  const auto& psi = scheme.sequence();
  PolySequence s_seq = sheffer_sequence(scheme, n_max);
  PolySequence q_seq = basic_sequence(scheme, n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    Polynomial lhs = translate(psi, s_seq[n], y);
    Polynomial rhs;
    Polynomial corollary;
    for (std::size_t k = 0; k <= n; ++k) {
      Rational b(psi.binomial(n, k));
      rhs += (b * q_seq[n - k](y)) * s_seq[k];
      corollary += (b * s_seq[k](Rational(0))) * q_seq[n - k];
    }
    if (!(lhs == rhs)) return false;
    if (!(corollary == s_seq[n])) return false;
  }
  return true;
}

bool gf_check(const ShefferScheme& scheme, std::size_t order) {
  const auto& psi = scheme.sequence();
  if (scheme.trunc() < order) {
    throw TruncationError("gf_check to order " + std::to_string(order) +
                          " needs truncation >= that order");
  }
  OperatorSeries q_inv = scheme.delta().compositional_inverse();
  OperatorSeries w = scheme.invertible().compose(q_inv).inverse();
  PolySequence s_seq = sheffer_sequence(scheme, order);

  // Coefficient of z^k in exp_F{x q^{-1}(z)} is sum_m [z^k](q^{-1})^m / F_m! x^m.
  std::vector<Polynomial> exp_coeff(order + 1);
  OperatorSeries qpow = OperatorSeries::identity(psi, q_inv.trunc());
  for (std::size_t m = 0; m <= order; ++m) {
    if (m > 0) qpow = qpow * q_inv;
    Rational inv_fact = make_ratio(Integer(1), psi.factorial(m));
    for (std::size_t k = m; k <= order; ++k) {
      exp_coeff[k] += Polynomial::monomial(m, qpow.coefficient(k) * inv_fact);
    }
  }
  for (std::size_t k = 0; k <= order; ++k) {
    Polynomial total;
    for (std::size_t j = 0; j <= k; ++j) {
      total += w.coefficient(j) * exp_coeff[k - j];
    }
    if (!(total == make_ratio(Integer(1), psi.factorial(k)) * s_seq[k])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// FamilySpec

namespace {

std::vector<std::string> split_colons(std::string_view text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(':', start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(text.substr(start));
      return parts;
    }
    parts.emplace_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  auto parts = split_colons(text);
  auto fail = [&] {
    throw DomainError("unknown family '" + std::string(text) +
                      "' (expected basic:{delta|forward|backward|abel:a|laguerre} or "
                      "sheffer:{hermite:a|laguerre:alpha|bernoulli})");
  };
  if (parts.size() < 2) fail();
  FamilySpec spec{};
  bool wants_param = false;
  if (parts[0] == "basic") {
    if (parts[1] == "delta") spec.id = Id::BasicDelta;
    else if (parts[1] == "forward") spec.id = Id::BasicForward;
    else if (parts[1] == "backward") spec.id = Id::BasicBackward;
    else if (parts[1] == "abel") { spec.id = Id::BasicAbel; wants_param = true; }
    else if (parts[1] == "laguerre") spec.id = Id::BasicLaguerre;
    else fail();
  } else if (parts[0] == "sheffer") {
    if (parts[1] == "hermite") { spec.id = Id::ShefferHermite; wants_param = true; }
    else if (parts[1] == "laguerre") { spec.id = Id::ShefferLaguerre; wants_param = true; }
    else if (parts[1] == "bernoulli") spec.id = Id::ShefferBernoulli;
    else fail();
  } else {
    fail();
  }
  if (wants_param) {
    if (parts.size() != 3) fail();
    spec.param = parse_rational(parts[2]);
  } else if (parts.size() != 2) {
    fail();
  }
  return spec;
}

std::string FamilySpec::base_text() const {
  switch (id) {
    case Id::BasicDelta: return "basic:delta";
    case Id::BasicForward: return "basic:forward";
    case Id::BasicBackward: return "basic:backward";
    case Id::BasicAbel: return "basic:abel";
    case Id::BasicLaguerre: return "basic:laguerre";
    case Id::ShefferHermite: return "sheffer:hermite";
    case Id::ShefferLaguerre: return "sheffer:laguerre";
    case Id::ShefferBernoulli: return "sheffer:bernoulli";
  }
  return "?";
}

std::string FamilySpec::text() const {
  std::string base = base_text();
  if (param) base += ":" + rational_str(*param);
  return base;
}

std::string FamilySpec::symbol() const {
  switch (id) {
    case Id::BasicDelta:
    case Id::BasicForward:
    case Id::BasicBackward: return "q";
    case Id::BasicAbel: return "A";
    case Id::BasicLaguerre: return "L";
    case Id::ShefferHermite: return "H";
    case Id::ShefferLaguerre: return "L^(" + rational_str(*param) + ")";
    case Id::ShefferBernoulli: return "B";
  }
  return "p";
}

bool FamilySpec::is_sheffer() const {
  return id == Id::ShefferHermite || id == Id::ShefferLaguerre || id == Id::ShefferBernoulli;
}

ShefferScheme FamilySpec::scheme(const PsiSequence& seq, std::size_t trunc) const {
  switch (id) {
    case Id::BasicDelta:
      return ShefferScheme::basic(f_derivative_op(seq, trunc), text());
    case Id::BasicForward:
      return ShefferScheme::basic(forward_difference_op(seq, trunc), text());
    case Id::BasicBackward:
      return ShefferScheme::basic(backward_difference_op(seq, trunc), text());
    case Id::BasicAbel:
      return ShefferScheme::basic(abel_op(seq, *param, trunc), text());
    case Id::BasicLaguerre:
      return ShefferScheme::basic(laguerre_op(seq, trunc), text());
    case Id::ShefferHermite:
      return ShefferScheme(f_derivative_op(seq, trunc), hermite_s_op(seq, *param, trunc), text());
    case Id::ShefferLaguerre:
      return ShefferScheme(laguerre_op(seq, trunc), laguerre_s_op(seq, *param, trunc), text());
    case Id::ShefferBernoulli:
      return ShefferScheme(f_derivative_op(seq, trunc), bernoulli_s_op(seq, trunc), text());
  }
  throw DomainError("unreachable family id");
}

PolySequence FamilySpec::sequence(const PsiSequence& seq, std::size_t n_max,
                                  std::size_t trunc) const {
  ShefferScheme sch = scheme(seq, trunc);
  return is_sheffer() ? sheffer_sequence(sch, n_max) : basic_sequence(sch, n_max);
}

}  // namespace fiboper
