#include "fiboper/series.hpp"

#include <algorithm>

#include "fiboper/errors.hpp"

namespace fiboper {

namespace {

void require_same_sequence(const OperatorSeries& a, const OperatorSeries& b) {
  if (!(a.sequence() == b.sequence())) {
    throw DomainError("mixing operator series over different psi sequences");
  }
}

}  // namespace

OperatorSeries::OperatorSeries(PsiSequence seq, std::vector<Rational> coeffs, std::size_t trunc)
    : seq_(std::move(seq)), coeffs_(std::move(coeffs)) {
  coeffs_.resize(trunc + 1, Rational(0));
}

OperatorSeries::OperatorSeries(PsiSequence seq, std::vector<Rational> coeffs)
    : seq_(std::move(seq)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

OperatorSeries OperatorSeries::zero(const PsiSequence& seq, std::size_t trunc) {
  return OperatorSeries(seq, {}, trunc);
}

OperatorSeries OperatorSeries::identity(const PsiSequence& seq, std::size_t trunc) {
  return OperatorSeries(seq, {Rational(1)}, trunc);
}

Rational OperatorSeries::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational OperatorSeries::divided_coefficient(std::size_t k) const {
  return coefficient(k) * Rational(seq_.factorial(k));
}

bool OperatorSeries::is_delta() const {
  return coeffs_[0] == 0 && coeffs_.size() > 1 && coeffs_[1] != 0;
}

bool OperatorSeries::is_invertible() const { return coeffs_[0] != 0; }

bool OperatorSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

OperatorSeries OperatorSeries::truncated(std::size_t new_trunc) const {
  if (new_trunc > trunc()) {
    throw TruncationError("cannot extend a series from order " + std::to_string(trunc()) +
                          " to " + std::to_string(new_trunc) + " (higher terms are unknown)");
  }
  std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + new_trunc + 1);
  return OperatorSeries(seq_, std::move(c), new_trunc);
}

bool OperatorSeries::agrees_with(const OperatorSeries& other, std::size_t order) const {
  if (!(seq_ == other.seq_)) return false;
  if (order > trunc() || order > other.trunc()) return false;
  for (std::size_t k = 0; k <= order; ++k) {
    if (coeffs_[k] != other.coeffs_[k]) return false;
  }
  return true;
}

Polynomial OperatorSeries::apply(const Polynomial& p) const {
  auto deg = p.degree();
  if (deg && *deg > trunc()) {
    throw TruncationError("series truncated at order " + std::to_string(trunc()) +
                          " cannot act exactly on degree " + std::to_string(*deg));
  }
  Polynomial acc;
  Polynomial cur = p;
  for (std::size_t k = 0; k < coeffs_.size() && !cur.is_zero(); ++k) {
    if (coeffs_[k] != 0) acc += coeffs_[k] * cur;
    cur = f_derivative(seq_, cur);
  }
  return acc;
}

OperatorSeries OperatorSeries::operator-() const {
  OperatorSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

OperatorSeries& OperatorSeries::operator+=(const OperatorSeries& rhs) {
  require_same_sequence(*this, rhs);
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

OperatorSeries& OperatorSeries::operator-=(const OperatorSeries& rhs) {
  require_same_sequence(*this, rhs);
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

OperatorSeries& OperatorSeries::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

OperatorSeries operator*(const OperatorSeries& a, const OperatorSeries& b) {
  require_same_sequence(a, b);
  std::size_t trunc = std::min(a.trunc(), b.trunc());
  std::vector<Rational> out(trunc + 1, Rational(0));
  for (std::size_t i = 0; i <= trunc; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= trunc; ++j) {
      if (b.coeffs_[j] == 0) continue;
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return OperatorSeries(a.seq_, std::move(out), trunc);
}

OperatorSeries OperatorSeries::inverse() const {
  if (!is_invertible()) {
    throw NotInvertibleError("series with zero constant term has no reciprocal (T1 = 0)");
  }
  std::vector<Rational> out(coeffs_.size(), Rational(0));
  out[0] = Rational(1) / coeffs_[0];
  for (std::size_t n = 1; n < coeffs_.size(); ++n) {
    Rational acc(0);
    for (std::size_t k = 1; k <= n; ++k) acc += coeffs_[k] * out[n - k];
    out[n] = -acc / coeffs_[0];
  }
  return OperatorSeries(seq_, std::move(out), trunc());
}

OperatorSeries OperatorSeries::pincherle() const {
  if (coeffs_.size() == 1) return zero(seq_, 0);
  std::vector<Rational> out(coeffs_.size() - 1, Rational(0));
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    out[k - 1] = Rational(static_cast<unsigned long>(k)) * coeffs_[k];
  }
  return OperatorSeries(seq_, std::move(out), coeffs_.size() - 2);
}

OperatorSeries OperatorSeries::power(std::size_t n) const {
  OperatorSeries acc = identity(seq_, trunc());
  for (std::size_t i = 0; i < n; ++i) acc = acc * *this;
  return acc;
}

OperatorSeries OperatorSeries::compose(const OperatorSeries& inner) const {
  require_same_sequence(*this, inner);
  if (inner.coeffs_[0] != 0) {
    throw DomainError("composition needs zero constant term in the inner series");
  }
  std::size_t trunc_out = std::min(trunc(), inner.trunc());
  OperatorSeries g = inner.truncated(trunc_out);
  OperatorSeries acc = zero(seq_, trunc_out);
  for (std::size_t k = trunc_out + 1; k-- > 0;) {
    acc = acc * g;
    acc.coeffs_[0] += coefficient(k);
  }
  return acc;
}

OperatorSeries OperatorSeries::compositional_inverse() const {
  if (!is_delta()) {
    throw DomainError("compositional inverse needs a delta series (c0 = 0, c1 != 0)");
  }
  std::size_t T = trunc();
  std::vector<Rational> r(T + 1, Rational(0));
  if (T >= 1) r[1] = Rational(1) / coeffs_[1];
  for (std::size_t m = 2; m <= T; ++m) {
    // With r fixed through order m-1 and r_m = 0, the t^m defect of q(r(t))
    // is linear in r_m with slope c1.
    OperatorSeries partial(seq_, std::vector<Rational>(r.begin(), r.begin() + m + 1), m);
    OperatorSeries comp = truncated(m).compose(partial);
    r[m] = -comp.coefficient(m) / coeffs_[1];
  }
  return OperatorSeries(seq_, std::move(r), T);
}

OperatorSeries exp_f(const OperatorSeries& u) {
  if (u.coefficient(0) != 0) {
    throw DomainError("exp_f needs zero constant term (formal convergence)");
  }
  const PsiSequence& seq = u.sequence();
  std::size_t T = u.trunc();
  OperatorSeries acc = OperatorSeries::identity(seq, T);
  OperatorSeries upow = OperatorSeries::identity(seq, T);
  for (std::size_t m = 1; m <= T; ++m) {
    upow = upow * u;
    if (upow.is_zero()) break;
    acc += upow * make_ratio(Integer(1), seq.factorial(m));
  }
  return acc;
}

Polynomial translate(const PsiSequence& seq, const Polynomial& p, const Rational& y) {
  Polynomial acc;
  Polynomial cur = p;
  Rational ypow(1);
  std::size_t k = 0;
  while (!cur.is_zero()) {
    acc += (ypow / Rational(seq.factorial(k))) * cur;
    cur = f_derivative(seq, cur);
    ypow *= y;
    ++k;
  }
  return acc;
}

OperatorSeries f_derivative_op(const PsiSequence& seq, std::size_t trunc) {
  return OperatorSeries(seq, {Rational(0), Rational(1)}, trunc);
}

OperatorSeries forward_difference_op(const PsiSequence& seq, std::size_t trunc) {
  std::vector<Rational> c(trunc + 1, Rational(0));
  for (std::size_t k = 1; k <= trunc; ++k) c[k] = make_ratio(Integer(1), seq.factorial(k));
  return OperatorSeries(seq, std::move(c), trunc);
}

OperatorSeries backward_difference_op(const PsiSequence& seq, std::size_t trunc) {
  std::vector<Rational> c(trunc + 1, Rational(0));
  for (std::size_t k = 1; k <= trunc; ++k) {
    c[k] = make_ratio(Integer(k % 2 == 0 ? -1 : 1), seq.factorial(k));
  }
  return OperatorSeries(seq, std::move(c), trunc);
}

OperatorSeries abel_op(const PsiSequence& seq, const Rational& a, std::size_t trunc) {
  std::vector<Rational> c(trunc + 1, Rational(0));
  Rational apow(1);
  for (std::size_t k = 0; k + 1 <= trunc; ++k) {
    c[k + 1] = apow / Rational(seq.factorial(k));
    apow *= a;
  }
  return OperatorSeries(seq, std::move(c), trunc);
}

OperatorSeries laguerre_op(const PsiSequence& seq, std::size_t trunc) {
  // t/(t-1) = -sum_{k>=0} t^{k+1}
  std::vector<Rational> c(trunc + 1, Rational(-1));
  c[0] = 0;
  return OperatorSeries(seq, std::move(c), trunc);
}

OperatorSeries translation_op(const PsiSequence& seq, const Rational& y, std::size_t trunc) {
  std::vector<Rational> c(trunc + 1, Rational(0));
  Rational ypow(1);
  for (std::size_t k = 0; k <= trunc; ++k) {
    c[k] = ypow / Rational(seq.factorial(k));
    ypow *= y;
  }
  return OperatorSeries(seq, std::move(c), trunc);
}

OperatorSeries hermite_s_op(const PsiSequence& seq, const Rational& a, std::size_t trunc) {
  std::vector<Rational> c(trunc + 1, Rational(0));
  Rational half_a = a / 2;
  Rational pw(1);
  for (std::size_t m = 0; 2 * m <= trunc; ++m) {
    c[2 * m] = pw / Rational(seq.factorial(m));
    pw *= half_a;
  }
  return OperatorSeries(seq, std::move(c), trunc);
}

OperatorSeries laguerre_s_op(const PsiSequence& seq, const Rational& alpha, std::size_t trunc) {
  // (1-t)^{-alpha-1} = sum_k [(alpha+1)(alpha+2)...(alpha+k)/k!] t^k,
  // exact for any rational alpha.
  std::vector<Rational> c(trunc + 1, Rational(0));
  c[0] = 1;
  Rational num(1);
  Integer kfact(1);
  for (std::size_t k = 1; k <= trunc; ++k) {
    num *= alpha + Rational(static_cast<unsigned long>(k));
    kfact *= static_cast<unsigned long>(k);
    c[k] = num / Rational(kfact);
  }
  return OperatorSeries(seq, std::move(c), trunc);
}

OperatorSeries bernoulli_s_op(const PsiSequence& seq, std::size_t trunc) {
  std::vector<Rational> c(trunc + 1, Rational(0));
  for (std::size_t k = 0; k <= trunc; ++k) c[k] = make_ratio(Integer(1), seq.factorial(k + 1));
  return OperatorSeries(seq, std::move(c), trunc).inverse();
}

}  // namespace fiboper
