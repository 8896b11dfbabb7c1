#include "fiboper/psi.hpp"

#include <cassert>

#include "fiboper/errors.hpp"

namespace fiboper {

PsiSequence::PsiSequence(PsiKind kind) : kind_(kind), cache_(std::make_shared<Cache>()) {
  cache_->values = {Integer(0), Integer(1)};
  cache_->factorials = {Integer(1), Integer(1)};
}

std::string PsiSequence::name() const {
  return kind_ == PsiKind::Fibonacci ? "fibonacci" : "natural";
}

Integer PsiSequence::value(std::size_t n) const {
  if (kind_ == PsiKind::Natural) return Integer(static_cast<unsigned long>(n));
  std::scoped_lock lock(cache_->mu);
  auto& v = cache_->values;
  while (v.size() <= n) {
    v.push_back(v[v.size() - 1] + v[v.size() - 2]);
  }
  return v[n];
}

Integer PsiSequence::factorial(std::size_t n) const {
  std::scoped_lock lock(cache_->mu);
  auto& v = cache_->values;
  auto& f = cache_->factorials;
  while (f.size() <= n) {
    std::size_t k = f.size();
    if (kind_ == PsiKind::Natural) {
      f.push_back(f.back() * Integer(static_cast<unsigned long>(k)));
    } else {
      while (v.size() <= k) v.push_back(v[v.size() - 1] + v[v.size() - 2]);
      f.push_back(f.back() * v[k]);
    }
  }
  return f[n];
}

Integer PsiSequence::falling_factorial(std::size_t n, std::size_t k) const {
  Integer result(1);
  for (std::size_t i = 0; i < k; ++i) {
    if (n == i) return Integer(0);  // hit the psi(0) = 0 factor
    result *= value(n - i);
  }
  return result;
}

Integer PsiSequence::binomial(std::size_t n, std::size_t k) const {
  if (k > n) return Integer(0);
  Integer num = falling_factorial(n, k);
  Integer den = factorial(k);
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  // Integrality is a theorem of the calculus; a remainder means the sequence
  // violates it.
  assert(r == 0);
  if (r != 0) {
    throw std::logic_error("psi-binomial(" + std::to_string(n) + "," + std::to_string(k) +
                           ") is not an integer for sequence " + name());
  }
  return q;
}

}  // namespace fiboper
