#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "fiboper/rational.hpp"

namespace fiboper {

enum class PsiKind {
  Fibonacci,  // F_0 = 0, F_1 = 1, F_{n+2} = F_{n+1} + F_n
  Natural,    // psi(n) = n; degenerates the calculus to the classical one
};

/// The coefficient sequence driving the whole calculus: sequence values,
/// psi-factorials, falling factorials and the generalized binomial
/// (fibonomial) coefficients, all as exact big integers.
///
/// Values are memoized on demand. Copies share the memo table; the table is
/// guarded by a mutex so concurrent readers never observe a partially grown
/// cache.
class PsiSequence {
 public:
  explicit PsiSequence(PsiKind kind);

  static PsiSequence fibonacci() { return PsiSequence(PsiKind::Fibonacci); }
  static PsiSequence natural() { return PsiSequence(PsiKind::Natural); }

  PsiKind kind() const { return kind_; }
  std::string name() const;

  /// n-th sequence value (F_n for the Fibonacci kind).
  Integer value(std::size_t n) const;

  /// psi-factorial F_n! = F_n F_{n-1} ... F_1, with F_0! = 1.
  Integer factorial(std::size_t n) const;

  /// Falling factorial F_n F_{n-1} ... F_{n-k+1}; empty product (k = 0) is 1.
  /// Once the index chain reaches 0 the factor F_0 = 0 absorbs everything.
  Integer falling_factorial(std::size_t n, std::size_t k) const;

  /// Generalized binomial coefficient F_n!/(F_k! F_{n-k}!), the fibonomial
  /// for the Fibonacci kind. Zero for k > n. The division is checked to be
  /// remainder-free.
  Integer binomial(std::size_t n, std::size_t k) const;

  friend bool operator==(const PsiSequence& a, const PsiSequence& b) {
    return a.kind_ == b.kind_;
  }

 private:
  struct Cache {
    std::mutex mu;
    std::vector<Integer> values;
    std::vector<Integer> factorials;
  };

  PsiKind kind_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace fiboper
