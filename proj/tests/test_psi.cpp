#include <doctest.h>

#include <thread>
#include <vector>

#include "fiboper/psi.hpp"
#include "fiboper/rational.hpp"

using namespace fiboper;

TEST_CASE("fibonacci values and factorials") {
  PsiSequence f = PsiSequence::fibonacci();
  CHECK(f.value(0) == 0);
  CHECK(f.value(1) == 1);
  CHECK(f.value(2) == 1);
  CHECK(f.value(10) == 55);
  CHECK(f.value(20) == 6765);

  CHECK(f.factorial(0) == 1);
  CHECK(f.factorial(4) == 6);    // 3*2*1*1
  CHECK(f.factorial(6) == 240);  // 8*5*3*2*1*1
  CHECK(f.factorial(10) == 122522400);
}

TEST_CASE("natural sequence degenerates to classical") {
  PsiSequence n = PsiSequence::natural();
  CHECK(n.value(7) == 7);
  CHECK(n.factorial(5) == 120);
  CHECK(n.binomial(10, 4) == 210);
}

TEST_CASE("falling factorials") {
  PsiSequence f = PsiSequence::fibonacci();
  CHECK(f.falling_factorial(5, 0) == 1);  // empty product
  CHECK(f.falling_factorial(4, 4) == 6);  // F_4 F_3 F_2 F_1
  CHECK(f.falling_factorial(4, 5) == 0);  // product reaches F_0
  CHECK(f.falling_factorial(0, 1) == 0);
  CHECK(f.falling_factorial(6, 2) == 40);  // 8*5
}

TEST_CASE("fibonomial coefficients") {
  PsiSequence f = PsiSequence::fibonacci();
  CHECK(f.binomial(7, 0) == 1);
  CHECK(f.binomial(4, 2) == 6);
  CHECK(f.binomial(6, 3) == 60);
  CHECK(f.binomial(9, 9) == 1);
  CHECK(f.binomial(3, 5) == 0);  // k > n
}

TEST_CASE("fibonomial properties up to n = 60") {
  PsiSequence f = PsiSequence::fibonacci();
  for (std::size_t n = 0; n <= 60; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      Integer b = f.binomial(n, k);  // integrality asserted inside
      CHECK(b > 0);
      CHECK(b == f.binomial(n, n - k));  // symmetry
      if (k < n) {
        // absorption: F_{n-k} binom(n,k) = F_n binom(n-1,k)
        CHECK(f.value(n - k) * b == f.value(n) * f.binomial(n - 1, k));
      }
    }
  }
}

TEST_CASE("pascal-free rational oracle up to n = 30") {
  // binom(n,k) must equal the plain product quotient computed as an exact
  // rational, with no factorial cancellation tricks.
  PsiSequence f = PsiSequence::fibonacci();
  for (std::size_t n = 0; n <= 30; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      Rational prod(1);
      for (std::size_t i = 0; i < k; ++i) {
        prod *= make_ratio(f.value(n - i), f.value(k - i));
      }
      CHECK(Rational(f.binomial(n, k)) == prod);
    }
  }
}

TEST_CASE("natural binomials match the classical ones up to n = 30") {
  PsiSequence nat = PsiSequence::natural();
  for (std::size_t n = 0; n <= 30; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      Integer expect;
      mpz_bin_uiui(expect.get_mpz_t(), n, k);
      CHECK(nat.binomial(n, k) == expect);
    }
  }
}

TEST_CASE("memo table survives concurrent growth") {
  PsiSequence f = PsiSequence::fibonacci();
  PsiSequence serial = PsiSequence::fibonacci();
  Integer expect = serial.value(1500);
  Integer expect_fact = serial.factorial(300);

  std::vector<std::thread> workers;
  std::vector<int> ok(8, 0);
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([&, t] {
      bool good = true;
      for (std::size_t n = 0; n <= 1500; n += 7) {
        if (f.value(n) < 0) good = false;
      }
      good = good && f.value(1500) == expect && f.factorial(300) == expect_fact;
      ok[t] = good ? 1 : 0;
    });
  }
  for (auto& w : workers) w.join();
  for (int t = 0; t < 8; ++t) CHECK(ok[t] == 1);
}
