#pragma once

#include <stdexcept>
#include <string>

namespace fiboper {

/// Input outside an operation's domain (nonzero constant term where the
/// formal calculus needs none, malformed rational text, unknown family...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// A series was asked to act exactly beyond its truncation order.
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Reciprocal of a series whose constant term vanishes (T1 = 0).
struct NotInvertibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The scalar (u_k, v_k) ansatz for the number operator left a nonzero
/// residual equation. Carries the scheme label and the index where the
/// solve broke down.
struct InconsistentAnsatzError : std::runtime_error {
  InconsistentAnsatzError(std::string scheme, std::size_t n, std::string residual)
      : std::runtime_error("number operator ansatz inconsistent for scheme '" + scheme +
                           "' at n=" + std::to_string(n) + ", residual " + residual),
        scheme_label(std::move(scheme)),
        index(n),
        residual_text(std::move(residual)) {}

  std::string scheme_label;
  std::size_t index;
  std::string residual_text;
};

}  // namespace fiboper
