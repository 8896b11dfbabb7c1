// Acceptance suite: runs the seven contract criteria end to end and prints
// one pass/fail line each. Exit code is the number of failed criteria.
//
// Everything here is exact arithmetic; "tolerance" is equality throughout.

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fiboper/errors.hpp"
#include "fiboper/families.hpp"
#include "fiboper/format.hpp"
#include "fiboper/psi.hpp"
#include "fiboper/spectral.hpp"
#include "fiboper/tables.hpp"
#include "test_util.hpp"

using namespace fiboper;
using testutil::Q;

namespace {

const PsiSequence F = PsiSequence::fibonacci();

int failures = 0;

void report(int num, const std::string& what, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << num << ": " << what;
  if (!ok && !detail.empty()) std::cout << " -- " << detail;
  std::cout << "\n";
  if (!ok) ++failures;
}

void run(int num, const std::string& what, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  report(num, what, ok, detail);
}

ShefferScheme scheme_of(const std::string& text, std::size_t trunc) {
  return FamilySpec::parse(text).scheme(F, trunc);
}

const std::vector<std::string> kBasicFamilies = {
    "basic:delta", "basic:forward", "basic:backward",
    "basic:abel:1", "basic:abel:-2", "basic:abel:3/2", "basic:laguerre"};
const std::vector<std::string> kShefferFamilies = {
    "sheffer:hermite:1", "sheffer:laguerre:1", "sheffer:bernoulli"};

// --------------------------------------------------------------------------
// 1. Golden tables with the shipped errata ledger.

bool golden_tables(std::string& detail) {
  VerifyReport rep = run_verify(F);
  std::map<std::string, VerifyStatus> expect_errata = {
      {"basic:laguerre#5", VerifyStatus::ErrataConfirmed},
      {"sheffer:bernoulli#8", VerifyStatus::ErrataConfirmed},
      {"sheffer:laguerre:1#5", VerifyStatus::ErrataConfirmed},
      {"basic:abel:1#2", VerifyStatus::ErrataConfirmed},
      {"basic:abel:-2#2", VerifyStatus::ErrataConfirmed},
      {"basic:abel:3/2#2", VerifyStatus::ErrataConfirmed},
  };
  if (rep.entries.size() != 55) {
    detail = "expected 55 transcribed entries, saw " + std::to_string(rep.entries.size());
    return false;
  }
  for (const auto& e : rep.entries) {
    std::string key = e.entry.family.text() + "#" + std::to_string(e.entry.n);
    auto it = expect_errata.find(key);
    VerifyStatus want = it == expect_errata.end() ? VerifyStatus::Match : it->second;
    if (e.status != want) {
      detail = key + " is " + verify_status_name(e.status) + ", expected " +
               verify_status_name(want);
      return false;
    }
  }
  // The confirmed errata must carry the dual-route derived values.
  std::map<std::string, Polynomial> derived_expect = {
      {"basic:laguerre#5", polynomial_from_strings({"0", "-30", "120", "-90", "20", "-1"})},
      {"sheffer:bernoulli#8",
       polynomial_from_strings({"1/34", "1", "21", "273/2", "364", "364", "273/2", "21", "1"})},
      {"sheffer:laguerre:1#5", polynomial_from_strings({"180", "-450", "600", "-225", "30", "-1"})},
      {"basic:abel:1#2", polynomial_from_strings({"0", "-1", "1"})},
      {"basic:abel:-2#2", polynomial_from_strings({"0", "2", "1"})},
      {"basic:abel:3/2#2", polynomial_from_strings({"0", "-3/2", "1"})},
  };
  for (const auto& e : rep.entries) {
    std::string key = e.entry.family.text() + "#" + std::to_string(e.entry.n);
    auto it = derived_expect.find(key);
    if (it != derived_expect.end() && !(e.derived == it->second)) {
      detail = key + " derived value is off";
      return false;
    }
  }
  return true;
}

// --------------------------------------------------------------------------
// 2. Four-route equivalence for the named delta operators.

bool four_routes(std::string& detail) {
  for (const auto& fam : kBasicFamilies) {
    ShefferScheme scheme = scheme_of(fam, 11);
    PolySequence rodrigues = basic_via_lagrange(scheme, 8, 4);
    for (int variant : {1, 2, 3}) {
      PolySequence other = basic_via_lagrange(scheme, 8, variant);
      for (std::size_t n = 0; n <= 8; ++n) {
        if (!(other[n] == rodrigues[n])) {
          detail = fam + " variant " + std::to_string(variant) + " differs at n=" +
                   std::to_string(n);
          return false;
        }
      }
    }
  }
  return true;
}

// --------------------------------------------------------------------------
// 3. Axiom suites: defining axioms, binomial identities, generating functions.

bool axiom_suites(std::string& detail) {
  const std::vector<Rational> ys = {Q("1"), Q("-1"), Q("2/3")};

  for (const auto& fam : kBasicFamilies) {
    ShefferScheme scheme = scheme_of(fam, 11);
    PolySequence seq = basic_sequence(scheme, 8);  // axioms re-checked on construction
    for (const auto& y : ys) {
      if (!check_binomial_type(seq, y)) {
        detail = fam + " binomial type fails at y=" + rational_str(y);
        return false;
      }
    }
  }
  for (const auto& fam : kShefferFamilies) {
    ShefferScheme scheme = scheme_of(fam, 18);
    sheffer_sequence(scheme, 8);  // Sheffer axioms re-checked on construction
    for (const auto& y : ys) {
      if (!check_sheffer_binomial(scheme, y, 8)) {
        detail = fam + " sheffer binomial fails at y=" + rational_str(y);
        return false;
      }
    }
  }
  for (const auto& fam : {std::string("basic:delta"), std::string("basic:forward"),
                          std::string("basic:abel:1"), std::string("basic:laguerre"),
                          std::string("sheffer:hermite:1"), std::string("sheffer:laguerre:1"),
                          std::string("sheffer:bernoulli")}) {
    if (!gf_check(scheme_of(fam, 10), 6)) {
      detail = fam + " generating function fails";
      return false;
    }
  }
  return true;
}

// --------------------------------------------------------------------------
// 4. Operator-algebra suite.

bool algebra_suite(std::string& detail) {
  testutil::RationalGen gen(101);

  for (int rep = 0; rep < 100; ++rep) {
    OperatorSeries T = gen.series(F, 8, false);
    OperatorSeries U = gen.series(F, 8, false);
    OperatorSeries TU = T * U;
    for (std::size_t d = 0; d <= 8; ++d) {
      Polynomial xd = Polynomial::monomial(d);
      if (!(TU.apply(xd) == T.apply(U.apply(xd)))) {
        detail = "isomorphism fails at rep " + std::to_string(rep);
        return false;
      }
    }
    OperatorSeries lhs = TU.pincherle();
    OperatorSeries rhs = T.pincherle() * U.truncated(7) + T.truncated(7) * U.pincherle();
    if (!(lhs == rhs)) {
      detail = "Leibniz rule fails at rep " + std::to_string(rep);
      return false;
    }
    OperatorSeries V = gen.series(F, 8, true);
    if (!(V * V.inverse() == OperatorSeries::identity(F, 8))) {
      detail = "reciprocal fails at rep " + std::to_string(rep);
      return false;
    }
  }

  for (const auto& fam : kBasicFamilies) {
    OperatorSeries q = scheme_of(fam, 8).delta();
    if (!q.compose(q.compositional_inverse()).agrees_with(f_derivative_op(F, 8), 8)) {
      detail = fam + " compositional inverse back-substitution fails";
      return false;
    }
  }

  // Delta criterion on the worked examples: the five deltas pass, the
  // translation E^1 and the identity do not.
  for (const auto& fam : kBasicFamilies) {
    if (!scheme_of(fam, 8).delta().is_delta()) {
      detail = fam + " should satisfy the delta criterion";
      return false;
    }
  }
  OperatorSeries e1 = translation_op(F, Q("1"), 8);
  if (e1.is_delta() || OperatorSeries::identity(F, 8).is_delta() || !e1.is_invertible()) {
    detail = "translation/identity misclassified";
    return false;
  }
  if (!(e1 - OperatorSeries::identity(F, 8)).is_delta()) {
    detail = "E^1 - I should be a delta operator";
    return false;
  }
  return true;
}

// --------------------------------------------------------------------------
// 5. Fibonomial suite.

bool fibonomial_suite(std::string& detail) {
  for (std::size_t n = 0; n <= 60; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      Integer b = F.binomial(n, k);  // exact divisibility asserted inside
      if (b != F.binomial(n, n - k)) {
        detail = "symmetry fails at " + std::to_string(n) + "," + std::to_string(k);
        return false;
      }
      if (k < n && F.value(n - k) * b != F.value(n) * F.binomial(n - 1, k)) {
        detail = "absorption fails at " + std::to_string(n) + "," + std::to_string(k);
        return false;
      }
    }
  }
  if (F.binomial(6, 3) != 60) {
    detail = "binom(6,3)_F != 60";
    return false;
  }
  PsiSequence nat = PsiSequence::natural();
  for (std::size_t n = 0; n <= 30; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      Integer expect;
      mpz_bin_uiui(expect.get_mpz_t(), n, k);
      if (nat.binomial(n, k) != expect) {
        detail = "natural degeneration fails at " + std::to_string(n) + "," + std::to_string(k);
        return false;
      }
    }
  }
  return true;
}

// --------------------------------------------------------------------------
// 6. Spectral suite.

bool spectral_suite(std::string& detail) {
  for (const auto& fam : kBasicFamilies) {
    auto g = gram_matrix(scheme_of(fam, 16), 6);
    for (std::size_t i = 0; i <= 6; ++i) {
      for (std::size_t j = 0; j <= 6; ++j) {
        if (g[i][j] != (i == j ? Rational(F.factorial(i)) : Rational(0))) {
          detail = fam + " gram matrix off at " + std::to_string(i) + "," + std::to_string(j);
          return false;
        }
      }
    }
  }
  for (const auto& fam : kShefferFamilies) {
    auto g = gram_matrix(scheme_of(fam, 16), 6);
    for (std::size_t i = 0; i <= 6; ++i) {
      for (std::size_t j = 0; j <= 6; ++j) {
        if (g[i][j] != (i == j ? Rational(F.factorial(i)) : Rational(0))) {
          detail = fam + " gram matrix off at " + std::to_string(i) + "," + std::to_string(j);
          return false;
        }
      }
    }
  }

  for (const auto& fam : kShefferFamilies) {
    ShefferScheme scheme = scheme_of(fam, 16);
    SpectralCoeffs c = number_operator(scheme, 6);  // must not fire InconsistentAnsatz
    if (!eigencheck(scheme, c, 6)) {
      detail = fam + " eigencheck fails";
      return false;
    }
  }

  SpectralCoeffs triv = number_operator(scheme_of("basic:delta", 10), 6);
  for (std::size_t i = 0; i < 6; ++i) {
    if (triv.u[i] != 0 || triv.v[i] != (i == 0 ? Rational(1) : Rational(0))) {
      detail = "trivial scheme is not xhat after f_derivative";
      return false;
    }
  }

  SpectralReport cmp = spectral_report(scheme_of("basic:delta", 10), 6);
  if (!cmp.all_match()) {
    detail = "reference-formula comparison should fully agree on the trivial scheme";
    return false;
  }
  spectral_report(scheme_of("sheffer:hermite:1", 16), 6);  // generated without error
  return true;
}

// --------------------------------------------------------------------------
// 7. CLI contract.

std::pair<int, std::string> run_cli(const std::string& args) {
  std::string cmd = std::string(FIBOPER_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool cli_contract(std::string& detail) {
  auto [verify_code, verify_out] = run_cli("verify --format json");
  if (verify_code != 0) {
    detail = "verify exited " + std::to_string(verify_code);
    return false;
  }

  // JSON round-trip over 200 generated tables.
  std::mt19937_64 rng(2024);
  const std::vector<std::string> families = {
      "basic:delta",      "basic:forward",      "basic:backward",   "basic:abel:1",
      "basic:abel:-2",    "basic:abel:3/2",     "basic:laguerre",   "sheffer:hermite:1",
      "sheffer:hermite:-2", "sheffer:laguerre:1", "sheffer:laguerre:2", "sheffer:bernoulli"};
  std::uniform_int_distribution<std::size_t> pick(0, families.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_n(0, 9);
  for (int i = 0; i < 200; ++i) {
    FamilySpec spec = FamilySpec::parse(families[pick(rng)]);
    std::size_t n_max = pick_n(rng);
    auto rows = generate_table(spec, n_max, F, n_max + 4);
    auto parsed = nlohmann::json::parse(format_table(rows, OutputFormat::Json));
    if (parsed.size() != rows.size()) {
      detail = "json row count mismatch";
      return false;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Polynomial back =
          polynomial_from_strings(parsed[r]["coeffs"].get<std::vector<std::string>>());
      if (!(back == rows[r].value) || parsed[r]["order"] != "ascending") {
        detail = "json round-trip failed for " + spec.text() + " n=" + std::to_string(r);
        return false;
      }
    }
  }

  for (const char* args :
       {"table sheffer:bernoulli 9 --format json", "verify --format plain",
        "spectral sheffer:laguerre:1 5 --format json", "gram basic:forward 5 --format latex"}) {
    auto a = run_cli(args);
    auto b = run_cli(args);
    if (a.first != 0 || a != b) {
      detail = std::string("byte determinism fails for: ") + args;
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  run(1, "golden tables reproduce the source lists with the shipped errata", golden_tables);
  run(2, "lagrange variants 1-3 equal the rodrigues route (n <= 8, 5 deltas)", four_routes);
  run(3, "basic/sheffer axioms, binomial identities, generating functions", axiom_suites);
  run(4, "indicator algebra: isomorphism, leibniz, reciprocals, inverses, delta criterion",
      algebra_suite);
  run(5, "fibonomial symmetry, absorption, integrality (n <= 60), degeneration", fibonomial_suite);
  run(6, "gram = diag(F_n!), number operator and eigencheck, comparison report", spectral_suite);
  run(7, "cli: verify exit 0, json round-trip (200 tables), byte determinism", cli_contract);

  if (failures == 0) {
    std::cout << "all 7 acceptance criteria pass\n";
  } else {
    std::cout << failures << " acceptance criteria FAILED\n";
  }
  return failures;
}
