// Command-line front end: family tables, source-table verification, psi
// arithmetic, Gram matrices and number-operator reports.
//
// Exit codes: 0 success, 1 verification/consistency failure, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fiboper/errors.hpp"
#include "fiboper/families.hpp"
#include "fiboper/format.hpp"
#include "fiboper/psi.hpp"
#include "fiboper/spectral.hpp"
#include "fiboper/tables.hpp"

namespace {

constexpr std::size_t kDefaultMaxIndex = 16;

struct CommonOptions {
  std::string format = "plain";
  std::string psi = "fibonacci";
  std::optional<std::size_t> trunc;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "latex", "plain"}))
      ->capture_default_str();
  cmd->add_option("--psi", opts.psi, "Coefficient sequence")
      ->check(CLI::IsMember({"fibonacci", "natural"}))
      ->envname("FIBOPER_PSI")
      ->capture_default_str();
  cmd->add_option("--trunc", opts.trunc, "Series truncation order (default max(16, N + 2))");
}

fiboper::PsiSequence sequence_for(const CommonOptions& opts) {
  return opts.psi == "natural" ? fiboper::PsiSequence::natural()
                               : fiboper::PsiSequence::fibonacci();
}

std::size_t trunc_for(const CommonOptions& opts, std::size_t depth) {
  std::size_t t = opts.trunc.value_or(std::max<std::size_t>(kDefaultMaxIndex, depth + 2));
  if (t < depth + 2) {
    throw fiboper::DomainError("--trunc " + std::to_string(t) + " is too small (need at least " +
                               std::to_string(depth + 2) + ")");
  }
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for the fibonomial operator calculus"};
  app.require_subcommand(1);

  std::string family_text;
  std::size_t n_max = 0;
  unsigned long fib_n = 0;
  std::optional<unsigned long> fib_k;
  bool fib_factorial = false;

  CommonOptions table_opts, verify_opts, gram_opts, spectral_opts, fib_opts;

  auto* table = app.add_subcommand("table", "Generate a polynomial family table");
  table->add_option("family", family_text, "Family, e.g. basic:forward or sheffer:hermite:1")
      ->required();
  table->add_option("N", n_max, "Largest index n")->required();
  add_common(table, table_opts);

  auto* verify = app.add_subcommand(
      "verify", "Recompute the transcribed source tables and classify each entry");
  add_common(verify, verify_opts);

  auto* fib = app.add_subcommand("fib", "Sequence values, factorials and binomials");
  fib->add_option("n", fib_n, "Index")->required();
  fib->add_option("k", fib_k, "If given, print the (n, k) binomial coefficient");
  fib->add_flag("--factorial", fib_factorial, "Print the psi-factorial F_n!");
  add_common(fib, fib_opts);

  auto* gram = app.add_subcommand("gram", "Gram matrix of a family's inner product");
  gram->add_option("family", family_text, "Family")->required();
  gram->add_option("N", n_max, "Largest index n")->required();
  add_common(gram, gram_opts);

  auto* spectral = app.add_subcommand("spectral", "Number-operator coefficients and comparison");
  spectral->add_option("family", family_text, "Family")->required();
  spectral->add_option("N", n_max, "Largest index n")->required();
  add_common(spectral, spectral_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      return app.exit(e);
    }
    app.exit(e);
    return 2;
  }

  try {
    if (*table) {
      auto seq = sequence_for(table_opts);
      auto family = fiboper::FamilySpec::parse(family_text);
      auto rows = fiboper::generate_table(family, n_max, seq, trunc_for(table_opts, n_max));
      std::cout << fiboper::format_table(rows, fiboper::parse_format(table_opts.format));
    } else if (*verify) {
      auto seq = sequence_for(verify_opts);
      auto report = fiboper::run_verify(seq);
      std::cout << fiboper::format_verify(report, fiboper::parse_format(verify_opts.format));
      if (!report.ok()) {
        std::cerr << "verify: " << report.count(fiboper::VerifyStatus::Mismatch)
                  << " entries mismatch outside the errata ledger\n";
        return 1;
      }
    } else if (*fib) {
      auto seq = sequence_for(fib_opts);
      if (fib_k) {
        std::cout << seq.binomial(fib_n, *fib_k).get_str() << "\n";
      } else if (fib_factorial) {
        std::cout << seq.factorial(fib_n).get_str() << "\n";
      } else {
        std::cout << seq.value(fib_n).get_str() << "\n";
      }
    } else if (*gram) {
      auto seq = sequence_for(gram_opts);
      auto family = fiboper::FamilySpec::parse(family_text);
      auto scheme = family.scheme(seq, trunc_for(gram_opts, 2 * n_max));
      auto g = fiboper::gram_matrix(scheme, n_max);
      std::cout << fiboper::format_gram(g, fiboper::parse_format(gram_opts.format));
    } else if (*spectral) {
      auto seq = sequence_for(spectral_opts);
      auto family = fiboper::FamilySpec::parse(family_text);
      auto scheme = family.scheme(seq, trunc_for(spectral_opts, n_max));
      auto report = fiboper::spectral_report(scheme, n_max);
      std::cout << fiboper::format_spectral(report, fiboper::parse_format(spectral_opts.format));
    }
  } catch (const fiboper::InconsistentAnsatzError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const fiboper::DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
