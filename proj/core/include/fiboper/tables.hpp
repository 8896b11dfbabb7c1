#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fiboper/families.hpp"
#include "fiboper/format.hpp"
#include "fiboper/polynomial.hpp"
#include "fiboper/psi.hpp"
#include "fiboper/spectral.hpp"

namespace fiboper {

struct TableRow {
  FamilySpec family;
  std::size_t n = 0;
  Polynomial value;
};

std::vector<TableRow> generate_table(const FamilySpec& family, std::size_t n_max,
                                     const PsiSequence& seq, std::size_t trunc);

/// Renders a table in the requested format; byte-deterministic for fixed
/// inputs. JSON is an array of
/// {"family", "param", "n", "coeffs", "order": "ascending"} objects.
std::string format_table(const std::vector<TableRow>& rows, OutputFormat format);

std::string format_gram(const std::vector<std::vector<Rational>>& g, OutputFormat format);

std::string format_spectral(const SpectralReport& report, OutputFormat format);

// ---------------------------------------------------------------------------
// Source-table verification.
//
// The printed polynomial tables are embedded verbatim as data (typos
// included) and recomputed through two independent routes. Entries whose
// recomputed value disagrees with the print are only acceptable when the
// shipped errata ledger records them with the same derived value.

enum class VerifyStatus { Match, ErrataConfirmed, Mismatch };

/// One transcribed table entry: printed coefficients, ascending, as exact
/// rational strings.
struct ReferenceEntry {
  FamilySpec family;
  std::size_t n = 0;
  std::vector<std::string> printed;
};

/// A confirmed misprint: what the print says, what both computation routes
/// derive instead.
struct Erratum {
  std::string family_text;
  std::size_t n = 0;
  std::vector<std::string> derived;
  std::string note;
};

struct VerifyEntry {
  ReferenceEntry entry;
  VerifyStatus status = VerifyStatus::Mismatch;
  Polynomial derived;
  Polynomial printed;
  std::string note;
};

struct VerifyReport {
  std::vector<VerifyEntry> entries;

  bool ok() const;  // no Mismatch entries
  std::size_t count(VerifyStatus s) const;
};

const std::vector<ReferenceEntry>& reference_transcription();
const std::vector<Erratum>& errata_ledger();

/// Recomputes every transcribed entry via the operator route and the
/// second route (closed form where one exists, an independent Lagrange
/// variant otherwise) and classifies it.
VerifyReport run_verify(const PsiSequence& seq);

std::string format_verify(const VerifyReport& report, OutputFormat format);

std::string verify_status_name(VerifyStatus s);

}  // namespace fiboper
