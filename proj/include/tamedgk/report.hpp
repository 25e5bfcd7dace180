#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tgk {

struct TwistReportEntry {
  bool solvable = false;
  int kernel_dim = 0;
  std::string representative;  // canonical 3-form, valid when solvable
  bool operator==(const TwistReportEntry&) const = default;
};

// The structured verdict of one analysis run.  Fields past a failed
// precheck stay unset and serialize as null.
struct AnalysisReport {
  std::string input_digest;
  bool jacobi = false;
  std::optional<bool> omega_closed;
  std::optional<bool> tames;
  std::optional<bool> jplus_integrable;
  std::optional<std::map<std::string, std::string>> jminus_table;
  std::optional<bool> jminus_integrable;
  std::optional<bool> skt;
  std::optional<bool> generalized_pair_valid;
  std::optional<int> q_rank;
  std::optional<bool> imq_involutive;
  std::optional<bool> imq_subalgebra;
  std::optional<std::string> schouten_qq;
  std::optional<TwistReportEntry> twisting_solutions;
  std::optional<std::string> beta2_twisted;  // "yes" | "no" | "all_slots=..,each_slot=.."
  std::optional<bool> frakn_zero;
  std::vector<std::pair<std::string, bool>> identity_suite;

  bool operator==(const AnalysisReport&) const = default;
};

// Aligned plain text, stable field order, byte-identical across runs.
std::string report_text(const AnalysisReport& r);
// Structured document with exactly the report fields; rationals are
// strings.  parse(emit(r)) == r.
std::string report_json(const AnalysisReport& r);
AnalysisReport report_from_json(const std::string& text);

// FNV-1a 64 of the input bytes, 16 hex digits.
std::string input_digest(const std::string& bytes);

// The sign-convention ledger: every choice that pins a printed sign, plus
// the known misprints in the worked examples that the acceptance data
// corrects.  Printed by the CLI under --convention.
std::string convention_ledger();

}  // namespace tgk
