#pragma once

#include <iosfwd>

#include "tamedgk/parse.hpp"
#include "tamedgk/report.hpp"
#include "tamedgk/verify.hpp"

namespace tgk {

// Exit codes of the analysis pipeline.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitJacobi = 2;
inline constexpr int kExitOmega = 3;
inline constexpr int kExitIdentity = 4;

struct AnalysisOutcome {
  AnalysisReport report;
  int exit_code = kExitOk;
  std::string error;  // human-readable cause for nonzero exits
};

// Full pipeline on parsed input: jacobi, d Omega, taming, the induced
// package, integrability, SKT, the generalized pair, Q and its image, the
// Schouten bracket, the twisting solve, psi / frakN and the identity suite.
AnalysisOutcome analyze_package(const StructurePackage& pkg, const std::string& digest);

// Convenience wrapper: digest + parse + pipeline.  Parse errors come back
// as exit code 1 instead of an exception.
AnalysisOutcome analyze_text(const std::string& file_text);

// Runs a single named identity (prop22, zabzine, lemma41, prop44, dim4,
// chern-psi, schouten-modes) and prints the residual; returns an exit code.
int check_identity(const StructurePackage& pkg, const std::string& name, std::ostream& out);

}  // namespace tgk
