#include "tamedgk/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "tamedgk/analyze.hpp"
#include "tamedgk/fixtures.hpp"

#ifdef TGK_HAVE_OPENMP
#include <omp.h>
#endif

namespace tgk {

namespace {

std::string slurp(const std::string& path, std::string& error) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    error = "cannot open file: " + path;
    return {};
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct FileResult {
  int code = 0;
  std::string text;
};

FileResult analyze_one(const std::string& path, bool json, bool convention) {
  FileResult res;
  std::ostringstream os;
  std::string io_error;
  std::string text = slurp(path, io_error);
  if (!io_error.empty()) {
    os << "error: " << io_error << "\n";
    res.code = kExitParse;
    res.text = os.str();
    return res;
  }
  try {
    AnalysisOutcome outcome = analyze_text(text);
    if (convention && !json) os << convention_ledger() << "\n";
    os << (json ? report_json(outcome.report) : report_text(outcome.report));
    if (outcome.exit_code != kExitOk && !json) os << "error: " << outcome.error << "\n";
    res.code = outcome.exit_code;
  } catch (const std::exception& e) {
    os << "internal error: " << e.what() << "\n";
    res.code = kExitIdentity;
  }
  res.text = os.str();
  return res;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact invariant geometry of taming symplectic forms on Lie algebras"};
  app.require_subcommand(1);

  // analyze
  std::vector<std::string> analyze_files;
  bool json = false;
  bool convention = false;
  CLI::App* analyze = app.add_subcommand("analyze", "run the full analysis pipeline on structure files");
  analyze->add_option("files", analyze_files, "structure files")->required()->expected(-1);
  analyze->add_flag("--json", json, "emit the structured report");
  analyze->add_flag("--convention", convention, "print the sign-convention ledger");

  // check
  std::string check_file;
  std::string identity;
  CLI::App* check = app.add_subcommand("check", "run a single identity and print its residual");
  check->add_option("file", check_file, "structure file")->required();
  check->add_option("--identity", identity, "prop22 | zabzine | lemma41 | prop44 | dim4 | chern-psi | schouten-modes")
      ->required();

  // examples
  bool list = false;
  std::string emit;
  CLI::App* examples = app.add_subcommand("examples", "list or emit the built-in example files");
  examples->add_flag("--list", list, "list example names");
  examples->add_option("--emit", emit, "print one example file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends print through CLI11's exit path
      std::ostringstream os;
      int rc = app.exit(e, os, os);
      out << os.str();
      return rc;
    }
    err << e.what() << "\n";
    return kExitParse;
  }

  if (analyze->parsed()) {
    std::vector<FileResult> results(analyze_files.size());
    if (convention && json) err << convention_ledger();
#ifdef TGK_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (analyze_files.size() > 1)
#endif
    for (long long i = 0; i < static_cast<long long>(analyze_files.size()); ++i)
      results[static_cast<size_t>(i)] = analyze_one(analyze_files[static_cast<size_t>(i)], json, convention);
    int worst = kExitOk;
    for (size_t i = 0; i < results.size(); ++i) {
      if (analyze_files.size() > 1 && !json) out << "== " << analyze_files[i] << "\n";
      out << results[i].text;
      worst = std::max(worst, results[i].code);
    }
    return worst;
  }

  if (check->parsed()) {
    std::string io_error;
    std::string text = slurp(check_file, io_error);
    if (!io_error.empty()) {
      err << "error: " << io_error << "\n";
      return kExitParse;
    }
    try {
      StructurePackage pkg = parse_structure_file(text);
      return check_identity(pkg, identity, out);
    } catch (const ParseError& e) {
      err << "parse error: " << e.what() << "\n";
      return kExitParse;
    } catch (const TamingError& e) {
      err << "error: " << e.what() << "\n";
      return kExitOmega;
    } catch (const std::exception& e) {
      err << "internal error: " << e.what() << "\n";
      return kExitIdentity;
    }
  }

  if (examples->parsed()) {
    if (!emit.empty()) {
      const std::string* text = find_example(emit);
      if (!text) {
        err << "unknown example: " << emit << "\n";
        return kExitParse;
      }
      out << *text;
      return kExitOk;
    }
    for (const FixtureFile& f : builtin_examples()) out << f.name << "\n";
    return kExitOk;
  }

  return kExitParse;
}

}  // namespace tgk
