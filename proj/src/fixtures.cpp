#include "tamedgk/fixtures.hpp"

namespace tgk {

namespace {

const char kHyperelliptic[] =
    "# hyperelliptic: solvable 4-dimensional algebra with an integrable J\n"
    "# tamed by a non-Kaehler symplectic form\n"
    "dim = 4\n"
    "d e1 = e24\n"
    "d e2 = -e14\n"
    "d e3 = 0\n"
    "d e4 = 0\n"
    "J(e1) = -e2\n"
    "J(e2) = e1\n"
    "J(e3) = -e4\n"
    "J(e4) = e3\n"
    "Omega = e12 + e24 + e34\n";

const char kSolv6[] =
    "# solv6: unimodular solvable 6-dimensional algebra; J is integrable,\n"
    "# Omega tames it, and the induced J- is not integrable\n"
    "dim = 6\n"
    "d e1 = e26\n"
    "d e2 = -e16\n"
    "d e3 = e46\n"
    "d e4 = -e36\n"
    "d e5 = 0\n"
    "d e6 = 0\n"
    "J(e1) = -e2\n"
    "J(e2) = e1\n"
    "J(e3) = -e4\n"
    "J(e4) = e3\n"
    "J(e5) = -e6\n"
    "J(e6) = e5\n"
    "Omega = e12 + e34 + e56 + e16\n";

const char kTorus4[] =
    "# torus4: abelian algebra with the standard Kaehler pair\n"
    "dim = 4\n"
    "d e1 = 0\n"
    "d e2 = 0\n"
    "d e3 = 0\n"
    "d e4 = 0\n"
    "J(e1) = -e2\n"
    "J(e2) = e1\n"
    "J(e3) = -e4\n"
    "J(e4) = e3\n"
    "Omega = e12 + e34\n";

}  // namespace

const std::vector<FixtureFile>& builtin_examples() {
  static const std::vector<FixtureFile> files = {
      {"hyperelliptic", kHyperelliptic},
      {"solv6", kSolv6},
      {"torus4", kTorus4},
  };
  return files;
}

const std::string* find_example(const std::string& name) {
  for (const FixtureFile& f : builtin_examples())
    if (f.name == name) return &f.text;
  return nullptr;
}

}  // namespace tgk
