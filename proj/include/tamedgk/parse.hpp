#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "tamedgk/lie_algebra.hpp"

namespace tgk {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + message),
        line(line),
        col(col) {}
  int line;
  int col;
};

// Parsed structure file: the algebra plus the named invariant tensors.
struct StructurePackage {
  LieAlgebra algebra;
  std::map<std::string, RatMatrix> endomorphisms;  // columns = images of e_i
  std::map<std::string, Form> forms;

  bool operator==(const StructurePackage& o) const {
    return algebra == o.algebra && endomorphisms == o.endomorphisms && forms == o.forms;
  }
};

// Grammar (line oriented, '#' comments):
//   dim = INT
//   d e1 = e26            d-declaration ("de1 = e26" is accepted too)
//   J(e1) = -e2           endomorphism column
//   Omega = e12 + e34     named form
// Index lists are digit strings for dim <= 9 and "(i,j,...)" otherwise.
// Unparsed basis derivatives default to zero.
StructurePackage parse_structure_file(const std::string& text);

// Canonical rendering (sorted indices, reduced rationals, every d e^k
// printed).  parse(serialize(p)) == p.
std::string serialize_structure_file(const StructurePackage& p);

}  // namespace tgk
