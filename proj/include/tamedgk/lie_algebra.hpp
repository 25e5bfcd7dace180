#pragma once

#include <vector>

#include "tamedgk/tensor.hpp"

namespace tgk {

// Finite-dimensional Lie algebra given by its structure equations
// d e^k = sum_{i<j} c^k_{ij} e^i ^ e^j.
//
// Sign convention (fixed once, used everywhere): for invariant fields
//   d alpha (X, Y) = -alpha([X, Y]),
// so [e_i, e_j] = -sum_k c^k_{ij} e_k.
class LieAlgebra {
 public:
  LieAlgebra(int dim, std::vector<Form> d_basis);
  static LieAlgebra abelian(int dim);

  int dim() const { return dim_; }
  const Form& d_basis_oneform(int k) const;  // d e^k, k 1-based

  Vec bracket(const Vec& x, const Vec& y) const;
  const Vec& bracket_basis(int i, int j) const;  // [e_i, e_j], 1-based

  // Chevalley-Eilenberg differential: the antiderivation extending the
  // declared d e^k.
  Form d(const Form& f) const;

  // d(d e^k) = 0 for every k; equivalent to the Jacobi identity.
  bool jacobi() const;

  // True iff the bracket of every pair of spanning vectors stays in the
  // span (exact rank test).
  bool span_involutive(const std::vector<Vec>& span) const;

  // Exact basis of ker(d) on grade-k invariant forms.
  std::vector<Form> closed_forms_basis(int grade) const;

  bool operator==(const LieAlgebra& o) const { return dim_ == o.dim_ && d_basis_ == o.d_basis_; }

 private:
  int dim_;
  std::vector<Form> d_basis_;          // d e^k, k = 1..dim
  std::vector<std::vector<Vec>> brk_;  // [e_i, e_j] cached, 0-based
};

// The trilinear map (X,Y,Z) |-> sigma g(X,[Y,Z]) and friends are built from
// this brute-force table; used as an oracle in tests.
Trilinear bracket_trilinear(const LieAlgebra& l, const RatMatrix& g);

// Restriction of the algebra to an involutive span.  Returns the
// sub-algebra in the given basis together with the basis matrix
// (columns = span vectors in ambient coordinates).
struct Subalgebra {
  LieAlgebra algebra;
  RatMatrix basis;  // dim x r
};
Subalgebra restrict_to_span(const LieAlgebra& l, const std::vector<Vec>& span);

}  // namespace tgk
