#pragma once

#include <array>

#include "tamedgk/hermitian.hpp"

namespace tgk {

// Invariant linear connection, stored as the raw coefficient table
// Gamma(i,j) = nabla_{e_i} e_j.  Named constructions below are factories
// with exact post-verification of their defining contracts.
class Connection {
 public:
  Connection() = default;
  explicit Connection(int dim) : dim_(dim), gamma_(static_cast<size_t>(dim) * dim, zero_vec(dim)) {}

  int dim() const { return dim_; }
  Vec& coeff(int i, int j) { return gamma_[static_cast<size_t>(i * dim_ + j)]; }           // 0-based
  const Vec& coeff(int i, int j) const { return gamma_[static_cast<size_t>(i * dim_ + j)]; }

  // nabla_X Y for invariant (constant-coefficient) fields.
  Vec nabla(const Vec& x, const Vec& y) const;
  // (nabla_{e_i} A)(e_j) for an endomorphism A.
  Vec nabla_endo(int i, const RatMatrix& a, int j) const;

  bool operator==(const Connection&) const = default;

 private:
  int dim_ = 0;
  std::vector<Vec> gamma_;
};

// Koszul formula for invariant fields:
//   2 g(nabla_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y).
// Verified metric and torsion-free.
Connection levi_civita(const LieAlgebra& l, const Metric& g);

// g(nabla+_X Y, Z) = g(LC) - (1/2) (J+ d w+)(X,Y,Z)
// g(nabla-_X Y, Z) = g(LC) - (1/4) (N- + 3 skew(N-))(X,Y,Z) - (1/2) (J- d w-)(X,Y,Z)
// Both verified to preserve g and the corresponding J exactly.
Connection bismut(const LieAlgebra& l, const Metric& g, const AlmostComplexStructure& j, const TamedPackage& pkg);

// g(D+_X Y, Z) = g(LC) + (1/2) d w+ (J+ X, Y, Z); preserves g and J+.
Connection chern(const LieAlgebra& l, const Metric& g, const AlmostComplexStructure& j_plus, const TamedPackage& pkg);

// c(X,Y,Z) = g(X, nabla_Y Z - nabla_Z Y - [Y,Z]).  When c is totally skew
// the 3-form is returned; otherwise the non-skew witness triple (1-based)
// is reported.
struct TorsionResult {
  bool skew = false;
  Form three_form;
  std::array<int, 3> witness{0, 0, 0};
};
TorsionResult torsion_3form(const LieAlgebra& l, const Connection& conn, const Metric& g);

// Exact contract checks, used by factories and the identity suite.
bool preserves_metric(const LieAlgebra& l, const Connection& c, const Metric& g);
bool torsion_free(const LieAlgebra& l, const Connection& c);
bool preserves_endomorphism(const Connection& c, const RatMatrix& a);

// The 3-tensor (X,Y,Z) |-> g((nabla_X A)(Y), Z) for an endomorphism A.
Trilinear nabla_endo_tensor(const Connection& c, const Metric& g, const RatMatrix& a);

// N-(X,Y,Z) = g(X, N-(Y,Z)) and its cyclic-average combination
// N- + 3 skew(N-), as used by the minus Bismut connection.
Trilinear nijenhuis_tensor_lowered(const LieAlgebra& l, const Metric& g, const VectorValuedTwoForm& n);

}  // namespace tgk
