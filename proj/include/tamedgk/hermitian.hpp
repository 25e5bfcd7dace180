#pragma once

#include <utility>

#include "tamedgk/lie_algebra.hpp"

namespace tgk {

// An identity of the underlying geometry failed; this always signals an
// implementation bug, never bad user input.
class IdentityError : public std::runtime_error {
 public:
  explicit IdentityError(const std::string& what) : std::runtime_error(what) {}
};

class TamingError : public std::runtime_error {
 public:
  explicit TamingError(const std::string& what) : std::runtime_error(what) {}
};

struct AlmostComplexStructure {
  RatMatrix j;
  explicit AlmostComplexStructure(RatMatrix m);
  bool operator==(const AlmostComplexStructure&) const = default;
};

struct Metric {
  RatMatrix m;
  explicit Metric(RatMatrix g);  // checks symmetric positive definite
  int dim() const { return m.rows(); }
  Rational operator()(const Vec& x, const Vec& y) const;
  bool operator==(const Metric&) const = default;
};

// N(e_i, e_j) stored for i < j; antisymmetric by extension.
class VectorValuedTwoForm {
 public:
  VectorValuedTwoForm() = default;
  explicit VectorValuedTwoForm(int dim);
  int dim() const { return dim_; }
  void set(int i, int j, const Vec& v);      // 1-based, i != j
  Vec eval_basis(int i, int j) const;        // 1-based
  Vec eval(const Vec& x, const Vec& y) const;
  bool zero() const;
  bool operator==(const VectorValuedTwoForm&) const = default;

 private:
  int dim_ = 0;
  std::vector<Vec> table_;  // (i,j) 0-based, full table
};

// N(X,Y) = [X,Y] - [JX,JY] + J[JX,Y] + J[X,JY]
VectorValuedTwoForm nijenhuis(const LieAlgebra& l, const RatMatrix& j);

// The symmetric bilinear form h(X,Y) = (Omega(JX,Y) - Omega(X,JY))/2,
// positive definite exactly when Omega tames J.
RatMatrix taming_form(const Form& omega, const RatMatrix& j);
bool tames(const LieAlgebra& l, const Form& omega, const RatMatrix& j);

// The full bihermitian data induced by a taming pair (Omega, J+).
struct TamedPackage {
  Form omega;  // the symplectic form
  AlmostComplexStructure j_plus;
  AlmostComplexStructure j_minus;  // -Omega^{-1} J+^* Omega
  Metric g;                        // (1/2) Omega((J+ + J-) . , .)
  Form b;                          // -(1/2) Omega((J+ - J-) . , .)
  Form omega_plus;                 // g(. , J+ .)
  Form omega_minus;                // g(. , J- .)
};

// Requires d Omega = 0, Omega nondegenerate and taming; J+ integrability is
// reported by callers, not enforced here.  All package invariants are
// verified exactly after construction.
TamedPackage induce_tamed_package(const LieAlgebra& l, const Form& omega, const RatMatrix& j_plus);

// d(J+ d omega+) = 0
bool skt_check(const LieAlgebra& l, const TamedPackage& pkg);

// The two identities of the d-omega / Nijenhuis comparison, returned as
// grade-3 residual forms; both must vanish identically:
//   (-J+ d w+ + db) - (1/2) sigma Omega(J- X, N+(Y,Z))
//   (-J- d w- - db) - (1/2) sigma Omega(J+ X, N-(Y,Z))
std::pair<Form, Form> prop22_residual(const LieAlgebra& l, const TamedPackage& pkg);

// Block operator on T + T*, stored as a 2n x 2n matrix over the basis
// (e_1..e_n, e^1..e^n).  2-form blocks act as X |-> beta(X, .).
struct GeneralizedEndomorphism {
  int n = 0;
  RatMatrix m;  // 2n x 2n
  RatMatrix block(int bi, int bj) const;  // 0 = T, 1 = T*
  bool squares_to_minus_id() const;
  // Orthogonality for <X+xi, Y+eta> = (xi(Y) + eta(X))/2.
  bool pairing_orthogonal() const;
  bool operator==(const GeneralizedEndomorphism&) const = default;
};

GeneralizedEndomorphism generalized_from_symplectic(const Form& omega);

// Builds (J1, J2) from the quadruple (g, b, J+, J-) via the b-conjugated
// block formula, checks J1 against the symplectic block operator and J2
// against its closed form, and verifies square / orthogonality /
// commutation / positivity of G = -J1 J2.  Throws IdentityError on any
// mismatch.
std::pair<GeneralizedEndomorphism, GeneralizedEndomorphism> build_generalized_pair(const TamedPackage& pkg);

// The positive-definiteness witness for G = -J1 J2: the symmetric matrix of
// <G u, v> over the natural pairing.
RatMatrix generalized_metric_form(const GeneralizedEndomorphism& g1, const GeneralizedEndomorphism& g2);

}  // namespace tgk
