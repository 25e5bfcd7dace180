#pragma once

#include "tamedgk/connection.hpp"

namespace tgk {

// Endomorphism skew-symmetric for a reference metric: g(QX,Y) = -g(X,QY).
struct SkewEndo {
  RatMatrix q;
  Metric g;
  SkewEndo(RatMatrix q_in, Metric g_in);
};

// The bivector of a skew endomorphism: as a covector-to-vector map it is
// Q composed with index raising.  Both defining routes (lowered 2-form
// raised on both slots, and Q after sharp-inverse) are computed and
// compared exactly.
Multivector bivector_from_skew(const LieAlgebra& l, const SkewEndo& se);

// (Lambda^3 pi-sharp phi)(a,b,c) = phi(pi#a, pi#b, pi#c)
Multivector lambda_pullback(const Multivector& pi, const Form& phi);

// Raise / lower every slot with the metric.
Multivector sharp_inverse(const Form& f, const Metric& g);
Form lower(const Multivector& t, const Metric& g);

enum class SchoutenMode { frame, levi_civita, prop33 };

// Schouten bracket of bivectors, graded-Leibniz frame expansion.  The
// normalization is the one under which a symplectic inverse is Poisson and
// [w^{-1}, w^{-1}] = sharp3^{-1}(2 J dw) holds verbatim; the two
// connection-flavoured routes below then carry a +2 sigma(...) right-hand
// side (see the convention ledger).
Multivector schouten_bracket(const LieAlgebra& l, const Multivector& pi, const Multivector& rho);
Multivector schouten_bracket_self(const LieAlgebra& l, const Multivector& pi);

// Three independent routes for [Q~, Q~]; they agree exactly.
//   frame:       graded-Leibniz expansion over the invariant frame
//   levi_civita: sharp3^{-1}( 2 sigma g((nabla^{LC}_{QX} Q) Y, Z) )
//   prop33:      sharp3^{-1}( 2 sigma g(X, [QY, QZ]) )
Multivector schouten_bracket(const LieAlgebra& l, const SkewEndo& se, SchoutenMode mode);

// [w^{-1}, w^{-1}] - sharp3^{-1}(2 J dw) for the almost Hermitian pair
// (g, J); must vanish identically.
Multivector zabzine_identity_residual(const LieAlgebra& l, const Metric& g, const AlmostComplexStructure& j);

// beta1 = w+^{-1} + w-^{-1} (= 2 Omega^{-1}, verified) and
// beta2 = w+^{-1} - w-^{-1} (= (J+ - J-) sharp^{-1}, verified).
std::pair<Multivector, Multivector> beta_bivectors(const TamedPackage& pkg);

// [beta2,beta2] - 4 sharp3^{-1}(J+ dw+ + J- dw-), plus [beta1,beta1]
// (both must vanish).
struct Lemma41Result {
  Multivector beta2_residual;
  Multivector beta1_bracket;
};
Lemma41Result lemma41_residual(const LieAlgebra& l, const TamedPackage& pkg);

// Affine solution set of a twisting-form problem over the closed 3-forms.
struct TwistingSolutions {
  bool solvable = false;
  Form particular;
  std::vector<Form> kernel;
  int closed_basis_size = 0;
};

// phi closed with (1/2) Lambda^3 pi# phi = [pi, pi].
TwistingSolutions solve_twisting_standard(const LieAlgebra& l, const Multivector& pi);
bool twisting_solution_contains(const LieAlgebra& l, const Multivector& pi, const Form& phi);

// A bivector with a verified twisting form: the constructor checks
// d phi = 0 and the defining equation exactly and refuses anything else.
struct TwistedPoissonCandidate {
  Multivector pi;
  Form phi;
  TwistedPoissonCandidate(const LieAlgebra& l, Multivector pi_in, Form phi_in);
};

// The beta2 condition J+ dw+ + J- dw- = (1/8) (J+ - J-) phi, under the two
// readings of an endomorphism acting on a 3-form.
enum class SlotAction { all_slots, each_slot };
TwistingSolutions solve_twisting_beta2(const LieAlgebra& l, const TamedPackage& pkg, SlotAction action);

// q(X,Y) = g(Q^{-1} X, Y) for invertible Q; 4 dq then solves the standard
// twisting problem for the bivector of Q (verified exactly).
Form q_inverse_form(const LieAlgebra& l, const SkewEndo& se);

// Right side of the explicit [Q~,Q~] formula assembled from N-, J dw and
// Q = [J+,J-]; in dimension four the shorter variant is used.  Returns the
// multivector that must equal the frame bracket of the Q~ bivector.
Multivector brac_explicit_rhs(const LieAlgebra& l, const TamedPackage& pkg);

// psi(X,Y,Z) = Omega(X, N-(Y,Z)), stored as a 1-form-indexed family of
// 2-forms.
class PsiTensor {
 public:
  PsiTensor() = default;
  PsiTensor(int dim, std::vector<Form> rows);
  int dim() const { return dim_; }
  const Form& row(int a) const { return rows_[static_cast<size_t>(a - 1)]; }  // psi(e_a, ., .)
  Rational at(int a, int b, int c) const;                                     // 1-based slots
  bool zero() const;
  Trilinear as_trilinear() const;
  bool operator==(const PsiTensor&) const = default;

 private:
  int dim_ = 0;
  std::vector<Form> rows_;
};

PsiTensor psi_tensor(const LieAlgebra& l, const TamedPackage& pkg);

// frakN(Y,Z) = N-(Y,Z) + J- N-(J+Y,Z) + J- N-(Y,J+Z) - N-(J+Y,J+Z);
// the (2,0)-part of Q~ is holomorphic iff frakN = 0 iff the (3,0)-part of
// psi vanishes.  The projection pair is computed both from frakN and from
// the eight-term expansion of psi and cross-checked.
struct HolomorphyResult {
  VectorValuedTwoForm frak_n;
  bool holomorphic = false;
  Trilinear psi30_re;
  Trilinear psi30_im;
};
HolomorphyResult frakN_holomorphy(const LieAlgebra& l, const TamedPackage& pkg);

// Difference of the two sides of the Chern-connection derivative identity
//   2 (D+_{X + i J+ X} S^{(0,2)})(Y,Z) = psi^{(0,3)}(X,Y,Z)
// as a (real, imaginary) pair of rational 3-tensors; must be (0,0).
std::pair<Trilinear, Trilinear> chern_derivative_identity_residual(const LieAlgebra& l, const TamedPackage& pkg);

// Rank / image / kernel / involutivity report for a skew endomorphism.
struct ImageAnalysis {
  int rank = 0;
  std::vector<Vec> image_basis;
  std::vector<Vec> kernel_basis;
  bool image_kernel_orthogonal = false;
  bool involutive = false;
  bool subalgebra = false;  // coincides with involutivity for invariant spans
};
ImageAnalysis image_analysis(const LieAlgebra& l, const SkewEndo& se);

// Q = [J+, J-] = J+ J- - J- J+ of a tamed package.
RatMatrix commutator_q(const TamedPackage& pkg);

// The Q~ bivector normalized as (1/2)[J+,J-] g^{-1}; equals
// (J+ - J-) Omega^{-1} (verified exactly).
Multivector q_tilde(const LieAlgebra& l, const TamedPackage& pkg);

// Restriction of a skew endomorphism to its image, when that image is a
// subalgebra; the restricted metric and endomorphism feed the invertible
// machinery on the leaf.
struct LeafRestriction {
  Subalgebra sub;
  SkewEndo restricted;
};
LeafRestriction restrict_skew_to_image(const LieAlgebra& l, const SkewEndo& se);

}  // namespace tgk
