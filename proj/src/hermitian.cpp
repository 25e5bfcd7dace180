#include "tamedgk/hermitian.hpp"

namespace tgk {

namespace {

Rational bilinear(const RatMatrix& w, const Vec& x, const Vec& y) {
  Rational total(0);
  for (int i = 0; i < w.rows(); ++i) {
    if (rat_is_zero(x[static_cast<size_t>(i)])) continue;
    for (int j = 0; j < w.cols(); ++j)
      if (!rat_is_zero(y[static_cast<size_t>(j)]) && !rat_is_zero(w.at(i, j)))
        total += x[static_cast<size_t>(i)] * w.at(i, j) * y[static_cast<size_t>(j)];
  }
  return total;
}

}  // namespace

AlmostComplexStructure::AlmostComplexStructure(RatMatrix m) : j(std::move(m)) {
  if (j.rows() != j.cols()) throw std::invalid_argument("endomorphism must be square");
  if (!(j * j == RatMatrix::identity(j.rows()).scaled(Rational(-1))))
    throw std::invalid_argument("J^2 != -id");
}

Metric::Metric(RatMatrix g) : m(std::move(g)) {
  if (!is_positive_definite(m)) throw std::invalid_argument("metric must be symmetric positive definite");
}

Rational Metric::operator()(const Vec& x, const Vec& y) const { return bilinear(m, x, y); }

VectorValuedTwoForm::VectorValuedTwoForm(int dim)
    : dim_(dim), table_(static_cast<size_t>(dim) * dim, zero_vec(dim)) {}

void VectorValuedTwoForm::set(int i, int j, const Vec& v) {
  if (i == j) throw std::invalid_argument("diagonal entry of an antisymmetric table");
  table_[static_cast<size_t>((i - 1) * dim_ + (j - 1))] = v;
  table_[static_cast<size_t>((j - 1) * dim_ + (i - 1))] = scale(Rational(-1), v);
}

Vec VectorValuedTwoForm::eval_basis(int i, int j) const {
  return table_[static_cast<size_t>((i - 1) * dim_ + (j - 1))];
}

Vec VectorValuedTwoForm::eval(const Vec& x, const Vec& y) const {
  Vec r = zero_vec(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (rat_is_zero(x[static_cast<size_t>(i)])) continue;
    for (int j = 0; j < dim_; ++j) {
      if (rat_is_zero(y[static_cast<size_t>(j)])) continue;
      const Vec& v = table_[static_cast<size_t>(i * dim_ + j)];
      if (vec_is_zero(v)) continue;
      Rational c = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
      for (int k = 0; k < dim_; ++k) r[static_cast<size_t>(k)] += c * v[static_cast<size_t>(k)];
    }
  }
  return r;
}

bool VectorValuedTwoForm::zero() const {
  for (const Vec& v : table_)
    if (!vec_is_zero(v)) return false;
  return true;
}

VectorValuedTwoForm nijenhuis(const LieAlgebra& l, const RatMatrix& j) {
  const int n = l.dim();
  VectorValuedTwoForm out(n);
  for (int a = 1; a <= n; ++a) {
    Vec ja = j.col(a - 1);
    for (int b = a + 1; b <= n; ++b) {
      Vec jb = j.col(b - 1);
      Vec ea = basis_vec(n, a), eb = basis_vec(n, b);
      Vec v = l.bracket(ea, eb);
      v = sub(v, l.bracket(ja, jb));
      v = add(v, j.apply(l.bracket(ja, eb)));
      v = add(v, j.apply(l.bracket(ea, jb)));
      if (!vec_is_zero(v)) out.set(a, b, v);
    }
  }
  return out;
}

RatMatrix taming_form(const Form& omega, const RatMatrix& j) {
  RatMatrix w = grade2_matrix(omega);
  return (j.transposed() * w - w * j).scaled(rat(1, 2));
}

bool tames(const LieAlgebra&, const Form& omega, const RatMatrix& j) {
  return is_positive_definite(taming_form(omega, j));
}

TamedPackage induce_tamed_package(const LieAlgebra& l, const Form& omega, const RatMatrix& j_plus) {
  const int n = l.dim();
  if (omega.dim() != n || omega.grade() != 2) throw std::invalid_argument("Omega must be a 2-form on the algebra");
  AlmostComplexStructure jp(j_plus);
  if (!l.d(omega).zero()) throw TamingError("Omega is not closed");
  RatMatrix w = grade2_matrix(omega);
  RatMatrix flat = flat_operator(omega);
  RatMatrix flat_inv;
  try {
    flat_inv = flat.inverse();
  } catch (const SingularMatrixError&) {
    throw TamingError("Omega is degenerate");
  }
  RatMatrix h = taming_form(omega, j_plus);
  if (!is_positive_definite(h)) throw TamingError("Omega does not tame J");

  RatMatrix jm_mat = (flat_inv * j_plus.transposed() * flat).scaled(Rational(-1));
  AlmostComplexStructure jm(jm_mat);
  Metric g(h);

  RatMatrix sum = j_plus + jm_mat;
  RatMatrix diff = j_plus - jm_mat;
  RatMatrix b_mat = (diff.transposed() * w).scaled(rat(-1, 2));
  Form b = grade2_from_matrix<true>(b_mat);
  Form omega_plus = grade2_from_matrix<true>(g.m * j_plus);
  Form omega_minus = grade2_from_matrix<true>(g.m * jm_mat);

  // Exact verification of every package invariant.
  if (!((sum.transposed() * w).scaled(rat(1, 2)) == h))
    throw IdentityError("g != (1/2) Omega((J+ + J-)., .)");
  if (!(h - b_mat == j_plus.transposed() * w)) throw IdentityError("g - b != Omega(J+ ., .)");
  if (!(h + b_mat == jm_mat.transposed() * w)) throw IdentityError("g + b != Omega(J- ., .)");
  if (!(j_plus.transposed() * w == (w * jm_mat).scaled(Rational(-1))))
    throw IdentityError("Omega(J+ ., .) != -Omega(., J- .)");
  if (!(jm_mat.transposed() * w == (w * j_plus).scaled(Rational(-1))))
    throw IdentityError("Omega(J- ., .) != -Omega(., J+ .)");
  if (!(j_plus.transposed() * h * j_plus == h)) throw IdentityError("g is not J+-invariant");
  if (!(jm_mat.transposed() * h * jm_mat == h)) throw IdentityError("g is not J--invariant");

  return TamedPackage{omega, jp, jm, std::move(g), std::move(b), std::move(omega_plus), std::move(omega_minus)};
}

bool skt_check(const LieAlgebra& l, const TamedPackage& pkg) {
  Form jdw = pullback(l.d(pkg.omega_plus), pkg.j_plus.j);
  return l.d(jdw).zero();
}

std::pair<Form, Form> prop22_residual(const LieAlgebra& l, const TamedPackage& pkg) {
  const int n = l.dim();
  RatMatrix w = grade2_matrix(pkg.omega);
  Form jdwp = pullback(l.d(pkg.omega_plus), pkg.j_plus.j);
  Form jdwm = pullback(l.d(pkg.omega_minus), pkg.j_minus.j);
  Form db = l.d(pkg.b);
  VectorValuedTwoForm np = nijenhuis(l, pkg.j_plus.j);
  VectorValuedTwoForm nm = nijenhuis(l, pkg.j_minus.j);

  auto sigma_term = [&](const RatMatrix& j_other, const VectorValuedTwoForm& nj) {
    Trilinear t(n);
    for (int a = 1; a <= n; ++a) {
      Vec ja = j_other.col(a - 1);
      for (int b = 1; b <= n; ++b)
        for (int c = 1; c <= n; ++c) {
          if (b == c) continue;
          t.at(a - 1, b - 1, c - 1) = bilinear(w, ja, nj.eval_basis(b, c));
        }
    }
    return trilinear_to_form(cyclic_sum(t));
  };

  Form res_plus = (-jdwp + db) - sigma_term(pkg.j_minus.j, np).scaled(rat(1, 2));
  Form res_minus = (-jdwm - db) - sigma_term(pkg.j_plus.j, nm).scaled(rat(1, 2));
  return {res_plus, res_minus};
}

RatMatrix GeneralizedEndomorphism::block(int bi, int bj) const {
  RatMatrix r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = m.at(bi * n + i, bj * n + j);
  return r;
}

bool GeneralizedEndomorphism::squares_to_minus_id() const {
  return m * m == RatMatrix::identity(2 * n).scaled(Rational(-1));
}

bool GeneralizedEndomorphism::pairing_orthogonal() const {
  RatMatrix p(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    p.at(i, n + i) = rat(1, 2);
    p.at(n + i, i) = rat(1, 2);
  }
  return m.transposed() * p * m == p;
}

GeneralizedEndomorphism generalized_from_symplectic(const Form& omega) {
  const int n = omega.dim();
  RatMatrix flat = flat_operator(omega);
  RatMatrix flat_inv = flat.inverse();
  RatMatrix m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m.at(i, n + j) = flat_inv.at(i, j);
      m.at(n + i, j) = -flat.at(i, j);
    }
  return GeneralizedEndomorphism{n, std::move(m)};
}

namespace {

RatMatrix assemble_blocks(int n, const RatMatrix& a, const RatMatrix& b, const RatMatrix& c, const RatMatrix& d) {
  RatMatrix m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m.at(i, j) = a.at(i, j);
      m.at(i, n + j) = b.at(i, j);
      m.at(n + i, j) = c.at(i, j);
      m.at(n + i, n + j) = d.at(i, j);
    }
  return m;
}

}  // namespace

RatMatrix generalized_metric_form(const GeneralizedEndomorphism& g1, const GeneralizedEndomorphism& g2) {
  const int n = g1.n;
  RatMatrix gm = (g1.m * g2.m).scaled(Rational(-1));
  RatMatrix p(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    p.at(i, n + i) = rat(1, 2);
    p.at(n + i, i) = rat(1, 2);
  }
  return gm.transposed() * p;
}

std::pair<GeneralizedEndomorphism, GeneralizedEndomorphism> build_generalized_pair(const TamedPackage& pkg) {
  const int n = pkg.g.dim();
  const RatMatrix& jp = pkg.j_plus.j;
  const RatMatrix& jm = pkg.j_minus.j;
  RatMatrix sum = jp + jm;
  RatMatrix sum_inv;
  try {
    sum_inv = sum.inverse();
  } catch (const SingularMatrixError&) {
    throw IdentityError("J+ + J- is singular on a tamed package");
  }

  RatMatrix flat_omega = flat_operator(pkg.omega);
  RatMatrix flat_omega_inv = flat_omega.inverse();
  RatMatrix flat_b = flat_operator(pkg.b);
  RatMatrix wp_inv = flat_operator(pkg.omega_plus).inverse();
  RatMatrix wm_inv = flat_operator(pkg.omega_minus).inverse();
  RatMatrix flat_wp = flat_operator(pkg.omega_plus);
  RatMatrix flat_wm = flat_operator(pkg.omega_minus);

  // b-transform: J_i = (1/2) [[1,0],[b,1]] M_i [[1,0],[-b,1]].
  // (The sign of the conjugation is pinned by J1 = J_Omega together with
  // b = -(1/2) Omega((J+ - J-)., .); see the convention ledger.)
  auto conjugate = [&](const RatMatrix& m11, const RatMatrix& m12, const RatMatrix& m21, const RatMatrix& m22) {
    RatMatrix a = m11 - m12 * flat_b;
    RatMatrix b2 = m12;
    RatMatrix c = flat_b * m11 + m21 - (flat_b * m12 + m22) * flat_b;
    RatMatrix d = flat_b * m12 + m22;
    return GeneralizedEndomorphism{n, assemble_blocks(n, a.scaled(rat(1, 2)), b2.scaled(rat(1, 2)),
                                                      c.scaled(rat(1, 2)), d.scaled(rat(1, 2)))};
  };

  GeneralizedEndomorphism j1 =
      conjugate(jm - jp, wm_inv + wp_inv, -(flat_wm + flat_wp), -(jm.transposed() - jp.transposed()));
  GeneralizedEndomorphism j2 =
      conjugate(jm + jp, wm_inv - wp_inv, -(flat_wm - flat_wp), -(jm.transposed() + jp.transposed()));

  if (!(j1 == generalized_from_symplectic(pkg.omega))) throw IdentityError("J1 != J_Omega");

  // Closed form of J2 (off-diagonal signs stated for this library's
  // flat/sharp conventions).
  RatMatrix sum_t_inv = (jp.transposed() + jm.transposed()).inverse();
  RatMatrix a2 = sum_inv.scaled(Rational(-2));
  RatMatrix b2 = flat_omega_inv * (jp.transposed() - jm.transposed()) * sum_t_inv;
  RatMatrix c2 = flat_omega * (jp - jm) * sum_inv;
  RatMatrix d2 = sum_t_inv.scaled(Rational(2));
  GeneralizedEndomorphism j2_closed{n, assemble_blocks(n, a2, b2, c2, d2)};
  if (!(j2 == j2_closed)) throw IdentityError("J2 block formula does not match its closed form");

  if (!j1.squares_to_minus_id() || !j2.squares_to_minus_id()) throw IdentityError("J_i^2 != -id");
  if (!j1.pairing_orthogonal() || !j2.pairing_orthogonal()) throw IdentityError("J_i not pairing-orthogonal");
  if (!(j1.m * j2.m == j2.m * j1.m)) throw IdentityError("J1 and J2 do not commute");
  RatMatrix gform = generalized_metric_form(j1, j2);
  if (!gform.is_symmetric() || !is_positive_definite(gform))
    throw IdentityError("G = -J1 J2 is not positive definite");

  return {std::move(j1), std::move(j2)};
}

}  // namespace tgk
