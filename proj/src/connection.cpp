#include "tamedgk/connection.hpp"

namespace tgk {

Vec Connection::nabla(const Vec& x, const Vec& y) const {
  Vec r = zero_vec(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (rat_is_zero(x[static_cast<size_t>(i)])) continue;
    for (int j = 0; j < dim_; ++j) {
      if (rat_is_zero(y[static_cast<size_t>(j)])) continue;
      const Vec& g = coeff(i, j);
      if (vec_is_zero(g)) continue;
      Rational c = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
      for (int k = 0; k < dim_; ++k) r[static_cast<size_t>(k)] += c * g[static_cast<size_t>(k)];
    }
  }
  return r;
}

Vec Connection::nabla_endo(int i, const RatMatrix& a, int j) const {
  // (nabla_{e_i} A)(e_j) = nabla_{e_i}(A e_j) - A nabla_{e_i} e_j
  Vec aej = a.col(j);
  Vec first = nabla(basis_vec(dim_, i + 1), aej);
  Vec second = a.apply(coeff(i, j));
  return sub(first, second);
}

bool preserves_metric(const LieAlgebra& l, const Connection& c, const Metric& g) {
  const int n = l.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Rational v = g(c.coeff(i, j), basis_vec(n, k + 1)) + g(basis_vec(n, j + 1), c.coeff(i, k));
        if (!rat_is_zero(v)) return false;
      }
  return true;
}

bool torsion_free(const LieAlgebra& l, const Connection& c) {
  const int n = l.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Vec t = sub(sub(c.coeff(i - 1, j - 1), c.coeff(j - 1, i - 1)), l.bracket_basis(i, j));
      if (!vec_is_zero(t)) return false;
    }
  return true;
}

bool preserves_endomorphism(const Connection& c, const RatMatrix& a) {
  for (int i = 0; i < c.dim(); ++i)
    for (int j = 0; j < c.dim(); ++j)
      if (!vec_is_zero(c.nabla_endo(i, a, j))) return false;
  return true;
}

Trilinear nabla_endo_tensor(const Connection& c, const Metric& g, const RatMatrix& a) {
  const int n = c.dim();
  Trilinear t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec v = g.m.apply(c.nabla_endo(i, a, j));
      for (int k = 0; k < n; ++k) t.at(i, j, k) = v[static_cast<size_t>(k)];
    }
  return t;
}

Trilinear nijenhuis_tensor_lowered(const LieAlgebra& l, const Metric& g, const VectorValuedTwoForm& n) {
  const int dim = l.dim();
  Trilinear t(dim);
  for (int x = 1; x <= dim; ++x)
    for (int y = 1; y <= dim; ++y)
      for (int z = 1; z <= dim; ++z) {
        if (y == z) continue;
        t.at(x - 1, y - 1, z - 1) = g(basis_vec(dim, x), n.eval_basis(y, z));
      }
  return t;
}

namespace {

// Builds the connection with g(nabla_X Y, Z) = g(LC) + corr(X,Y,Z).
Connection from_correction(const LieAlgebra& l, const Metric& g, const Connection& lc, const Trilinear& corr) {
  const int n = l.dim();
  RatMatrix ginv = g.m.inverse();
  Connection c(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec rhs = zero_vec(n);
      for (int k = 0; k < n; ++k) rhs[static_cast<size_t>(k)] = corr.at(i, j, k);
      c.coeff(i, j) = add(lc.coeff(i, j), ginv.apply(rhs));
    }
  return c;
}

}  // namespace

Connection levi_civita(const LieAlgebra& l, const Metric& g) {
  const int n = l.dim();
  RatMatrix ginv = g.m.inverse();
  Connection c(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Vec rhs = zero_vec(n);
      for (int k = 1; k <= n; ++k) {
        Rational v = g(l.bracket_basis(i, j), basis_vec(n, k)) - g(l.bracket_basis(j, k), basis_vec(n, i)) +
                     g(l.bracket_basis(k, i), basis_vec(n, j));
        rhs[static_cast<size_t>(k - 1)] = v / 2;
      }
      c.coeff(i - 1, j - 1) = ginv.apply(rhs);
    }
  if (!preserves_metric(l, c, g)) throw IdentityError("Levi-Civita factory: metricity failed");
  if (!torsion_free(l, c)) throw IdentityError("Levi-Civita factory: torsion-freeness failed");
  return c;
}

Connection bismut(const LieAlgebra& l, const Metric& g, const AlmostComplexStructure& j, const TamedPackage& pkg) {
  const bool plus = (j.j == pkg.j_plus.j);
  if (!plus && !(j.j == pkg.j_minus.j))
    throw std::invalid_argument("bismut: J must be the package J+ or J-");
  Connection lc = levi_civita(l, g);
  Trilinear corr(l.dim());
  if (plus) {
    Form jdw = pullback(l.d(pkg.omega_plus), pkg.j_plus.j);
    corr = form_to_trilinear(jdw).scaled(rat(-1, 2));
  } else {
    Form jdw = pullback(l.d(pkg.omega_minus), pkg.j_minus.j);
    Trilinear nt = nijenhuis_tensor_lowered(l, g, nijenhuis(l, pkg.j_minus.j));
    Trilinear combo = nt + cyclic_sum(nt);  // N- + 3 skew(N-)
    // The Nijenhuis block enters with + under this library's
    // N-(X,Y,Z) = g(X, N-(Y,Z)) convention; the - variant breaks nabla J- = 0.
    corr = combo.scaled(rat(1, 4)) + form_to_trilinear(jdw).scaled(rat(-1, 2));
  }
  Connection c = from_correction(l, g, lc, corr);
  if (!preserves_metric(l, c, g)) throw IdentityError("Bismut factory: metricity failed");
  if (!preserves_endomorphism(c, j.j)) throw IdentityError("Bismut factory: nabla J != 0");
  return c;
}

Connection chern(const LieAlgebra& l, const Metric& g, const AlmostComplexStructure& j_plus, const TamedPackage& pkg) {
  if (!(j_plus.j == pkg.j_plus.j)) throw std::invalid_argument("chern: J must be the package J+");
  Connection lc = levi_civita(l, g);
  Trilinear dw = form_to_trilinear(l.d(pkg.omega_plus));
  const int n = l.dim();
  Trilinear corr(n);
  for (int i = 0; i < n; ++i) {
    Vec jx = j_plus.j.col(i);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        corr.at(i, a, b) = dw.eval(jx, basis_vec(n, a + 1), basis_vec(n, b + 1)) / 2;
  }
  Connection c = from_correction(l, g, lc, corr);
  if (!preserves_metric(l, c, g)) throw IdentityError("Chern factory: metricity failed");
  if (!preserves_endomorphism(c, j_plus.j)) throw IdentityError("Chern factory: nabla J+ != 0");
  return c;
}

TorsionResult torsion_3form(const LieAlgebra& l, const Connection& conn, const Metric& g) {
  const int n = l.dim();
  Trilinear c(n);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      for (int z = 1; z <= n; ++z) {
        Vec t = sub(sub(conn.coeff(y - 1, z - 1), conn.coeff(z - 1, y - 1)), l.bracket_basis(y, z));
        c.at(x - 1, y - 1, z - 1) = g(basis_vec(n, x), t);
      }
  TorsionResult r;
  if (c.alternating()) {
    r.skew = true;
    r.three_form = trilinear_to_form(c);
    return r;
  }
  r.skew = false;
  r.three_form = Form(n, 3);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (c.at(x, y, z) != -c.at(y, x, z)) {
          r.witness = {x + 1, y + 1, z + 1};
          return r;
        }
  return r;
}

}  // namespace tgk
