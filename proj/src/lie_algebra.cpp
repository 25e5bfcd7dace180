#include "tamedgk/lie_algebra.hpp"

#include <stdexcept>

namespace tgk {

LieAlgebra::LieAlgebra(int dim, std::vector<Form> d_basis) : dim_(dim), d_basis_(std::move(d_basis)) {
  if (static_cast<int>(d_basis_.size()) != dim) throw std::invalid_argument("need one d e^k per basis form");
  for (const Form& f : d_basis_)
    if (f.dim() != dim || f.grade() != 2) throw std::invalid_argument("d e^k must be a 2-form");
  brk_.assign(static_cast<size_t>(dim), std::vector<Vec>(static_cast<size_t>(dim), zero_vec(dim)));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      if (i == j) continue;
      Vec v = zero_vec(dim);
      for (int k = 0; k < dim; ++k) {
        Rational c = d_basis_[static_cast<size_t>(k)].component({i + 1, j + 1});
        if (!rat_is_zero(c)) v[static_cast<size_t>(k)] = -c;
      }
      brk_[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(v);
    }
}

LieAlgebra LieAlgebra::abelian(int dim) {
  std::vector<Form> d(static_cast<size_t>(dim), Form(dim, 2));
  return LieAlgebra(dim, std::move(d));
}

const Form& LieAlgebra::d_basis_oneform(int k) const {
  if (k < 1 || k > dim_) throw std::out_of_range("basis label out of range");
  return d_basis_[static_cast<size_t>(k - 1)];
}

const Vec& LieAlgebra::bracket_basis(int i, int j) const {
  return brk_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  Vec r = zero_vec(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (rat_is_zero(x[static_cast<size_t>(i)])) continue;
    for (int j = 0; j < dim_; ++j) {
      if (rat_is_zero(y[static_cast<size_t>(j)])) continue;
      const Vec& b = brk_[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (vec_is_zero(b)) continue;
      Rational c = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
      for (int k = 0; k < dim_; ++k) r[static_cast<size_t>(k)] += c * b[static_cast<size_t>(k)];
    }
  }
  return r;
}

Form LieAlgebra::d(const Form& f) const {
  if (f.dim() != dim_) throw std::invalid_argument("form dimension mismatch");
  Form out(dim_, f.grade() + 1);
  for (const auto& [idx, c] : f.components()) {
    for (size_t t = 0; t < idx.size(); ++t) {
      // d(e^{i1...ik}) = sum_t (-1)^{t-1} d(e^{it}) ^ e^{rest}
      const Form& de = d_basis_[static_cast<size_t>(idx[t] - 1)];
      if (de.zero()) continue;
      IndexTuple rest;
      for (size_t s = 0; s < idx.size(); ++s)
        if (s != t) rest.push_back(idx[s]);
      Form restf = Form::basis_element(dim_, rest);
      Rational sign((t % 2 == 0) ? 1 : -1);
      out += wedge(de, restf).scaled(c * sign);
    }
  }
  return out;
}

bool LieAlgebra::jacobi() const {
  for (int k = 1; k <= dim_; ++k)
    if (!d(d_basis_oneform(k)).zero()) return false;
  return true;
}

bool LieAlgebra::span_involutive(const std::vector<Vec>& span) const {
  for (size_t i = 0; i < span.size(); ++i)
    for (size_t j = i + 1; j < span.size(); ++j)
      if (!in_span(span, bracket(span[i], span[j]))) return false;
  return true;
}

std::vector<Form> LieAlgebra::closed_forms_basis(int grade) const {
  std::vector<IndexTuple> dom = increasing_tuples(dim_, grade);
  std::vector<IndexTuple> cod = increasing_tuples(dim_, grade + 1);
  std::map<IndexTuple, int> cod_pos;
  for (size_t i = 0; i < cod.size(); ++i) cod_pos[cod[i]] = static_cast<int>(i);
  RatMatrix m(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
  for (size_t j = 0; j < dom.size(); ++j) {
    Form df = d(Form::basis_element(dim_, dom[j]));
    for (const auto& [idx, c] : df.components()) m.at(cod_pos[idx], static_cast<int>(j)) = c;
  }
  std::vector<Form> basis;
  for (const Vec& v : m.nullspace()) {
    Form f(dim_, grade);
    for (size_t j = 0; j < dom.size(); ++j)
      if (!rat_is_zero(v[j])) f.add_term(dom[j], v[j]);
    basis.push_back(std::move(f));
  }
  return basis;
}

Trilinear bracket_trilinear(const LieAlgebra& l, const RatMatrix& g) {
  Trilinear t(l.dim());
  for (int i = 1; i <= l.dim(); ++i)
    for (int j = 1; j <= l.dim(); ++j)
      for (int k = 1; k <= l.dim(); ++k) {
        Vec gb = g.apply(l.bracket_basis(j, k));
        t.at(i - 1, j - 1, k - 1) = gb[static_cast<size_t>(i - 1)];
      }
  return t;
}

Subalgebra restrict_to_span(const LieAlgebra& l, const std::vector<Vec>& span) {
  if (!l.span_involutive(span)) throw std::invalid_argument("span is not a subalgebra");
  const int r = static_cast<int>(span.size());
  if (span_rank(span) != r) throw std::invalid_argument("span vectors must be independent");
  RatMatrix basis(l.dim(), r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < l.dim(); ++i) basis.at(i, j) = span[static_cast<size_t>(j)][static_cast<size_t>(i)];
  // Express [f_i, f_j] in the span basis and read the structure constants.
  std::vector<Form> d_basis(static_cast<size_t>(r), Form(r, 2));
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      Vec br = l.bracket(span[static_cast<size_t>(i)], span[static_cast<size_t>(j)]);
      LinearSolution sol = solve_affine(basis, br);
      if (!sol.solvable) throw std::logic_error("involutive span failed to absorb a bracket");
      for (int k = 0; k < r; ++k) {
        Rational coeff = sol.particular[static_cast<size_t>(k)];
        if (!rat_is_zero(coeff)) d_basis[static_cast<size_t>(k)].add_term({i + 1, j + 1}, -coeff);
      }
    }
  return Subalgebra{LieAlgebra(r, std::move(d_basis)), std::move(basis)};
}

}  // namespace tgk
