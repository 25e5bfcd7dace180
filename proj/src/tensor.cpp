#include "tamedgk/tensor.hpp"

namespace tgk {

std::vector<IndexTuple> increasing_tuples(int n, int k) {
  std::vector<IndexTuple> out;
  if (k < 0 || k > n) return out;
  IndexTuple t(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) t[static_cast<size_t>(i)] = i + 1;
  while (true) {
    out.push_back(t);
    int i = k - 1;
    while (i >= 0 && t[static_cast<size_t>(i)] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++t[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) t[static_cast<size_t>(j)] = t[static_cast<size_t>(j - 1)] + 1;
  }
  if (k == 0) out = {IndexTuple{}};
  return out;
}

std::string tuple_str(const IndexTuple& t, int dim) {
  std::ostringstream os;
  os << "e";
  if (dim <= 9) {
    for (int i : t) os << i;
  } else {
    os << "(";
    for (size_t i = 0; i < t.size(); ++i) {
      if (i) os << ",";
      os << t[i];
    }
    os << ")";
  }
  return os.str();
}

RatMatrix flat_operator(const Form& omega) {
  if (omega.grade() != 2) throw std::invalid_argument("flat_operator expects a 2-form");
  RatMatrix w = grade2_matrix(omega);
  // column j = coordinates of omega(e_j, .), i.e. entry (i,j) = omega(e_j, e_i)
  return w.transposed();
}

RatMatrix sharp_operator(const Multivector& pi) {
  if (pi.grade() != 2) throw std::invalid_argument("sharp_operator expects a bivector");
  RatMatrix p = grade2_matrix(pi);
  // column j = pi(e^j, .), i.e. entry (i,j) = pi(e^j, e^i)
  return p.transposed();
}

Multivector inverse_bivector(const Form& omega) {
  RatMatrix sharp = flat_operator(omega).inverse();
  // sharp is the matrix of pi-sharp; recover components pi(e^i,e^j) = sharp(j,i)
  return grade2_from_matrix<false>(sharp.transposed());
}

bool Trilinear::zero() const {
  for (const auto& x : a_)
    if (!rat_is_zero(x)) return false;
  return true;
}

bool Trilinear::alternating() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        if (at(i, j, k) != -at(j, i, k)) return false;
        if (at(i, j, k) != -at(i, k, j)) return false;
      }
  return true;
}

Trilinear Trilinear::operator+(const Trilinear& o) const {
  Trilinear r = *this;
  for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Trilinear Trilinear::operator-(const Trilinear& o) const {
  Trilinear r = *this;
  for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

Trilinear Trilinear::scaled(const Rational& c) const {
  Trilinear r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

Rational Trilinear::eval(const Vec& x, const Vec& y, const Vec& z) const {
  Rational total(0);
  for (int i = 0; i < dim_; ++i) {
    if (rat_is_zero(x[static_cast<size_t>(i)])) continue;
    for (int j = 0; j < dim_; ++j) {
      if (rat_is_zero(y[static_cast<size_t>(j)])) continue;
      for (int k = 0; k < dim_; ++k) {
        if (rat_is_zero(z[static_cast<size_t>(k)]) || rat_is_zero(at(i, j, k))) continue;
        total += at(i, j, k) * x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)] * z[static_cast<size_t>(k)];
      }
    }
  }
  return total;
}

Trilinear Trilinear::compose(const RatMatrix& a, const RatMatrix& b, const RatMatrix& c) const {
  Trilinear r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) r.at(i, j, k) = eval(a.col(i), b.col(j), c.col(k));
  return r;
}

std::string Trilinear::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        if (rat_is_zero(at(i, j, k))) continue;
        if (!first) os << ", ";
        os << "(" << i + 1 << "," << j + 1 << "," << k + 1 << ")=" << rat_str(at(i, j, k));
        first = false;
      }
  if (first) return "0";
  return os.str();
}

Trilinear cyclic_sum(const Trilinear& t) {
  Trilinear r(t.dim());
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j)
      for (int k = 0; k < t.dim(); ++k) r.at(i, j, k) = t.at(i, j, k) + t.at(j, k, i) + t.at(k, i, j);
  return r;
}

Trilinear form_to_trilinear(const Form& f) {
  if (f.grade() != 3) throw std::invalid_argument("grade-3 form expected");
  Trilinear t(f.dim());
  for (int i = 0; i < f.dim(); ++i)
    for (int j = 0; j < f.dim(); ++j)
      for (int k = 0; k < f.dim(); ++k) t.at(i, j, k) = f.component({i + 1, j + 1, k + 1});
  return t;
}

Form trilinear_to_form(const Trilinear& t) {
  if (!t.alternating()) throw std::invalid_argument("trilinear map is not alternating");
  Form f(t.dim(), 3);
  for (int i = 0; i < t.dim(); ++i)
    for (int j = i + 1; j < t.dim(); ++j)
      for (int k = j + 1; k < t.dim(); ++k)
        if (!rat_is_zero(t.at(i, j, k))) f.add_term({i + 1, j + 1, k + 1}, t.at(i, j, k));
  return f;
}

}  // namespace tgk
