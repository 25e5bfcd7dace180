#include "tamedgk/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace tgk {

Vec zero_vec(int n) { return Vec(static_cast<size_t>(n), Rational(0)); }

Vec basis_vec(int n, int label) {
  if (label < 1 || label > n) throw std::out_of_range("basis vector label out of range");
  Vec v = zero_vec(n);
  v[static_cast<size_t>(label - 1)] = 1;
  return v;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Rational& c, const Vec& a) {
  Vec r = a;
  for (auto& x : r) x *= c;
  return r;
}

bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (!rat_is_zero(x)) return false;
  return true;
}

std::string vec_str(const Vec& a) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < a.size(); ++i) {
    if (rat_is_zero(a[i])) continue;
    Rational c = a[i];
    if (first) {
      if (sgn(c) < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    }
    if (c != 1) os << rat_str(c) << "*";
    os << "e" << (i + 1);
  }
  if (first) return "0";
  return os.str();
}

RatMatrix::RatMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, Rational(0)) {}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Vec RatMatrix::col(int j) const {
  Vec v(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i) v[static_cast<size_t>(i)] = at(i, j);
  return v;
}

Vec RatMatrix::row(int i) const {
  Vec v(static_cast<size_t>(cols_));
  for (int j = 0; j < cols_; ++j) v[static_cast<size_t>(j)] = at(i, j);
  return v;
}

Vec RatMatrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix/vector size mismatch");
  Vec r = zero_vec(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!rat_is_zero(at(i, j))) r[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
  return r;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool RatMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool RatMatrix::is_antisymmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i; j < cols_; ++j)
      if (at(i, j) != -at(j, i)) return false;
  return true;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!rat_is_zero(x)) return false;
  return true;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!rat_is_zero(m.at(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    Rational inv = Rational(1) / m.at(r, c);
    for (int j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || rat_is_zero(m.at(i, c))) continue;
      Rational f = m.at(i, c);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Rational RatMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
  RatMatrix m = *this;
  Rational d(1);
  for (int c = 0; c < cols_; ++c) {
    int p = -1;
    for (int i = c; i < rows_; ++i)
      if (!rat_is_zero(m.at(i, c))) {
        p = i;
        break;
      }
    if (p < 0) return Rational(0);
    if (p != c) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    Rational inv = Rational(1) / m.at(c, c);
    for (int i = c + 1; i < rows_; ++i) {
      if (rat_is_zero(m.at(i, c))) continue;
      Rational f = m.at(i, c) * inv;
      for (int j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return d;
}

RatMatrix RatMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  RatMatrix aug(rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  std::vector<int> piv = rref(aug);
  if (static_cast<int>(piv.size()) != rows_ || piv.back() >= cols_) throw SingularMatrixError();
  for (int i = 0; i < rows_; ++i)
    if (piv[static_cast<size_t>(i)] != i) throw SingularMatrixError();
  RatMatrix inv(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

int RatMatrix::rank() const {
  RatMatrix m = *this;
  return static_cast<int>(rref(m).size());
}

std::vector<Vec> RatMatrix::nullspace() const {
  RatMatrix m = *this;
  std::vector<int> piv = rref(m);
  std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
  for (int c : piv) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    Vec v = zero_vec(cols_);
    v[static_cast<size_t>(f)] = 1;
    for (size_t r = 0; r < piv.size(); ++r)
      v[static_cast<size_t>(piv[r])] = -m.at(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product size mismatch");
  RatMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (rat_is_zero(at(i, k))) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (!rat_is_zero(o.at(k, j))) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum size mismatch");
  RatMatrix r = *this;
  for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix diff size mismatch");
  RatMatrix r = *this;
  for (size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

RatMatrix RatMatrix::operator-() const {
  RatMatrix r = *this;
  for (auto& x : r.data_) x = -x;
  return r;
}

RatMatrix RatMatrix::scaled(const Rational& c) const {
  RatMatrix r = *this;
  for (auto& x : r.data_) x *= c;
  return r;
}

bool is_positive_definite(const RatMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("positive definiteness requires a symmetric matrix");
  for (int k = 1; k <= m.rows(); ++k) {
    RatMatrix minor(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor.at(i, j) = m.at(i, j);
    if (sgn(minor.det()) <= 0) return false;
  }
  return true;
}

bool LinearSolution::contains(const Vec& x) const {
  if (!solvable) return false;
  Vec diff = sub(x, particular);
  if (vec_is_zero(diff)) return true;
  return in_span(kernel, diff);
}

LinearSolution solve_affine(const RatMatrix& a, const Vec& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve_affine size mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[static_cast<size_t>(i)];
  }
  std::vector<int> piv = rref(aug);
  LinearSolution sol;
  if (!piv.empty() && piv.back() == a.cols()) return sol;  // inconsistent
  sol.solvable = true;
  sol.particular = zero_vec(a.cols());
  for (size_t r = 0; r < piv.size(); ++r)
    sol.particular[static_cast<size_t>(piv[r])] = aug.at(static_cast<int>(r), a.cols());
  std::vector<bool> is_pivot(static_cast<size_t>(a.cols()), false);
  for (int c : piv) is_pivot[static_cast<size_t>(c)] = true;
  for (int f = 0; f < a.cols(); ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    Vec v = zero_vec(a.cols());
    v[static_cast<size_t>(f)] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[static_cast<size_t>(piv[r])] = -aug.at(static_cast<int>(r), f);
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

int span_rank(const std::vector<Vec>& vectors) {
  if (vectors.empty()) return 0;
  RatMatrix m(static_cast<int>(vectors.size()), static_cast<int>(vectors.front().size()));
  for (size_t i = 0; i < vectors.size(); ++i)
    for (size_t j = 0; j < vectors[i].size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = vectors[i][j];
  return m.rank();
}

bool in_span(const std::vector<Vec>& vectors, const Vec& v) {
  if (vec_is_zero(v)) return true;
  if (vectors.empty()) return false;
  std::vector<Vec> all = vectors;
  int base = span_rank(all);
  all.push_back(v);
  return span_rank(all) == base;
}

}  // namespace tgk
