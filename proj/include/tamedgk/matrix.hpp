#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tamedgk/rational.hpp"

namespace tgk {

// Coordinate vector (0-based).  Doubles as the coordinate array of a
// covector; the variance is tracked by usage, not by type.
using Vec = std::vector<Rational>;

Vec zero_vec(int n);
Vec basis_vec(int n, int label);  // e_label, label is 1-based
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& c, const Vec& a);
bool vec_is_zero(const Vec& a);
std::string vec_str(const Vec& a);  // "-e2 + 1/2*e3", canonical

class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError() : std::runtime_error("matrix is singular") {}
};

// Dense exact-rational matrix.  Rectangular in general; endomorphisms are
// stored with columns as images of the basis vectors.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols);
  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  Vec col(int j) const;
  Vec row(int i) const;
  Vec apply(const Vec& v) const;  // matrix * column vector

  RatMatrix transposed() const;
  bool is_symmetric() const;
  bool is_antisymmetric() const;
  bool is_zero() const;

  Rational det() const;      // square only
  RatMatrix inverse() const; // square only; throws SingularMatrixError
  int rank() const;
  // Basis of the kernel {x : Ax = 0}, each of size cols().
  std::vector<Vec> nullspace() const;

  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix operator-() const;
  RatMatrix scaled(const Rational& c) const;
  bool operator==(const RatMatrix& o) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

// Exact Sylvester test: all leading principal minors positive.
// Rejects non-symmetric input.
bool is_positive_definite(const RatMatrix& m);

// Affine solution set of A x = b.
struct LinearSolution {
  bool solvable = false;
  Vec particular;           // one solution (free variables set to zero)
  std::vector<Vec> kernel;  // basis of the homogeneous solutions
  bool contains(const Vec& x) const;
};

LinearSolution solve_affine(const RatMatrix& a, const Vec& b);

// Rank of the span of a set of vectors.
int span_rank(const std::vector<Vec>& vectors);
// True when v lies in the span of the given vectors.
bool in_span(const std::vector<Vec>& vectors, const Vec& v);

}  // namespace tgk
