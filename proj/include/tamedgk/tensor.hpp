#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tamedgk/matrix.hpp"
#include "tamedgk/rational.hpp"

namespace tgk {

// Basis labels are 1-based (e1, e12, ...); coordinate arrays are 0-based.
using IndexTuple = std::vector<int>;

// Sorts a tuple, returning the permutation sign, or 0 on a repeated index.
inline std::pair<int, IndexTuple> sort_signed(IndexTuple t) {
  int sign = 1;
  for (size_t i = 1; i < t.size(); ++i)
    for (size_t j = i; j > 0 && t[j] < t[j - 1]; --j) {
      std::swap(t[j], t[j - 1]);
      sign = -sign;
    }
  for (size_t i = 1; i < t.size(); ++i)
    if (t[i] == t[i - 1]) return {0, t};
  return {sign, t};
}

// Lexicographic list of all strictly increasing k-tuples in 1..n.
std::vector<IndexTuple> increasing_tuples(int n, int k);

std::string tuple_str(const IndexTuple& t, int dim);

// Antisymmetric tensor with the determinant wedge convention:
// e^{i1...ik}(e_{i1},...,e_{ik}) = 1, no 1/k! factors anywhere.
// Components are stored on strictly increasing tuples only; an absent tuple
// is zero.  The template flag only tags the variance (Form = covariant,
// Multivector = contravariant); the component algebra is identical.
template <bool kCovariant>
class Alternating {
 public:
  Alternating() = default;
  // Grades above the dimension are allowed and hold only the zero tensor,
  // so the differential is total on all grades.
  Alternating(int dim, int grade) : dim_(dim), grade_(grade) {
    if (grade < 0) throw std::invalid_argument("grade out of range");
  }
  static Alternating basis_element(int dim, const IndexTuple& idx) {
    Alternating a(dim, static_cast<int>(idx.size()));
    a.add_term(idx, Rational(1));
    return a;
  }

  int dim() const { return dim_; }
  int grade() const { return grade_; }
  bool zero() const { return comp_.empty(); }
  const std::map<IndexTuple, Rational>& components() const { return comp_; }

  Rational component(const IndexTuple& idx) const {
    auto [sign, sorted] = sort_signed(idx);
    if (sign == 0) return Rational(0);
    auto it = comp_.find(sorted);
    if (it == comp_.end()) return Rational(0);
    return sign * it->second;
  }

  void add_term(const IndexTuple& idx, const Rational& c) {
    if (static_cast<int>(idx.size()) != grade_) throw std::invalid_argument("term grade mismatch");
    for (int i : idx)
      if (i < 1 || i > dim_) throw std::out_of_range("tensor index out of range");
    if (rat_is_zero(c)) return;
    auto [sign, sorted] = sort_signed(idx);
    if (sign == 0) return;
    Rational& slot = comp_[sorted];
    slot += sign * c;
    if (rat_is_zero(slot)) comp_.erase(sorted);
  }

  Alternating& operator+=(const Alternating& o) {
    check_same(o);
    for (const auto& [idx, c] : o.comp_) add_term(idx, c);
    return *this;
  }
  Alternating& operator-=(const Alternating& o) {
    check_same(o);
    for (const auto& [idx, c] : o.comp_) add_term(idx, -c);
    return *this;
  }
  Alternating operator+(const Alternating& o) const {
    Alternating r = *this;
    r += o;
    return r;
  }
  Alternating operator-(const Alternating& o) const {
    Alternating r = *this;
    r -= o;
    return r;
  }
  Alternating operator-() const { return scaled(Rational(-1)); }
  Alternating scaled(const Rational& c) const {
    Alternating r(dim_, grade_);
    if (rat_is_zero(c)) return r;
    for (const auto& [idx, v] : comp_) r.comp_[idx] = c * v;
    return r;
  }

  bool operator==(const Alternating& o) const {
    return dim_ == o.dim_ && grade_ == o.grade_ && comp_ == o.comp_;
  }

  // Canonical "e12 + 1/2*e16" rendering, terms in lexicographic order.
  std::string str() const {
    if (comp_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : comp_) {
      Rational v = c;
      if (first) {
        if (sgn(v) < 0) {
          os << "-";
          v = -v;
        }
        first = false;
      } else {
        os << (sgn(v) < 0 ? " - " : " + ");
        if (sgn(v) < 0) v = -v;
      }
      if (v != 1) os << rat_str(v) << "*";
      os << tuple_str(idx, dim_);
    }
    return os.str();
  }

 private:
  void check_same(const Alternating& o) const {
    if (dim_ != o.dim_ || grade_ != o.grade_) throw std::invalid_argument("tensor shape mismatch");
  }

  int dim_ = 0;
  int grade_ = 0;
  std::map<IndexTuple, Rational> comp_;
};

using Form = Alternating<true>;
using Multivector = Alternating<false>;

template <bool C>
Alternating<C> wedge(const Alternating<C>& a, const Alternating<C>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge dimension mismatch");
  Alternating<C> r(a.dim(), a.grade() + b.grade());
  for (const auto& [ia, ca] : a.components())
    for (const auto& [ib, cb] : b.components()) {
      IndexTuple merged = ia;
      merged.insert(merged.end(), ib.begin(), ib.end());
      r.add_term(merged, ca * cb);
    }
  return r;
}

// Multilinear alternating evaluation: a Form eats vectors, a Multivector
// eats covectors (both given as coordinate arrays).
template <bool C>
Rational evaluate(const Alternating<C>& t, const std::vector<Vec>& args) {
  if (static_cast<int>(args.size()) != t.grade()) throw std::invalid_argument("evaluation arity mismatch");
  const int k = t.grade();
  Rational total(0);
  for (const auto& [idx, c] : t.components()) {
    // det of the k x k matrix with (a,b) entry args[b][idx[a]-1]
    RatMatrix m(k, k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        m.at(a, b) = args[static_cast<size_t>(b)][static_cast<size_t>(idx[static_cast<size_t>(a)] - 1)];
    total += c * m.det();
  }
  return total;
}

// Applies a linear map to every argument slot:
//   result(x1,...,xk) = src(A x1, ..., A xk)
// evaluated on basis arguments, where the xi live in whatever space the
// source tensor eats.  This one engine gives pullback by an endomorphism
// (Form -> Form with A = J), index raising (Form -> Multivector with
// A = g^{-1}), index lowering (Multivector -> Form with A = g) and the
// Lambda^3 pi-pullback (Form -> Multivector with A = pi-sharp).
template <bool CSrc, bool CDst>
Alternating<CDst> transform_slots(const Alternating<CSrc>& src, const RatMatrix& a) {
  Alternating<CDst> r(src.dim(), src.grade());
  if (src.zero()) return r;
  for (const IndexTuple& idx : increasing_tuples(src.dim(), src.grade())) {
    std::vector<Vec> args;
    args.reserve(idx.size());
    for (int j : idx) args.push_back(a.col(j - 1));
    Rational v = evaluate(src, args);
    if (!rat_is_zero(v)) r.add_term(idx, v);
  }
  return r;
}

// (J . alpha)(X1,...,Xk) = alpha(J X1, ..., J Xk)
inline Form pullback(const Form& f, const RatMatrix& j) { return transform_slots<true, true>(f, j); }

// Antisymmetric matrix <-> grade-2 tensor, entry (i,j) = value(e_i, e_j).
template <bool C>
RatMatrix grade2_matrix(const Alternating<C>& t) {
  if (t.grade() != 2) throw std::invalid_argument("grade-2 tensor expected");
  RatMatrix m(t.dim(), t.dim());
  for (const auto& [idx, c] : t.components()) {
    m.at(idx[0] - 1, idx[1] - 1) = c;
    m.at(idx[1] - 1, idx[0] - 1) = -c;
  }
  return m;
}

template <bool C>
Alternating<C> grade2_from_matrix(const RatMatrix& m) {
  if (m.rows() != m.cols() || !m.is_antisymmetric())
    throw std::invalid_argument("antisymmetric matrix expected");
  Alternating<C> t(m.rows(), 2);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.cols(); ++j)
      if (!rat_is_zero(m.at(i, j))) t.add_term({i + 1, j + 1}, m.at(i, j));
  return t;
}

// Matrix of the flat map X |-> omega(X, .) of a 2-form (covector coords).
RatMatrix flat_operator(const Form& omega);
// Matrix of the sharp map alpha |-> pi(alpha, .) of a bivector.
RatMatrix sharp_operator(const Multivector& pi);
// Bivector pi with pi-sharp = (omega-flat)^{-1}; throws on degenerate omega.
Multivector inverse_bivector(const Form& omega);

// Dense trilinear map T(X,Y,Z) on the algebra, 0-based coordinates.
class Trilinear {
 public:
  Trilinear() = default;
  explicit Trilinear(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim * dim, Rational(0)) {}

  int dim() const { return dim_; }
  Rational& at(int i, int j, int k) { return a_[idx(i, j, k)]; }
  const Rational& at(int i, int j, int k) const { return a_[idx(i, j, k)]; }

  bool zero() const;
  bool alternating() const;
  Trilinear operator+(const Trilinear& o) const;
  Trilinear operator-(const Trilinear& o) const;
  Trilinear scaled(const Rational& c) const;
  bool operator==(const Trilinear& o) const = default;

  // Multilinear evaluation on arbitrary coordinate vectors.
  Rational eval(const Vec& x, const Vec& y, const Vec& z) const;
  // T(A., B., C.) with endomorphism matrices applied slotwise.
  Trilinear compose(const RatMatrix& a, const RatMatrix& b, const RatMatrix& c) const;

  std::string str() const;

 private:
  size_t idx(int i, int j, int k) const {
    return (static_cast<size_t>(i) * dim_ + j) * dim_ + k;
  }
  int dim_ = 0;
  std::vector<Rational> a_;
};

// (sigma T)(X,Y,Z) = T(X,Y,Z) + T(Y,Z,X) + T(Z,X,Y)
Trilinear cyclic_sum(const Trilinear& t);

Trilinear form_to_trilinear(const Form& f);  // grade 3
Form trilinear_to_form(const Trilinear& t);  // throws if not alternating

}  // namespace tgk
