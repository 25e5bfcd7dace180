#include "doctest.h"
#include "tamedgk/fixtures.hpp"
#include "tamedgk/parse.hpp"
#include "tamedgk/verify.hpp"

using namespace tgk;

namespace {

LieAlgebra fixture_algebra(const std::string& name) {
  return parse_structure_file(*find_example(name)).algebra;
}

Form random_form(verify::Rng& rng, int dim, int grade) {
  Form f(dim, grade);
  for (const IndexTuple& t : increasing_tuples(dim, grade)) {
    int c = rng.uniform(-2, 2);
    if (c) f.add_term(t, Rational(c));
  }
  return f;
}

Vec random_vec(verify::Rng& rng, int dim) {
  Vec v = zero_vec(dim);
  for (int i = 0; i < dim; ++i) v[(size_t)i] = rng.uniform(-2, 2);
  return v;
}

}  // namespace

TEST_CASE("brackets follow the pinned d/bracket convention") {
  LieAlgebra solv6 = fixture_algebra("solv6");
  // d e1 = e26 pins [e2, e6] = -e1
  CHECK(solv6.bracket_basis(2, 6) == scale(Rational(-1), basis_vec(6, 1)));
  CHECK(solv6.bracket_basis(1, 6) == basis_vec(6, 2));
  CHECK(solv6.bracket_basis(6, 2) == basis_vec(6, 1));
  CHECK(vec_is_zero(solv6.bracket_basis(1, 2)));

  LieAlgebra ab = LieAlgebra::abelian(4);
  verify::Rng rng(5);
  CHECK(vec_is_zero(ab.bracket(random_vec(rng, 4), random_vec(rng, 4))));
}

TEST_CASE("convention contract: d a (X,Y) + a([X,Y]) = 0 on all basis pairs") {
  for (const char* name : {"solv6", "hyperelliptic"}) {
    LieAlgebra l = fixture_algebra(name);
    for (int k = 1; k <= l.dim(); ++k) {
      Form alpha = Form::basis_element(l.dim(), {k});
      Form da = l.d(alpha);
      for (int i = 1; i <= l.dim(); ++i)
        for (int j = 1; j <= l.dim(); ++j) {
          Rational lhs = evaluate(da, {basis_vec(l.dim(), i), basis_vec(l.dim(), j)});
          Rational rhs = l.bracket_basis(i, j)[(size_t)(k - 1)];
          CHECK(lhs + rhs == 0);
        }
    }
  }
}

TEST_CASE("jacobi holds on the fixtures and fails when d^2 != 0") {
  CHECK(fixture_algebra("solv6").jacobi());
  CHECK(fixture_algebra("hyperelliptic").jacobi());
  CHECK(LieAlgebra::abelian(2).jacobi());

  // d e1 = e23, d e2 = e13, d e3 = 0: the d-squared oracle accepts this one
  std::vector<Form> ok(3, Form(3, 2));
  ok[0].add_term({2, 3}, Rational(1));
  ok[1].add_term({1, 3}, Rational(1));
  LieAlgebra heis(3, ok);
  CHECK(heis.d(heis.d_basis_oneform(1)).zero());
  CHECK(heis.jacobi());

  // d e1 = e12, d e2 = e13 violates d^2 = 0
  std::vector<Form> bad(3, Form(3, 2));
  bad[0].add_term({1, 2}, Rational(1));
  bad[1].add_term({1, 3}, Rational(1));
  LieAlgebra broken(3, bad);
  CHECK_FALSE(broken.d(broken.d_basis_oneform(2)).zero());
  CHECK_FALSE(broken.jacobi());
}

TEST_CASE("jacobi cyclic identity on random triples") {
  verify::Rng rng(11);
  for (const char* name : {"solv6", "hyperelliptic"}) {
    LieAlgebra l = fixture_algebra(name);
    for (int trial = 0; trial < 30; ++trial) {
      Vec x = random_vec(rng, l.dim()), y = random_vec(rng, l.dim()), z = random_vec(rng, l.dim());
      Vec s = add(add(l.bracket(l.bracket(x, y), z), l.bracket(l.bracket(y, z), x)), l.bracket(l.bracket(z, x), y));
      CHECK(vec_is_zero(s));
    }
  }
}

TEST_CASE("exterior derivative: worked values and d^2 = 0") {
  LieAlgebra solv6 = fixture_algebra("solv6");
  CHECK(solv6.d(Form::basis_element(6, {1, 2})).zero());
  // d Omega = 0 for both shipped symplectic forms
  for (const char* name : {"solv6", "hyperelliptic"}) {
    StructurePackage sp = parse_structure_file(*find_example(name));
    CHECK(sp.algebra.d(sp.forms.at("Omega")).zero());
  }
  verify::Rng rng(7);
  for (const char* name : {"solv6", "hyperelliptic"}) {
    LieAlgebra l = fixture_algebra(name);
    for (int grade = 1; grade <= 3; ++grade)
      for (int trial = 0; trial < 10; ++trial) CHECK(l.d(l.d(random_form(rng, l.dim(), grade))).zero());
  }
}

TEST_CASE("span involutivity") {
  LieAlgebra solv6 = fixture_algebra("solv6");
  std::vector<Vec> full;
  for (int i = 1; i <= 6; ++i) full.push_back(basis_vec(6, i));
  CHECK(solv6.span_involutive(full));
  CHECK(solv6.span_involutive({basis_vec(6, 1), basis_vec(6, 2), basis_vec(6, 5), basis_vec(6, 6)}));
  // brute-force check for span{e1, e6}: [e1,e6] = e2 escapes the span
  CHECK_FALSE(solv6.span_involutive({basis_vec(6, 1), basis_vec(6, 6)}));
}

TEST_CASE("closed forms basis") {
  LieAlgebra ab = LieAlgebra::abelian(4);
  CHECK(ab.closed_forms_basis(2).size() == 6);

  LieAlgebra hyper = fixture_algebra("hyperelliptic");
  std::vector<Form> closed2 = hyper.closed_forms_basis(2);
  auto contains = [&](const Form& f) {
    // membership in the rational span of the basis
    std::vector<IndexTuple> dom = increasing_tuples(4, 2);
    RatMatrix m((int)dom.size(), (int)closed2.size());
    Vec b((size_t)dom.size());
    std::map<IndexTuple, int> pos;
    for (size_t i = 0; i < dom.size(); ++i) pos[dom[i]] = (int)i;
    for (size_t j = 0; j < closed2.size(); ++j)
      for (const auto& [idx, c] : closed2[j].components()) m.at(pos[idx], (int)j) = c;
    for (const auto& [idx, c] : f.components()) b[(size_t)pos[idx]] = c;
    return solve_affine(m, b).solvable;
  };
  CHECK(contains(Form::basis_element(4, {1, 2})));
  CHECK(contains(Form::basis_element(4, {3, 4})));
  CHECK(contains(Form::basis_element(4, {2, 4})));
  for (const Form& f : closed2) CHECK(hyper.d(f).zero());

  LieAlgebra solv6 = fixture_algebra("solv6");
  std::vector<Form> closed3 = solv6.closed_forms_basis(3);
  CHECK(solv6.d(Form::basis_element(6, {2, 5, 6})).zero());
  // basis is independent and spans ker d (rank check)
  std::vector<IndexTuple> dom = increasing_tuples(6, 3);
  std::map<IndexTuple, int> pos;
  for (size_t i = 0; i < dom.size(); ++i) pos[dom[i]] = (int)i;
  std::vector<Vec> rows;
  for (const Form& f : closed3) {
    Vec r = zero_vec((int)dom.size());
    for (const auto& [idx, c] : f.components()) r[(size_t)pos[idx]] = c;
    rows.push_back(r);
  }
  CHECK(span_rank(rows) == (int)closed3.size());
  // every closed basis 3-form combination is hit: count dim ker d directly
  RatMatrix dmat((int)increasing_tuples(6, 4).size(), (int)dom.size());
  std::vector<IndexTuple> cod = increasing_tuples(6, 4);
  std::map<IndexTuple, int> cpos;
  for (size_t i = 0; i < cod.size(); ++i) cpos[cod[i]] = (int)i;
  for (size_t j = 0; j < dom.size(); ++j) {
    Form df = solv6.d(Form::basis_element(6, dom[j]));
    for (const auto& [idx, c] : df.components()) dmat.at(cpos[idx], (int)j) = c;
  }
  CHECK((int)closed3.size() == (int)dom.size() - dmat.rank());
}

TEST_CASE("restriction to an involutive span is a subalgebra") {
  LieAlgebra solv6 = fixture_algebra("solv6");
  std::vector<Vec> span = {basis_vec(6, 1), basis_vec(6, 2), basis_vec(6, 5), basis_vec(6, 6)};
  Subalgebra sub = restrict_to_span(solv6, span);
  CHECK(sub.algebra.dim() == 4);
  CHECK(sub.algebra.jacobi());
  // [f2, f4] in the restricted algebra corresponds to [e2, e6] = -e1
  CHECK(sub.algebra.bracket_basis(2, 4) == scale(Rational(-1), basis_vec(4, 1)));
  CHECK_THROWS_AS(restrict_to_span(solv6, {basis_vec(6, 1), basis_vec(6, 6)}), std::invalid_argument);
}
