#include "doctest.h"
#include "tamedgk/fixtures.hpp"
#include "tamedgk/hermitian.hpp"
#include "tamedgk/parse.hpp"
#include "tamedgk/verify.hpp"

using namespace tgk;

namespace {

StructurePackage fixture(const std::string& name) { return parse_structure_file(*find_example(name)); }

TamedPackage tamed(const StructurePackage& sp) {
  return induce_tamed_package(sp.algebra, sp.forms.at("Omega"), sp.endomorphisms.at("J"));
}

RatMatrix endo_from_table(int n, const std::vector<Vec>& cols) {
  RatMatrix m(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) m.at(i, j) = cols[(size_t)j][(size_t)i];
  return m;
}

}  // namespace

TEST_CASE("almost complex structures must square to -id") {
  CHECK_THROWS_AS(AlmostComplexStructure(RatMatrix::identity(4)), std::invalid_argument);
  StructurePackage sp = fixture("torus4");
  CHECK_NOTHROW(AlmostComplexStructure(sp.endomorphisms.at("J")));
}

TEST_CASE("nijenhuis tensor: integrability of the fixture structures") {
  StructurePackage hyper = fixture("hyperelliptic");
  CHECK(nijenhuis(hyper.algebra, hyper.endomorphisms.at("J")).zero());
  TamedPackage tp = tamed(hyper);
  CHECK_FALSE(nijenhuis(hyper.algebra, tp.j_minus.j).zero());

  // any constant J on an abelian algebra is integrable
  StructurePackage torus = fixture("torus4");
  CHECK(nijenhuis(torus.algebra, torus.endomorphisms.at("J")).zero());
}

TEST_CASE("nijenhuis algebraic identities: antisymmetry and N(JX,Y) = -J N(X,Y)") {
  for (const char* name : {"hyperelliptic", "solv6"}) {
    StructurePackage sp = fixture(name);
    TamedPackage tp = tamed(sp);
    const int n = sp.algebra.dim();
    for (const RatMatrix* j : {&tp.j_plus.j, &tp.j_minus.j}) {
      VectorValuedTwoForm nj = nijenhuis(sp.algebra, *j);
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
          if (a == b) continue;
          Vec xy = nj.eval_basis(a, b);
          CHECK(add(xy, nj.eval_basis(b, a)) == zero_vec(n));
          Vec lhs = nj.eval(j->col(a - 1), basis_vec(n, b));
          Vec rhs = scale(Rational(-1), j->apply(xy));
          CHECK(lhs == rhs);
        }
    }
  }
}

TEST_CASE("taming is the positivity of the symmetrized form") {
  StructurePackage hyper = fixture("hyperelliptic");
  CHECK(tames(hyper.algebra, hyper.forms.at("Omega"), hyper.endomorphisms.at("J")));
  StructurePackage solv6 = fixture("solv6");
  CHECK(tames(solv6.algebra, solv6.forms.at("Omega"), solv6.endomorphisms.at("J")));
  StructurePackage torus = fixture("torus4");
  RatMatrix minus_j = torus.endomorphisms.at("J").scaled(Rational(-1));
  CHECK_FALSE(tames(torus.algebra, torus.forms.at("Omega"), minus_j));
}

TEST_CASE("taming is open: closed perturbations with eps = 1/1000 still tame") {
  for (const char* name : {"hyperelliptic", "solv6", "torus4"}) {
    StructurePackage sp = fixture(name);
    for (const Form& eta : sp.algebra.closed_forms_basis(2)) {
      Form perturbed = sp.forms.at("Omega") + eta.scaled(rat(1, 1000));
      CHECK(tames(sp.algebra, perturbed, sp.endomorphisms.at("J")));
    }
  }
}

TEST_CASE("induced package on the hyperelliptic fixture") {
  StructurePackage sp = fixture("hyperelliptic");
  TamedPackage tp = tamed(sp);
  Vec c1 = zero_vec(4); c1[1] = -1; c1[2] = 1;    // -e2 + e3
  Vec c2 = zero_vec(4); c2[3] = -1;               // -e4
  Vec c3 = zero_vec(4); c3[0] = -1; c3[3] = -1;   // -e1 - e4
  Vec c4 = zero_vec(4); c4[1] = 1;                // e2
  CHECK(tp.j_minus.j == endo_from_table(4, {c1, c2, c3, c4}));
}

TEST_CASE("induced package on the solv6 fixture") {
  StructurePackage sp = fixture("solv6");
  TamedPackage tp = tamed(sp);
  Vec c1 = zero_vec(6); c1[5] = -1;               // -e6
  Vec c2 = zero_vec(6); c2[0] = 1; c2[4] = -1;    // e1 - e5
  Vec c3 = zero_vec(6); c3[3] = -1;               // -e4
  Vec c4 = zero_vec(6); c4[2] = 1;                // e3
  Vec c5 = zero_vec(6); c5[1] = 1; c5[5] = -1;    // e2 - e6
  Vec c6 = zero_vec(6); c6[0] = 1;                // e1
  CHECK(tp.j_minus.j == endo_from_table(6, {c1, c2, c3, c4, c5, c6}));

  // the metric: identity with +1/2 at (1,5) and (2,6); positivity pins the
  // off-diagonal sign (see --convention)
  RatMatrix g = RatMatrix::identity(6);
  g.at(0, 4) = rat(1, 2); g.at(4, 0) = rat(1, 2);
  g.at(1, 5) = rat(1, 2); g.at(5, 1) = rat(1, 2);
  CHECK(tp.g.m == g);

  Form wp(6, 2);
  wp.add_term({1, 2}, Rational(1));
  wp.add_term({3, 4}, Rational(1));
  wp.add_term({5, 6}, Rational(1));
  wp.add_term({1, 6}, rat(1, 2));
  wp.add_term({2, 5}, rat(-1, 2));
  CHECK(tp.omega_plus == wp);

  // w- carries the forced e16 term on top of the familiar four
  Form wm(6, 2);
  wm.add_term({1, 2}, rat(1, 2));
  wm.add_term({3, 4}, Rational(1));
  wm.add_term({5, 6}, rat(1, 2));
  wm.add_term({2, 5}, rat(1, 2));
  wm.add_term({1, 6}, Rational(1));
  CHECK(tp.omega_minus == wm);
}

TEST_CASE("abelian Kaehler case collapses to J- = J+, b = 0, g = id") {
  StructurePackage sp = fixture("torus4");
  TamedPackage tp = tamed(sp);
  CHECK(tp.j_minus.j == tp.j_plus.j);
  CHECK(tp.b.zero());
  CHECK(tp.g.m == RatMatrix::identity(4));
}

TEST_CASE("taming and degeneracy failures are reported") {
  StructurePackage sp = fixture("torus4");
  RatMatrix minus_j = sp.endomorphisms.at("J").scaled(Rational(-1));
  CHECK_THROWS_AS(induce_tamed_package(sp.algebra, sp.forms.at("Omega"), minus_j), TamingError);
  Form degenerate = Form::basis_element(4, {1, 2});  // rank 2 only
  CHECK_THROWS_AS(induce_tamed_package(sp.algebra, degenerate, sp.endomorphisms.at("J")), TamingError);
  // non-closed Omega on the hyperelliptic algebra (d e13 = e234 != 0)
  StructurePackage hyper = fixture("hyperelliptic");
  Form not_closed = hyper.forms.at("Omega") + Form::basis_element(4, {1, 3});
  CHECK_FALSE(hyper.algebra.d(not_closed).zero());
  CHECK_THROWS_AS(induce_tamed_package(hyper.algebra, not_closed, hyper.endomorphisms.at("J")), TamingError);
}

TEST_CASE("SKT verdicts") {
  StructurePackage torus = fixture("torus4");
  CHECK(skt_check(torus.algebra, tamed(torus)));

  StructurePackage solv6 = fixture("solv6");
  TamedPackage tp = tamed(solv6);
  Form jdw = pullback(solv6.algebra.d(tp.omega_plus), tp.j_plus.j);
  Form expected(6, 3);
  expected.add_term({2, 5, 6}, rat(-1, 2));
  CHECK(jdw == expected);  // support {2,5,6}, coefficient magnitude 1/2
  CHECK(solv6.algebra.d(jdw).zero());
  CHECK(skt_check(solv6.algebra, tp));

  StructurePackage hyper = fixture("hyperelliptic");
  CHECK(skt_check(hyper.algebra, tamed(hyper)));
}

TEST_CASE("the two d-omega identities hold on every fixture") {
  for (const char* name : {"hyperelliptic", "solv6", "torus4"}) {
    StructurePackage sp = fixture(name);
    auto [rp, rm] = prop22_residual(sp.algebra, tamed(sp));
    CHECK(rp.zero());
    CHECK(rm.zero());
  }
}

TEST_CASE("tamed identity J+dw+ = db when J+ is integrable") {
  for (const char* name : {"hyperelliptic", "solv6"}) {
    StructurePackage sp = fixture(name);
    TamedPackage tp = tamed(sp);
    REQUIRE(nijenhuis(sp.algebra, tp.j_plus.j).zero());
    Form jdwp = pullback(sp.algebra.d(tp.omega_plus), tp.j_plus.j);
    CHECK(jdwp == sp.algebra.d(tp.b));
  }
}

TEST_CASE("generalized pair: block identities and invariants") {
  // Kaehler case: J2 = [[J, 0], [0, -J*]]
  StructurePackage torus = fixture("torus4");
  TamedPackage tp = tamed(torus);
  auto [j1, j2] = build_generalized_pair(tp);
  CHECK(j2.block(0, 0) == tp.j_plus.j);
  CHECK(j2.block(1, 1) == tp.j_plus.j.transposed().scaled(Rational(-1)));
  CHECK(j2.block(0, 1).is_zero());
  CHECK(j2.block(1, 0).is_zero());
  CHECK(j1 == generalized_from_symplectic(tp.omega));

  // the builder itself verifies squares, orthogonality, commutation,
  // positivity of G and both block routes; it must succeed on all fixtures
  for (const char* name : {"hyperelliptic", "solv6"}) {
    StructurePackage sp = fixture(name);
    CHECK_NOTHROW(build_generalized_pair(tamed(sp)));
  }
}

TEST_CASE("generalized metric form is positive definite") {
  for (const char* name : {"hyperelliptic", "solv6", "torus4"}) {
    StructurePackage sp = fixture(name);
    auto [j1, j2] = build_generalized_pair(tamed(sp));
    RatMatrix gf = generalized_metric_form(j1, j2);
    CHECK(gf.is_symmetric());
    CHECK(is_positive_definite(gf));
  }
}
