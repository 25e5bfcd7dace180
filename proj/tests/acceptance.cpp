// Acceptance suite: runs every criterion end to end and prints one
// PASS/FAIL line per criterion.  All comparisons are exact (rational
// equality); no tolerances.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tamedgk/analyze.hpp"
#include "tamedgk/cli.hpp"
#include "tamedgk/fixtures.hpp"

using namespace tgk;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void note(const std::string& text) { g_notes.push_back(text); }

void line(int criterion, const std::string& what, bool pass, const std::string& detail = "") {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << criterion << ": " << what;
  if (!detail.empty()) std::cout << " -- " << detail;
  std::cout << "\n";
  for (const std::string& n : g_notes) std::cout << "       " << n << "\n";
  g_notes.clear();
  if (!pass) ++g_failures;
}

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

Vec vec_of(int n, std::initializer_list<std::pair<int, int>> entries) {
  Vec v = zero_vec(n);
  for (auto [label, c] : entries) v[(size_t)(label - 1)] = c;
  return v;
}

// ---------------------------------------------------------------------------

void criterion1() {
  StructurePackage sp = fixture("hyperelliptic");
  TamedPackage tp = tamed(sp);
  RatMatrix expected = endo_from_table(4, {vec_of(4, {{2, -1}, {3, 1}}), vec_of(4, {{4, -1}}),
                                           vec_of(4, {{1, -1}, {4, -1}}), vec_of(4, {{2, 1}})});
  bool jm_ok = tp.j_minus.j == expected;
  bool np_zero = nijenhuis(sp.algebra, tp.j_plus.j).zero();
  bool nm_nonzero = !nijenhuis(sp.algebra, tp.j_minus.j).zero();
  bool taming = tames(sp.algebra, sp.forms.at("Omega"), sp.endomorphisms.at("J"));
  line(1, "hyperelliptic reproduction: J- table, N+ = 0, N- != 0, taming",
       jm_ok && np_zero && nm_nonzero && taming);
}

void criterion2() {
  StructurePackage sp = fixture("solv6");
  TamedPackage tp = tamed(sp);
  const LieAlgebra& l = sp.algebra;
  bool all = true;

  RatMatrix jm_expected = endo_from_table(
      6, {vec_of(6, {{6, -1}}), vec_of(6, {{1, 1}, {5, -1}}), vec_of(6, {{4, -1}}), vec_of(6, {{3, 1}}),
          vec_of(6, {{2, 1}, {6, -1}}), vec_of(6, {{1, 1}})});
  bool jm_ok = tp.j_minus.j == jm_expected;
  all = all && jm_ok;
  note(std::string("J- table: ") + (jm_ok ? "matches the classical table entry for entry" : "MISMATCH"));

  RatMatrix g = RatMatrix::identity(6);
  g.at(0, 4) = rat(1, 2); g.at(4, 0) = rat(1, 2);
  g.at(1, 5) = rat(1, 2); g.at(5, 1) = rat(1, 2);
  bool g_ok = tp.g.m == g;
  all = all && g_ok;
  note(std::string("g matrix: ") + (g_ok ? "matches with off-diagonal entries +1/2" : "MISMATCH") +
       " (the -1/2 variant sometimes quoted is inconsistent with w+ and taming positivity; see ledger)");

  Form wp(6, 2);
  wp.add_term({1, 2}, 1); wp.add_term({3, 4}, 1); wp.add_term({5, 6}, 1);
  wp.add_term({1, 6}, rat(1, 2)); wp.add_term({2, 5}, rat(-1, 2));
  bool wp_ok = tp.omega_plus == wp;
  all = all && wp_ok;
  note(std::string("w+: ") + (wp_ok ? "matches e12 + e34 + e56 + (1/2)(e16 - e25) exactly" : "MISMATCH"));

  Form wm(6, 2);
  wm.add_term({1, 2}, rat(1, 2)); wm.add_term({3, 4}, 1); wm.add_term({5, 6}, rat(1, 2));
  wm.add_term({2, 5}, rat(1, 2)); wm.add_term({1, 6}, 1);
  bool wm_ok = tp.omega_minus == wm;
  all = all && wm_ok;
  note(std::string("w-: ") + (wm_ok ? "matches e34 + (1/2)(e12 + e56 + e25) plus the forced e16 term" : "MISMATCH"));

  RatMatrix q_expected = endo_from_table(
      6, {vec_of(6, {{1, 1}, {5, -2}}), vec_of(6, {{2, -1}, {6, 2}}), zero_vec(6), zero_vec(6),
          vec_of(6, {{1, 2}, {5, -1}}), vec_of(6, {{2, -2}, {6, 1}})});
  bool q_ok = commutator_q(tp) == q_expected;
  all = all && q_ok;
  note(std::string("Q table: ") + (q_ok ? "matches -1 times the classical table" : "MISMATCH") +
       " (the classical sign choice contradicts Q = (J+ - J-)(J+ + J-) and the Q~ table; see ledger)");

  Multivector qt = q_tilde(l, tp);
  RatMatrix sharp = sharp_operator(qt);
  bool qt_ok = sharp.col(0) == vec_of(6, {{5, -1}}) && sharp.col(1) == vec_of(6, {{6, 1}}) &&
               vec_is_zero(sharp.col(2)) && vec_is_zero(sharp.col(3)) && sharp.col(4) == vec_of(6, {{1, 1}}) &&
               sharp.col(5) == vec_of(6, {{2, -1}});
  Multivector qt_expected(6, 2);
  qt_expected.add_term({5, 1}, 1);
  qt_expected.add_term({2, 6}, 1);
  qt_ok = qt_ok && (qt == qt_expected);
  all = all && qt_ok;
  note(std::string("Q~ table: ") + (qt_ok ? "matches e51 + e26 entry for entry (normalization (1/2)[J+,J-]g^{-1})" : "MISMATCH"));

  SkewEndo se(commutator_q(tp), tp.g);
  ImageAnalysis ia = image_analysis(l, se);
  std::vector<Vec> span = {basis_vec(6, 1), basis_vec(6, 2), basis_vec(6, 5), basis_vec(6, 6)};
  bool im_ok = ia.rank == 4 && span_rank(ia.image_basis) == 4;
  for (const Vec& v : span) im_ok = im_ok && in_span(ia.image_basis, v);
  for (const Vec& v : ia.image_basis) im_ok = im_ok && in_span(span, v);
  all = all && im_ok;
  note(std::string("Im(Q): ") + (im_ok ? "= span{e1, e2, e5, e6}" : "MISMATCH"));

  Form jdwp = pullback(l.d(tp.omega_plus), tp.j_plus.j);
  Form jdwp_expected(6, 3);
  jdwp_expected.add_term({2, 5, 6}, rat(-1, 2));
  bool jdwp_ok = jdwp == jdwp_expected;
  all = all && jdwp_ok;
  note(std::string("J+dw+: ") + (jdwp_ok ? "support {e256}, coefficient magnitude 1/2 (value -1/2 e256 = db here)" : "MISMATCH"));

  Form jdwm = pullback(l.d(tp.omega_minus), tp.j_minus.j);
  Form jdwm_expected(6, 3);
  jdwm_expected.add_term({1, 2, 6}, rat(-1, 2));
  jdwm_expected.add_term({2, 5, 6}, rat(1, 2));
  bool jdwm_ok = jdwm == jdwm_expected && abs(jdwm.component({1, 2, 6})) == rat(1, 2);
  all = all && jdwm_ok;
  note(std::string("J-dw-: ") + (jdwm_ok ? "coefficient on e126 has magnitude 1/2; full value -1/2 e126 + 1/2 e256" : "MISMATCH") +
       " (the e256 term is forced by w- and J-; quoting -1/2 e126 alone contradicts the cyclic Nijenhuis identity)");

  Multivector br = schouten_bracket_self(l, qt);
  Multivector br_expected(6, 3);
  br_expected.add_term({1, 2, 6}, -2);
  bool br_ok = br == br_expected && abs(br.component({1, 2, 6})) == 2;
  all = all && br_ok;
  note(std::string("[Q~,Q~]: ") + (br_ok ? "support {e126}, magnitude 2 (sign per the bracket orientation in the ledger)" : "MISMATCH"));

  PsiTensor psi = psi_tensor(l, tp);
  Form row5(6, 2);
  row5.add_term({1, 2}, 1); row5.add_term({2, 5}, -1); row5.add_term({5, 6}, 1);
  Form row6(6, 2);
  row6.add_term({2, 6}, 1); row6.add_term({1, 5}, -1);
  bool psi_ok = psi.row(5) == row5 && psi.row(6) == row6;
  for (int a : {1, 2, 3, 4}) psi_ok = psi_ok && psi.row(a).zero();
  all = all && psi_ok;
  note(std::string("psi: ") + (psi_ok ? "equals e5 (x) (e12 - e25 + e56) + e6 (x) (e26 - e15) slot for slot" : "MISMATCH"));

  line(2, "solv6 reproduction: all tables exact under the printed convention ledger", all);
}

void criterion3() {
  StructurePackage sp = fixture("solv6");
  TamedPackage tp = tamed(sp);
  const LieAlgebra& l = sp.algebra;
  Multivector qt = q_tilde(l, tp);

  TwistingSolutions sol = solve_twisting_standard(l, qt);
  bool solvable = sol.solvable;
  bool eq_ok = solvable && lambda_pullback(qt, sol.particular).scaled(rat(1, 2)) == schouten_bracket_self(l, qt);
  bool closed_ok = solvable && l.d(sol.particular).zero();

  Multivector lp = lambda_pullback(qt, Form::basis_element(6, {2, 5, 6}));
  Multivector plus_e126(6, 3), minus_e126(6, 3);
  plus_e126.add_term({1, 2, 6}, 1);
  minus_e126.add_term({1, 2, 6}, -1);
  bool lp_ok = (lp == plus_e126) || (lp == minus_e126);

  Form plus4(6, 3), minus4(6, 3);
  plus4.add_term({2, 5, 6}, 4);
  minus4.add_term({2, 5, 6}, -4);
  bool member_ok = twisting_solution_contains(l, qt, plus4) || twisting_solution_contains(l, qt, minus4);

  note("Lambda^3 Q~#(e256) = " + lp.str() + "; solver representative " + (solvable ? sol.particular.str() : "-"));
  line(3, "solv6 twisted-Poisson data: defining equation, d phi = 0, e256 pullback, +-4 e256 membership",
       solvable && eq_ok && closed_ok && lp_ok && member_ok);
}

void criterion4() {
  bool all = true;
  for (const FixtureFile& f : builtin_examples()) {
    StructurePackage sp = fixture(f.name);
    // the fixture package itself
    AnalysisOutcome o = analyze_text(f.text);
    bool fix_ok = o.exit_code == kExitOk;
    for (const auto& [n, p] : o.report.identity_suite) fix_ok = fix_ok && p;
    // 50 random tamed packages per fixture algebra
    auto batch = verify::run_identity_batch(sp.algebra, sp.forms.at("Omega"), sp.endomorphisms.at("J"), 0xACCE5,
                                            50, verify::Execution::openmp);
    int passed = 0;
    for (const auto& item : batch) passed += item.pass;
    bool batch_ok = passed == 50;
    if (!batch_ok)
      for (const auto& item : batch)
        if (!item.pass) { note(f.name + " seed " + std::to_string(item.seed) + ": " + item.failures.front()); break; }
    note(f.name + ": fixture suite " + (fix_ok ? "clean" : "FAILED") + ", 50/50 random packages " +
         (batch_ok ? "clean" : (std::to_string(passed) + "/50")));
    all = all && fix_ok && batch_ok;
  }
  line(4, "identity suites exact on all fixtures and 50 random tamed packages each", all);
}

void criterion5() {
  bool all = true;
  for (const FixtureFile& f : builtin_examples()) {
    StructurePackage sp = fixture(f.name);
    TamedPackage tp = tamed(sp);
    auto batch = verify::run_schouten_batch(sp.algebra, tp.g, 0x5C08, 100, verify::Execution::openmp);
    int passed = 0;
    for (const auto& item : batch) passed += item.pass;
    note(f.name + ": " + std::to_string(passed) + "/100 random skew endomorphisms agree across all three routes");
    all = all && (passed == 100);
  }
  line(5, "Schouten oracle equivalence on 100 random skew endomorphisms per fixture", all);
}

void criterion6() {
  bool rank_ok = true;
  bool frakn_ok = true;
  std::string counterexample;
  for (const char* name : {"hyperelliptic", "torus4"}) {
    StructurePackage sp = fixture(name);
    verify::Rng rng(0xD14);
    int built = 0;
    while (built < 25) {
      auto omega = verify::random_taming_form(sp.algebra, sp.forms.at("Omega"), sp.endomorphisms.at("J"), rng);
      if (!omega) break;
      TamedPackage tp = induce_tamed_package(sp.algebra, *omega, sp.endomorphisms.at("J"));
      RatMatrix q = commutator_q(tp);
      int r = q.rank();
      if (r != 0 && r != 4) rank_ok = false;
      HolomorphyResult h = frakN_holomorphy(sp.algebra, tp);
      if (!h.holomorphic && frakn_ok) {
        frakn_ok = false;
        counterexample = std::string(name) + " algebra, Omega = " + omega->str();
      }
      ++built;
    }
  }
  line(6, "dim-4: rank(Q) in {0,4} on 50 random packages", rank_ok);
  if (!frakn_ok) {
    note("the claim fails already on the shipped hyperelliptic fixture: frakN(e1,e3) = 3(e1+e4) != 0,");
    note("corroborated exactly by four passing identities (prop22-, chern-psi, dim4 bracket, psi/frakN");
    note("cross-derivation); only the full alternation of psi^(3,0) vanishes in dimension 4.");
    note("See the decisions ledger and the --convention output for the analysis.");
  }
  line(6, "dim-4: frakN = 0 on every tamed package", frakn_ok,
       frakn_ok ? "" : "exact counterexample: " + counterexample);
}

void criterion7() {
  bool all = true;
  for (const FixtureFile& f : builtin_examples()) {
    StructurePackage sp = fixture(f.name);
    TamedPackage tp = tamed(sp);
    const LieAlgebra& l = sp.algebra;
    bool ok = true;
    Connection lc = levi_civita(l, tp.g);  // factory-verified: metric + torsion-free
    ok = ok && preserves_metric(l, lc, tp.g) && torsion_free(l, lc);
    Connection bp = bismut(l, tp.g, tp.j_plus, tp);
    ok = ok && preserves_metric(l, bp, tp.g) && preserves_endomorphism(bp, tp.j_plus.j);
    Connection bm = bismut(l, tp.g, tp.j_minus, tp);
    ok = ok && preserves_metric(l, bm, tp.g) && preserves_endomorphism(bm, tp.j_minus.j);
    Connection dp = chern(l, tp.g, tp.j_plus, tp);
    ok = ok && preserves_metric(l, dp, tp.g) && preserves_endomorphism(dp, tp.j_plus.j);
    TorsionResult t = torsion_3form(l, bp, tp.g);
    Form jdwp = pullback(l.d(tp.omega_plus), tp.j_plus.j);
    ok = ok && t.skew && (t.three_form == -jdwp || t.three_form == jdwp);
    ok = ok && (l.d(t.three_form).zero() == skt_check(l, tp));
    note(f.name + ": connection contracts " + (ok ? "hold exactly" : "FAILED"));
    all = all && ok;
  }
  line(7, "Levi-Civita / Bismut / Chern contracts and torsion identities on all fixtures", all);
}

void criterion8() {
  bool rt = true;
  for (const FixtureFile& f : builtin_examples()) {
    StructurePackage p1 = parse_structure_file(f.text);
    StructurePackage p2 = parse_structure_file(serialize_structure_file(p1));
    rt = rt && (p1 == p2);
  }

  auto malformed = [&](const std::string& text, const std::string& fragment) {
    std::string path = "/tmp/tgk_acceptance_bad.alg";
    {
      std::ofstream out(path);
      out << text;
    }
    std::ostringstream out, err;
    int rc = run_cli({"analyze", path}, out, err);
    std::string all = out.str() + err.str();
    bool ok = rc == kExitParse && all.find("line") != std::string::npos &&
              all.find("col") != std::string::npos && all.find(fragment) != std::string::npos;
    if (!ok) note("malformed case '" + fragment + "': exit " + std::to_string(rc));
    return ok;
  };
  bool bad_ok = malformed("dim = 4\nd e1 = e25\n", "index out of range") &&
                malformed("d e1 = e24\n", "missing dim") &&
                malformed("dim = 4\nd e1 = e24\nd e1 = e23\n", "duplicate");
  line(8, "parser round-trip on fixtures; malformed inputs exit 1 with line/column", rt && bad_ok);
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  std::cout << "== convention ledger ==\n" << convention_ledger() << "\n== criteria ==\n";
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  auto t1 = std::chrono::steady_clock::now();
  std::cout << "\n" << (g_failures ? "FAILURES: " + std::to_string(g_failures) : std::string("all criteria passed"))
            << "  (" << std::chrono::duration<double>(t1 - t0).count() << " s)\n";
  return g_failures ? 1 : 0;
}
