#include "tamedgk/analyze.hpp"

#include <ostream>

namespace tgk {

namespace {

const RatMatrix* find_endo(const StructurePackage& pkg, const std::string& name) {
  auto it = pkg.endomorphisms.find(name);
  return it == pkg.endomorphisms.end() ? nullptr : &it->second;
}

const Form* find_form(const StructurePackage& pkg, const std::string& name) {
  auto it = pkg.forms.find(name);
  return it == pkg.forms.end() ? nullptr : &it->second;
}

std::map<std::string, std::string> endo_table(const RatMatrix& m) {
  std::map<std::string, std::string> t;
  for (int j = 0; j < m.cols(); ++j) t["e" + std::to_string(j + 1)] = vec_str(m.col(j));
  return t;
}

struct Inputs {
  const LieAlgebra* algebra;
  const Form* omega;
  const RatMatrix* j;
};

// Shared prechecks for analyze and check: pulls J and Omega out of the
// package and validates the algebra-independent requirements.
int prepare(const StructurePackage& pkg, Inputs& in, std::string& error) {
  in.algebra = &pkg.algebra;
  in.omega = find_form(pkg, "Omega");
  in.j = find_endo(pkg, "J");
  if (!in.j) {
    error = "missing endomorphism J";
    return kExitParse;
  }
  if (!in.omega) {
    error = "missing form Omega";
    return kExitParse;
  }
  if (in.omega->grade() != 2) {
    error = "Omega must be a 2-form";
    return kExitParse;
  }
  return kExitOk;
}

}  // namespace

AnalysisOutcome analyze_package(const StructurePackage& pkg, const std::string& digest) {
  AnalysisOutcome out;
  out.report.input_digest = digest;

  Inputs in{};
  if (int rc = prepare(pkg, in, out.error); rc != kExitOk) {
    out.exit_code = rc;
    return out;
  }
  const LieAlgebra& l = *in.algebra;

  out.report.jacobi = l.jacobi();
  if (!out.report.jacobi) {
    out.exit_code = kExitJacobi;
    out.error = "structure equations violate the Jacobi identity";
    return out;
  }

  out.report.omega_closed = l.d(*in.omega).zero();
  try {
    AlmostComplexStructure probe(*in.j);
    out.report.tames = tames(l, *in.omega, *in.j);
  } catch (const std::invalid_argument& e) {
    out.exit_code = kExitOmega;
    out.error = e.what();
    return out;
  }
  if (!*out.report.omega_closed || !*out.report.tames) {
    out.exit_code = kExitOmega;
    out.error = !*out.report.omega_closed ? "Omega is not closed" : "Omega does not tame J";
    return out;
  }

  try {
    TamedPackage tp = induce_tamed_package(l, *in.omega, *in.j);
    out.report.jplus_integrable = nijenhuis(l, tp.j_plus.j).zero();
    out.report.jminus_table = endo_table(tp.j_minus.j);
    out.report.jminus_integrable = nijenhuis(l, tp.j_minus.j).zero();
    out.report.skt = skt_check(l, tp);

    bool pair_ok = true;
    try {
      build_generalized_pair(tp);
    } catch (const IdentityError&) {
      pair_ok = false;
    }
    out.report.generalized_pair_valid = pair_ok;

    RatMatrix q = commutator_q(tp);
    SkewEndo se(q, tp.g);
    ImageAnalysis ia = image_analysis(l, se);
    out.report.q_rank = ia.rank;
    out.report.imq_involutive = ia.involutive;
    out.report.imq_subalgebra = ia.subalgebra;

    Multivector qt = q_tilde(l, tp);
    out.report.schouten_qq = schouten_bracket_self(l, qt).str();

    TwistingSolutions sol = solve_twisting_standard(l, qt);
    TwistReportEntry te;
    te.solvable = sol.solvable;
    te.kernel_dim = static_cast<int>(sol.kernel.size());
    te.representative = sol.solvable ? sol.particular.str() : "";
    out.report.twisting_solutions = te;

    bool all_slots = solve_twisting_beta2(l, tp, SlotAction::all_slots).solvable;
    bool each_slot = solve_twisting_beta2(l, tp, SlotAction::each_slot).solvable;
    if (all_slots == each_slot)
      out.report.beta2_twisted = all_slots ? "yes" : "no";
    else
      out.report.beta2_twisted = std::string("all_slots=") + (all_slots ? "yes" : "no") +
                                 ",each_slot=" + (each_slot ? "yes" : "no");

    out.report.frakn_zero = frakN_holomorphy(l, tp).holomorphic;

    std::vector<verify::IdentityCheck> checks = verify::identity_suite(l, tp);
    for (const auto& c : checks) out.report.identity_suite.emplace_back(c.name, c.pass);
    if (!verify::all_pass(checks)) {
      out.exit_code = kExitIdentity;
      for (const auto& c : checks)
        if (!c.pass) {
          out.error = "identity violated: " + c.name + " (" + c.witness + ")";
          break;
        }
    }
  } catch (const IdentityError& e) {
    out.exit_code = kExitIdentity;
    out.error = e.what();
  } catch (const TamingError& e) {
    out.exit_code = kExitOmega;
    out.error = e.what();
  }
  return out;
}

AnalysisOutcome analyze_text(const std::string& file_text) {
  AnalysisOutcome out;
  out.report.input_digest = input_digest(file_text);
  try {
    StructurePackage pkg = parse_structure_file(file_text);
    return analyze_package(pkg, out.report.input_digest);
  } catch (const ParseError& e) {
    out.exit_code = kExitParse;
    out.error = e.what();
    return out;
  }
}

int check_identity(const StructurePackage& pkg, const std::string& name, std::ostream& out) {
  static const std::vector<std::string> known = {"prop22", "zabzine",   "lemma41",       "prop44",
                                                 "dim4",   "chern-psi", "schouten-modes"};
  if (std::find(known.begin(), known.end(), name) == known.end()) {
    out << "unknown identity: " << name << "\n";
    return kExitParse;
  }

  Inputs in{};
  std::string error;
  if (int rc = prepare(pkg, in, error); rc != kExitOk) {
    out << "error: " << error << "\n";
    return rc;
  }
  const LieAlgebra& l = *in.algebra;
  if (!l.jacobi()) {
    out << "error: structure equations violate the Jacobi identity\n";
    return kExitJacobi;
  }
  TamedPackage tp = [&] {
    try {
      return induce_tamed_package(l, *in.omega, *in.j);
    } catch (const std::exception& e) {
      throw TamingError(e.what());
    }
  }();

  bool pass = true;
  if (name == "prop22") {
    auto [rp, rm] = prop22_residual(l, tp);
    out << "residual (+): " << rp.str() << "\n";
    out << "residual (-): " << rm.str() << "\n";
    pass = rp.zero() && rm.zero();
  } else if (name == "zabzine") {
    Multivector rp = zabzine_identity_residual(l, tp.g, tp.j_plus);
    Multivector rm = zabzine_identity_residual(l, tp.g, tp.j_minus);
    out << "residual (g, J+): " << rp.str() << "\n";
    out << "residual (g, J-): " << rm.str() << "\n";
    pass = rp.zero() && rm.zero();
  } else if (name == "lemma41") {
    Lemma41Result r = lemma41_residual(l, tp);
    out << "residual [beta2,beta2] - 4 sharp3^{-1}(J+dw+ + J-dw-): " << r.beta2_residual.str() << "\n";
    out << "[beta1,beta1]: " << r.beta1_bracket.str() << "\n";
    pass = r.beta2_residual.zero() && r.beta1_bracket.zero();
  } else if (name == "prop44" || name == "dim4") {
    if (name == "dim4" && l.dim() != 4) {
      out << "skipped: requires a 4-dimensional algebra\n";
      return kExitOk;
    }
    SkewEndo se(commutator_q(tp), tp.g);
    Multivector lhs = schouten_bracket(l, se, SchoutenMode::frame);
    Multivector rhs = brac_explicit_rhs(l, tp);
    Multivector res = lhs - rhs;
    out << "residual: " << res.str() << "\n";
    pass = res.zero();
  } else if (name == "chern-psi") {
    auto [re, im] = chern_derivative_identity_residual(l, tp);
    out << "residual (re): " << re.str() << "\n";
    out << "residual (im): " << im.str() << "\n";
    pass = re.zero() && im.zero();
  } else if (name == "schouten-modes") {
    SkewEndo se(commutator_q(tp), tp.g);
    Multivector fr = schouten_bracket(l, se, SchoutenMode::frame);
    Multivector lc = schouten_bracket(l, se, SchoutenMode::levi_civita);
    Multivector direct = schouten_bracket(l, se, SchoutenMode::prop33);
    out << "frame:       " << fr.str() << "\n";
    out << "levi-civita: " << lc.str() << "\n";
    out << "bracket:     " << direct.str() << "\n";
    pass = (fr == lc) && (fr == direct);
  }

  if (!pass) {
    out << "FAIL\n";
    return kExitIdentity;
  }
  out << "ok\n";
  return kExitOk;
}

}  // namespace tgk
