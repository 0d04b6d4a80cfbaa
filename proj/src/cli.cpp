#include "invforms/cli.hpp"

#include <fstream>
#include <iostream>
#include <ostream>
#include <set>

#include "invforms/crit.hpp"
#include "invforms/serial.hpp"

namespace invforms {

namespace {

Character resolve_character(const MatrixGroup& g, const GroupFile& gf,
                            const std::string& name) {
  if (name.empty() || name == "trivial") return trivial_character(g);
  if (name == "det") return det_character(g);
  if (name == "det^-1") return inverse_character(det_character(g));
  auto it = gf.characters.find(name);
  if (it == gf.characters.end())
    fail("ParseError", "unknown character: " + name);
  return character_extend(g, name, it->second);
}

void write_payload(const RunConfig& cfg, const json& payload) {
  if (cfg.out_path.empty()) return;
  std::ofstream out(cfg.out_path);
  if (!out) fail("ParseError", "cannot write " + cfg.out_path);
  out << payload.dump(2) << "\n";
}

void emit(const RunConfig& cfg, std::ostream& out, const json& payload,
          const std::string& text) {
  write_payload(cfg, payload);
  if (cfg.json)
    out << payload.dump(2) << "\n";
  else
    out << text;
}

std::string poly_brief(const Polynomial& p, bool verbose) {
  if (verbose) return p.to_string();
  return "degree " + std::to_string(p.degree()) + ", " +
         std::to_string(p.term_count()) + " terms";
}

json analyze_json(const MatrixGroup& g,
                  const std::vector<HyperplaneData>& table,
                  const ArrangementPolys& polys,
                  const std::vector<Reflection>& refl) {
  int transvections = 0;
  for (const auto& r : refl)
    if (r.transvection) ++transvections;
  std::set<int> orbits;
  json hs = json::array();
  for (const HyperplaneData& h : table) {
    orbits.insert(h.orbit);
    json hj;
    hj["l_H"] = h.l.coeffs();
    hj["e_H"] = h.e;
    hj["b_H"] = h.b;
    hj["orbit"] = h.orbit;
    hj["stabilizer_order"] = h.stab_order;
    hs.push_back(std::move(hj));
  }
  json j;
  j["group"] = {{"order", g.size()},
                {"n", g.dim()},
                {"transvections", transvections},
                {"diagonalizable_reflections", (int)refl.size() - transvections},
                {"hyperplane_orbits", (int)orbits.size()}};
  j["hyperplanes"] = std::move(hs);
  j["degrees"] = {{"q_det", polys.q_det.degree()},
                  {"q_tilde", polys.q_tilde.degree()},
                  {"delta", polys.delta_max.degree()}};
  return j;
}

std::string analyze_text(const MatrixGroup& g, const json& j, bool verbose,
                         const ArrangementPolys& polys) {
  std::ostringstream os;
  os << "group of order " << g.size() << " in GL_" << g.dim() << "(F_"
     << g.field()->order() << ")\n";
  os << "reflections: " << j["group"]["transvections"].get<int>()
     << " transvections, "
     << j["group"]["diagonalizable_reflections"].get<int>()
     << " diagonalizable\n";
  os << "reflecting hyperplanes (" << j["hyperplanes"].size() << ", "
     << j["group"]["hyperplane_orbits"].get<int>() << " orbit(s)):\n";
  for (const json& h : j["hyperplanes"]) {
    os << "  l_H = [";
    bool first = true;
    for (const json& c : h["l_H"]) {
      if (!first) os << ", ";
      first = false;
      os << c.get<uint32_t>();
    }
    os << "]  e_H = " << h["e_H"].get<int>() << "  b_H = " << h["b_H"].get<int>()
       << "  orbit " << h["orbit"].get<int>() << "  |G_H| = "
       << h["stabilizer_order"].get<int>() << "\n";
  }
  os << "deg Q_det = " << j["degrees"]["q_det"].get<int>()
     << ", deg Q(A~) = " << j["degrees"]["q_tilde"].get<int>()
     << ", deg delta = " << j["degrees"]["delta"].get<int>() << "\n";
  if (verbose) {
    os << "Q_det = " << polys.q_det.to_string() << "\n";
    os << "Q(A~) = " << polys.q_tilde.to_string() << "\n";
    os << "delta = " << polys.delta_max.to_string() << "\n";
  }
  return os.str();
}

std::string family_text(const GeneratorFamily& fam, bool verbose) {
  std::ostringstream os;
  os << "family " << to_string(fam.tag) << ": " << fam.notes << "\n";
  for (size_t i = 0; i < fam.invariant_polys.size(); ++i)
    os << "  f_" << (i + 1) << ": "
       << poly_brief(fam.invariant_polys[i], verbose) << "\n";
  for (size_t i = 0; i < fam.one_forms.size(); ++i) {
    os << "  w_" << (i + 1) << ": coefficient degree "
       << fam.one_forms[i].poly_degree();
    if (verbose) os << " = " << fam.one_forms[i].to_string();
    os << "\n";
  }
  return os.str();
}

std::string certificate_text(const FreenessCertificate& cert,
                             const std::string& name, bool verbose) {
  std::ostringstream os;
  os << name << ": " << (cert.passed ? "PASS" : "FAIL") << "\n";
  os << "  target degree " << cert.target.degree();
  if (cert.scalar) os << ", scalar " << cert.scalar->code();
  os << "\n";
  if (!cert.diagnostic.empty()) os << "  " << cert.diagnostic << "\n";
  if (verbose) {
    os << "  wedge = " << cert.wedge.to_string() << "\n";
    os << "  target = " << cert.target.to_string() << "\n";
  }
  return os.str();
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
  GroupFile gf = load_group_file(cfg.input);
  MatrixGroup g(gf.field, gf.n, gf.generators, cfg.cap);
  const FieldSpec& f = *gf.field;
  const int n = gf.n;

  auto emit_family = [&](const GeneratorFamily& fam) {
    emit(cfg, out, family_to_json(fam), family_text(fam, cfg.verbose));
    return 0;
  };

  if (cfg.command == "analyze") {
    auto refl = find_reflections(g);
    auto table = hyperplane_table(g);
    auto polys = build_arrangement_polys(f, n, table);
    json j = analyze_json(g, table, polys, refl);
    emit(cfg, out, j, analyze_text(g, j, cfg.verbose, polys));
    return 0;
  }

  if (cfg.command == "dickson") {
    std::vector<Polynomial> ds = dickson_invariants(f, n);
    GeneratorFamily fam{FamilyTag::dickson_glsl, &f, n, ds, {},
                        "Dickson invariants and their exterior derivatives"};
    for (const Polynomial& d : ds)
      fam.one_forms.push_back(exterior_derivative(d));
    return emit_family(fam);
  }
  if (cfg.command == "unipotent-forms") return emit_family(unipotent_forms(g));
  if (cfg.command == "hyperplane-forms")
    return emit_family(single_hyperplane_forms(g));
  if (cfg.command == "slgl-forms") {
    int e = 1;
    for (const Mat& m : g.elements()) {
      uint32_t d = m.det();
      if (d != 1) e = std::max(e, mult_order(Fq(&f, d)));
    }
    return emit_family(slgl_forms(g, e));
  }
  if (cfg.command == "chern-forms") return emit_family(chern_forms(g));

  if (cfg.command == "check-criterion" || cfg.command == "check-chi-criterion" ||
      cfg.command == "check-free-algebra") {
    if (cfg.forms_path.empty())
      fail("ParseError", "--forms is required for the check commands");
    GeneratorFamily fam = load_family(cfg.forms_path);
    if (fam.field != &f || fam.nvars != n)
      fail("ParseError", "forms file does not match the group's field or n");

    if (cfg.command == "check-free-algebra") {
      FreeAlgebraReport report = check_free_algebra(g, fam.one_forms);
      json j = free_algebra_report_to_json(report, cfg.verbose);
      std::ostringstream os;
      os << "free-algebra: " << (report.passed ? "PASS" : "FAIL") << "\n"
         << "  maximal root spaces: " << (report.maximality ? "yes" : "no")
         << "\n"
         << "  delta^{n-1} = Q(A~): " << (report.delta_identity ? "yes" : "no")
         << "\n"
         << certificate_text(report.criterion, "  criterion", cfg.verbose);
      for (const auto& t : report.twisted_products) {
        os << "  twisted product {";
        for (size_t i = 0; i < t.indices.size(); ++i)
          os << (i ? "," : "") << t.indices[i];
        os << "}: divides " << (t.divides ? "yes" : "no") << ", invariant "
           << (t.invariant ? "yes" : "no") << "\n";
      }
      emit(cfg, out, j, os.str());
      return report.passed ? 0 : 1;
    }

    const bool plain = cfg.command == "check-criterion";
    const std::string name = plain ? "criterion" : "chi-criterion";
    FreenessCertificate cert = [&] {
      if (plain) return check_criterion(g, fam.one_forms);
      Character chi = resolve_character(g, gf, cfg.chi);
      return check_chi_criterion(g, chi, fam.one_forms);
    }();
    emit(cfg, out, certificate_to_json(cert, name, cfg.verbose),
         certificate_text(cert, name, cfg.verbose));
    return cert.passed ? 0 : 1;
  }

  if (cfg.command == "invariant-space") {
    if (cfg.degree < 0) fail("ParseError", "--degree is required");
    Character chi = resolve_character(g, gf, cfg.chi);
    DegreeSpace sp = invariant_degree_space(g, cfg.degree, &chi);
    json j;
    j["degree"] = sp.degree;
    j["chi"] = chi.name;
    j["dimension"] = sp.basis.size();
    json basis = json::array();
    for (const Polynomial& p : sp.basis) basis.push_back(poly_to_json(p));
    j["basis"] = std::move(basis);
    std::ostringstream os;
    os << "chi = " << chi.name << ", degree " << sp.degree << ": dimension "
       << sp.basis.size() << "\n";
    if (cfg.verbose)
      for (const Polynomial& p : sp.basis) os << "  " << p.to_string() << "\n";
    emit(cfg, out, j, os.str());
    return 0;
  }

  if (cfg.command == "verify-lemmas") {
    std::vector<DiffForm> known;
    // pick up a known generating family when one of the constructors applies
    try {
      known = unipotent_forms(g).one_forms;
    } catch (const Error&) {
      try {
        known = single_hyperplane_forms(g).one_forms;
      } catch (const Error&) {
        try {
          int e = 1;
          for (const Mat& m : g.elements()) {
            uint32_t d = m.det();
            if (d != 1) e = std::max(e, mult_order(Fq(&f, d)));
          }
          known = slgl_forms(g, e).one_forms;
        } catch (const Error&) {
        }
      }
    }
    LemmaSuiteReport report = verify_lemmas(g, known, cfg.samples, cfg.seed);
    json j = lemma_report_to_json(report);
    std::ostringstream os;
    os << "lemma suites (seed " << report.seed << ", " << report.samples
       << " samples):\n";
    for (const auto& l : report.lemmas) {
      os << "  " << l.name << ": " << (l.passed() ? "PASS" : "FAIL") << " ("
         << l.checks << " checks)\n";
      for (const std::string& ce : l.counterexamples) os << "    " << ce << "\n";
    }
    emit(cfg, out, j, os.str());
    return report.all_passed() ? 0 : 1;
  }

  fail("ParseError", "unknown command: " + cfg.command);
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.code() == "InputNotInvariant" || e.code() == "InputNotChiInvariant")
      return 1;
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace invforms
