#include "invforms/serial.hpp"

#include <fstream>

namespace invforms {

namespace {

[[noreturn]] void parse_fail(const std::string& msg) {
  fail("ParseError", msg);
}

uint32_t get_code(const json& j, const FieldSpec& f, const char* what) {
  if (!j.is_number_unsigned() && !j.is_number_integer())
    parse_fail(std::string(what) + " must be an integer");
  int64_t v = j.get<int64_t>();
  if (v < 0 || v >= (int64_t)f.order())
    parse_fail(std::string(what) + " out of range [0, q)");
  return (uint32_t)v;
}

}  // namespace

json field_to_json(const FieldSpec& f) {
  json j;
  j["p"] = f.characteristic();
  j["k"] = f.extension_degree();
  if (f.extension_degree() > 1) j["modulus_poly"] = f.modulus_poly();
  return j;
}

const FieldSpec& field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("k"))
    parse_fail("field must be an object with p and k");
  uint32_t p = j["p"].get<uint32_t>();
  uint32_t k = j["k"].get<uint32_t>();
  std::vector<uint32_t> modulus;
  if (j.contains("modulus_poly"))
    modulus = j["modulus_poly"].get<std::vector<uint32_t>>();
  return field_make(p, k, modulus);
}

json poly_to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json t;
    t["exponents"] = m.exponents();
    t["coeff"] = c.code();
    terms.push_back(std::move(t));
  }
  return terms;
}

Polynomial poly_from_json(const json& j, const FieldSpec& f, int nvars) {
  if (!j.is_array()) parse_fail("polynomial must be a term array");
  Polynomial p(&f, nvars);
  for (const json& t : j) {
    if (!t.is_object() || !t.contains("exponents") || !t.contains("coeff"))
      parse_fail("polynomial term needs exponents and coeff");
    std::vector<int> exps = t["exponents"].get<std::vector<int>>();
    if ((int)exps.size() != nvars) parse_fail("exponent vector length");
    for (int e : exps)
      if (e < 0) parse_fail("negative exponent");
    p.add_term(Monomial(std::move(exps)),
               Fq(&f, get_code(t["coeff"], f, "coefficient")));
  }
  return p;
}

json form_to_json(const DiffForm& w) {
  json j;
  j["degree"] = w.form_degree();
  json terms = json::array();
  for (const auto& [s, u] : w.terms()) {
    json t;
    t["indices"] = index_list(s);
    t["poly"] = poly_to_json(u);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

DiffForm form_from_json(const json& j, const FieldSpec& f, int nvars) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("terms"))
    parse_fail("form must be an object with degree and terms");
  int degree = j["degree"].get<int>();
  if (degree < 0 || degree > nvars) parse_fail("form degree out of range");
  DiffForm w(&f, nvars, degree);
  for (const json& t : j["terms"]) {
    if (!t.is_object() || !t.contains("indices") || !t.contains("poly"))
      parse_fail("form term needs indices and poly");
    std::vector<int> indices = t["indices"].get<std::vector<int>>();
    for (int i : indices)
      if (i < 1 || i > nvars) parse_fail("form index out of range");
    w.add_term(index_set(indices), poly_from_json(t["poly"], f, nvars));
  }
  return w;
}

json group_file_to_json(const GroupFile& gf) {
  json j;
  j["field"] = field_to_json(*gf.field);
  j["n"] = gf.n;
  json gens = json::array();
  for (const Mat& m : gf.generators) gens.push_back(m.data());
  j["generators"] = std::move(gens);
  if (!gf.characters.empty()) {
    json chars;
    for (const auto& [name, values] : gf.characters) chars[name] = values;
    j["characters"] = std::move(chars);
  }
  return j;
}

GroupFile group_file_from_json(const json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("n") ||
      !j.contains("generators"))
    parse_fail("group file needs field, n, generators");
  GroupFile gf;
  gf.field = &field_from_json(j["field"]);
  gf.n = j["n"].get<int>();
  if (gf.n < 1 || gf.n > 8) parse_fail("n out of range [1, 8]");
  if (!j["generators"].is_array()) parse_fail("generators must be an array");
  for (const json& gj : j["generators"]) {
    if (!gj.is_array() || (int)gj.size() != gf.n * gf.n)
      parse_fail("each generator needs n*n row-major entries");
    Mat m(gf.field, gf.n, gf.n);
    for (int i = 0; i < gf.n; ++i)
      for (int c = 0; c < gf.n; ++c)
        m.set(i, c, get_code(gj[(size_t)(i * gf.n + c)], *gf.field, "entry"));
    gf.generators.push_back(std::move(m));
  }
  if (j.contains("characters")) {
    if (!j["characters"].is_object()) parse_fail("characters must be an object");
    for (const auto& [name, values] : j["characters"].items()) {
      if (!values.is_array() || values.size() != gf.generators.size())
        parse_fail("character " + name + " needs one value per generator");
      std::vector<uint32_t> vals;
      for (const json& v : values)
        vals.push_back(get_code(v, *gf.field, "character value"));
      gf.characters[name] = std::move(vals);
    }
  }
  return gf;
}

GroupFile load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
  return group_file_from_json(j);
}

json family_to_json(const GeneratorFamily& fam) {
  json j;
  j["field"] = field_to_json(*fam.field);
  j["n"] = fam.nvars;
  j["family_tag"] = to_string(fam.tag);
  json polys = json::array();
  for (const Polynomial& p : fam.invariant_polys) polys.push_back(poly_to_json(p));
  j["polys"] = std::move(polys);
  json forms = json::array();
  for (const DiffForm& w : fam.one_forms) forms.push_back(form_to_json(w));
  j["forms"] = std::move(forms);
  j["notes"] = fam.notes;
  return j;
}

GeneratorFamily family_from_json(const json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("n") ||
      !j.contains("family_tag"))
    parse_fail("family needs field, n, family_tag");
  const FieldSpec& f = field_from_json(j["field"]);
  int n = j["n"].get<int>();
  if (n < 1 || n > 8) parse_fail("n out of range [1, 8]");
  GeneratorFamily fam{family_tag_from_string(j["family_tag"].get<std::string>()),
                      &f, n, {}, {}, ""};
  if (j.contains("polys"))
    for (const json& pj : j["polys"])
      fam.invariant_polys.push_back(poly_from_json(pj, f, n));
  if (j.contains("forms"))
    for (const json& fj : j["forms"])
      fam.one_forms.push_back(form_from_json(fj, f, n));
  if (j.contains("notes")) fam.notes = j["notes"].get<std::string>();
  return fam;
}

GeneratorFamily load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
  return family_from_json(j);
}

json certificate_to_json(const FreenessCertificate& cert,
                         const std::string& check_name, bool verbose) {
  json j;
  j["check"] = check_name;
  j["passed"] = cert.passed;
  if (cert.scalar) j["scalar"] = cert.scalar->code();
  j["target_degree"] = cert.target.degree();
  if (!cert.diagnostic.empty()) j["diagnostic"] = cert.diagnostic;
  if (verbose) {
    j["wedge"] = form_to_json(cert.wedge);
    j["target"] = poly_to_json(cert.target);
  }
  return j;
}

json free_algebra_report_to_json(const FreeAlgebraReport& report,
                                 bool verbose) {
  json j;
  j["check"] = "free-algebra";
  j["maximality"] = report.maximality;
  j["delta_power_identity"] = report.delta_identity;
  if (report.delta_scalar) j["delta_scalar"] = report.delta_scalar->code();
  j["criterion"] = certificate_to_json(report.criterion, "criterion", verbose);
  json tw = json::array();
  for (const auto& t : report.twisted_products) {
    json tj;
    tj["indices"] = t.indices;
    tj["divides"] = t.divides;
    tj["invariant"] = t.invariant;
    tw.push_back(std::move(tj));
  }
  j["twisted_products"] = std::move(tw);
  j["passed"] = report.passed;
  return j;
}

json lemma_report_to_json(const LemmaSuiteReport& report) {
  json j;
  j["seed"] = report.seed;
  j["samples"] = report.samples;
  json lemmas;
  for (const auto& l : report.lemmas) {
    json lj;
    lj["checks"] = l.checks;
    lj["passed"] = l.passed();
    if (!l.counterexamples.empty()) lj["counterexamples"] = l.counterexamples;
    lemmas[l.name] = std::move(lj);
  }
  j["lemmas"] = std::move(lemmas);
  j["passed"] = report.all_passed();
  return j;
}

}  // namespace invforms
