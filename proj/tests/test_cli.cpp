#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "invforms/cli.hpp"
#include "invforms/serial.hpp"

using namespace invforms;
namespace fs = std::filesystem;

namespace {

std::string data(const std::string& name) {
  return std::string(TEST_DATA_DIR) + "/" + name;
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(RunConfig cfg) {
  std::ostringstream out, err;
  int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "invforms_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("analyze") {
  RunConfig cfg;
  cfg.input = data("gl2_f3.json");
  cfg.command = "analyze";
  cfg.json = true;
  Run r = run_cli(cfg);
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["group"]["order"] == 48);
  CHECK(j["group"]["hyperplane_orbits"] == 1);
  CHECK(j["hyperplanes"].size() == 4);
  for (const json& h : j["hyperplanes"]) {
    CHECK(h["e_H"] == 2);
    CHECK(h["b_H"] == 1);
  }
  CHECK(j["degrees"]["q_det"] == 4);
  CHECK(j["degrees"]["q_tilde"] == 8);
  CHECK(j["degrees"]["delta"] == 8);

  // text mode mentions the same numbers and is deterministic
  cfg.json = false;
  Run t1 = run_cli(cfg);
  Run t2 = run_cli(cfg);
  CHECK(t1.out == t2.out);
  CHECK(t1.out.find("order 48") != std::string::npos);
}

TEST_CASE("family construction pipes into the checkers") {
  fs::path forms = temp_file("u3_forms.json");

  RunConfig build;
  build.input = data("u3_f3.json");
  build.command = "unipotent-forms";
  build.out_path = forms.string();
  REQUIRE(run_cli(build).code == 0);

  RunConfig check;
  check.input = data("u3_f3.json");
  check.command = "check-criterion";
  check.forms_path = forms.string();
  check.json = true;
  Run r = run_cli(check);
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["target_degree"] == 5);
  CHECK(j.contains("scalar"));

  // the family file re-parses to an equal object
  GeneratorFamily fam = load_family(forms.string());
  GeneratorFamily again = family_from_json(family_to_json(fam));
  CHECK(fam.one_forms == again.one_forms);
}

TEST_CASE("failing criterion exits 1, bad input exits 2") {
  // raw Dickson derivatives for SL_2: checked failure -> exit 1
  fs::path forms = temp_file("raw_dickson.json");
  {
    RunConfig build;
    build.input = data("gl2_f3.json");
    build.command = "dickson";
    build.out_path = forms.string();
    REQUIRE(run_cli(build).code == 0);
  }
  RunConfig check;
  check.input = data("sl2_f3.json");
  check.command = "check-criterion";
  check.forms_path = forms.string();
  Run r = run_cli(check);
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
  CHECK(r.out.find("degree mismatch") != std::string::npos);

  // wrong form count -> input error
  GeneratorFamily fam = load_family(forms.string());
  fam.one_forms.pop_back();
  fs::path short_forms = temp_file("short.json");
  std::ofstream(short_forms) << family_to_json(fam).dump();
  check.forms_path = short_forms.string();
  Run wrong = run_cli(check);
  CHECK(wrong.code == 2);
  CHECK(wrong.err.find("WrongCount") != std::string::npos);

  // characteristic-2 input is rejected at parse time
  RunConfig bad;
  bad.input = data("char2.json");
  bad.command = "analyze";
  Run br = run_cli(bad);
  CHECK(br.code == 2);
  CHECK(br.err.find("CharTwoRejected") != std::string::npos);

  // unknown command
  RunConfig unk;
  unk.input = data("gl2_f3.json");
  unk.command = "frobnicate";
  CHECK(run_cli(unk).code == 2);

  // missing file
  RunConfig missing;
  missing.input = data("no_such_file.json");
  missing.command = "analyze";
  CHECK(run_cli(missing).code == 2);
}

TEST_CASE("invariant-space and verify-lemmas") {
  RunConfig cfg;
  cfg.input = data("gl2_f3.json");
  cfg.command = "invariant-space";
  cfg.degree = 4;
  cfg.chi = "det";
  cfg.json = true;
  Run r = run_cli(cfg);
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["dimension"] == 1);
  CHECK(j["chi"] == "det");

  RunConfig lemmas;
  lemmas.input = data("gl2_f3.json");
  lemmas.command = "verify-lemmas";
  lemmas.samples = 5;
  lemmas.seed = 424242;
  lemmas.json = true;
  Run lr = run_cli(lemmas);
  CHECK(lr.code == 0);
  json lj = json::parse(lr.out);
  CHECK(lj["passed"] == true);
  CHECK(lj["seed"] == 424242);

  // identical config gives identical JSON
  Run lr2 = run_cli(lemmas);
  CHECK(lr.out == lr2.out);
}

TEST_CASE("characters defined in the group file, caps, verbose") {
  // order-6 single-hyperplane group with a file-defined character (= det)
  fs::path gpath = temp_file("with_char.json");
  std::ofstream(gpath) << R"({
    "field": {"p": 3, "k": 1},
    "n": 2,
    "generators": [[1, 1, 0, 1], [1, 0, 0, 2]],
    "characters": {"sign": [1, 2]}
  })";
  RunConfig cfg;
  cfg.input = gpath.string();
  cfg.command = "invariant-space";
  cfg.degree = 1;
  cfg.chi = "sign";
  cfg.json = true;
  Run r = run_cli(cfg);
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["dimension"] == 1);

  cfg.chi = "no_such_chi";
  CHECK(run_cli(cfg).code == 2);

  // an inconsistent character value errors out
  fs::path bad = temp_file("bad_char.json");
  std::ofstream(bad) << R"({
    "field": {"p": 3, "k": 1},
    "n": 2,
    "generators": [[1, 1, 0, 1], [1, 0, 0, 2]],
    "characters": {"broken": [2, 1]}
  })";
  RunConfig bc;
  bc.input = bad.string();
  bc.command = "invariant-space";
  bc.degree = 1;
  bc.chi = "broken";
  Run br = run_cli(bc);
  CHECK(br.code == 2);
  CHECK(br.err.find("InconsistentCharacter") != std::string::npos);

  // enumeration cap
  RunConfig capped;
  capped.input = data("gl2_f3.json");
  capped.command = "analyze";
  capped.cap = 2;
  Run cr = run_cli(capped);
  CHECK(cr.code == 2);
  CHECK(cr.err.find("CapExceeded") != std::string::npos);

  // verbose text prints full polynomials
  RunConfig verbose;
  verbose.input = data("u2_f3.json");
  verbose.command = "analyze";
  verbose.verbose = true;
  Run vr = run_cli(verbose);
  CHECK(vr.code == 0);
  CHECK(vr.out.find("Q(A~) = z1") != std::string::npos);
}

TEST_CASE("remaining family constructors") {
  // hyperplane-forms on the order-6 fixture
  fs::path forms = temp_file("single_hyp.json");
  RunConfig build;
  build.input = data("single_hyperplane_f3.json");
  build.command = "hyperplane-forms";
  build.out_path = forms.string();
  REQUIRE(run_cli(build).code == 0);
  RunConfig check;
  check.input = data("single_hyperplane_f3.json");
  check.command = "check-criterion";
  check.forms_path = forms.string();
  check.json = true;
  Run r = run_cli(check);
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["target_degree"] == 3);

  // hyperplane-forms rejects a multi-hyperplane group
  RunConfig bad;
  bad.input = data("gl2_f3.json");
  bad.command = "hyperplane-forms";
  Run br = run_cli(bad);
  CHECK(br.code == 2);
  CHECK(br.err.find("NotSingleHyperplane") != std::string::npos);

  // chern-forms works even for a non-reflection group
  RunConfig chern;
  chern.input = data("cyclic_nonreflection_f3.json");
  chern.command = "chern-forms";
  chern.json = true;
  Run cr = run_cli(chern);
  CHECK(cr.code == 0);
  json cj = json::parse(cr.out);
  CHECK(cj["family_tag"] == "chern");
  CHECK(cj["forms"].size() == 2);
}

TEST_CASE("chi criterion and free algebra over the CLI") {
  fs::path forms = temp_file("gl2_dickson.json");
  {
    RunConfig build;
    build.input = data("gl2_f3.json");
    build.command = "slgl-forms";
    build.out_path = forms.string();
    REQUIRE(run_cli(build).code == 0);
  }
  RunConfig chi;
  chi.input = data("gl2_f3.json");
  chi.command = "check-chi-criterion";
  chi.chi = "trivial";
  chi.forms_path = forms.string();
  chi.json = true;
  Run r = run_cli(chi);
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["passed"] == true);

  RunConfig fa;
  fa.input = data("gl2_f3.json");
  fa.command = "check-free-algebra";
  fa.forms_path = forms.string();
  fa.json = true;
  Run fr = run_cli(fa);
  CHECK(fr.code == 0);
  json fj = json::parse(fr.out);
  CHECK(fj["maximality"] == true);
  CHECK(fj["delta_power_identity"] == true);
  CHECK(fj["passed"] == true);
}
