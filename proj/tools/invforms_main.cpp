#include <iostream>

#include <CLI11.hpp>

#include "invforms/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact invariant differential forms of finite matrix groups "
               "over odd-characteristic finite fields"};
  invforms::RunConfig cfg;
  app.add_option("--input", cfg.input, "group file (JSON)")->required();
  app.add_option("--command", cfg.command,
                 "analyze | dickson | unipotent-forms | hyperplane-forms | "
                 "slgl-forms | chern-forms | check-criterion | "
                 "check-chi-criterion | check-free-algebra | invariant-space | "
                 "verify-lemmas")
      ->required();
  app.add_option("--chi", cfg.chi, "character name (trivial, det, det^-1, or "
                                   "a name from the group file)");
  app.add_option("--forms", cfg.forms_path, "family file for check commands");
  app.add_option("--out", cfg.out_path, "also write the JSON payload here");
  app.add_flag("--json", cfg.json, "print JSON instead of text");
  app.add_flag("--verbose", cfg.verbose, "print full polynomials");
  app.add_option("--degree", cfg.degree, "degree for invariant-space");
  app.add_option("--samples", cfg.samples, "sample count for verify-lemmas");
  app.add_option("--seed", cfg.seed, "RNG seed for the property runs");
  app.add_option("--cap", cfg.cap, "group enumeration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return invforms::run(cfg, std::cout, std::cerr);
}
