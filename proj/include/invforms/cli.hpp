#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace invforms {

/// One command per process.  Exit status: 0 pass/success, 1 checked failure
/// (a criterion or lemma run fails, or an input form is not invariant),
/// 2 input error (parse, validation, scale, wrong count).
struct RunConfig {
  std::string input;      // group file path
  std::string command;
  std::string chi;        // character name; "trivial", "det", "det^-1", or
                          // a name from the group file
  std::string forms_path; // family file for the check commands
  std::string out_path;   // optional: also write the JSON payload here
  bool json = false;
  bool verbose = false;
  int degree = -1;        // for invariant-space
  int samples = 50;       // for verify-lemmas
  uint64_t seed = 1729;
  uint64_t cap = 200000;
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace invforms
