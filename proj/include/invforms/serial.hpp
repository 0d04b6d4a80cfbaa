#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "invforms/crit.hpp"
#include "invforms/extalg.hpp"
#include "invforms/gens.hpp"
#include "invforms/grp.hpp"
#include "invforms/mpoly.hpp"

namespace invforms {

using json = nlohmann::json;

// Wire formats.  Field elements serialize as their integer code; the base-p
// digits of a code are the coordinates over F_p.  Polynomials are term lists
// sorted graded-lex descending.  All parsers throw Error("ParseError", ...)
// on malformed input.

json field_to_json(const FieldSpec& f);
const FieldSpec& field_from_json(const json& j);

json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const json& j, const FieldSpec& f, int nvars);

json form_to_json(const DiffForm& w);
DiffForm form_from_json(const json& j, const FieldSpec& f, int nvars);

/// Parsed group input file: {field, n, generators, characters?}.
struct GroupFile {
  const FieldSpec* field = nullptr;
  int n = 0;
  std::vector<Mat> generators;
  std::map<std::string, std::vector<uint32_t>> characters;
};

json group_file_to_json(const GroupFile& gf);
GroupFile group_file_from_json(const json& j);
GroupFile load_group_file(const std::string& path);

json family_to_json(const GeneratorFamily& fam);
GeneratorFamily family_from_json(const json& j);
GeneratorFamily load_family(const std::string& path);

json certificate_to_json(const FreenessCertificate& cert,
                         const std::string& check_name, bool verbose);
json free_algebra_report_to_json(const FreeAlgebraReport& report, bool verbose);
json lemma_report_to_json(const LemmaSuiteReport& report);

}  // namespace invforms
