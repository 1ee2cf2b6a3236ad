// JSON export/import of operator documents:
//   { "algebra", "parabolic", "weight", "convention", "generator",
//     "operator": { "scalar": [terms], "derivatives": { "<root>": [terms] } } }
// with terms as { "coeff": "p/q", "monomial": { "<var>": exp } }.
#pragma once

#include "csreal/oracle.hpp"
#include "csreal/realization.hpp"

#include <json.hpp>

#include <string>

namespace csreal {

// "H1".."Hr" for the Cartan generators, "E[1,1]" / "E[-1,-1]" for root
// vectors by simple-root coordinates.
std::string generator_name(const RootSystem& rs, GenId g);
GenId parse_generator(const RootSystem& rs, const std::string& s);

nlohmann::json operator_to_json(const OrbitContext& ctx, Convention conv, GenId g,
                                const DiffOp& op);

// Parses the "operator" member back; validates the metadata against ctx and
// throws std::invalid_argument on any mismatch or malformed variable name.
DiffOp operator_from_json(const nlohmann::json& doc, const OrbitContext& ctx);

nlohmann::json report_to_json(const VerificationReport& report);

}  // namespace csreal
