#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "neopeirce/kernel.hpp"

namespace neopeirce {

using json = nlohmann::json;

std::string read_file(const std::string& path);

Signature signature_from_json(const json& j);
json to_json(const Signature& sig);

// Relation arities come from sig when the symbol is declared there, else
// from the first listed pair.
Interpretation interpretation_from_json(const json& j, const Signature* sig = nullptr);
json to_json(const Interpretation& I);
json to_json(const Relation& r);
json to_json(const Verdict& v);

// "tmap": ["f", ...] appends both TMAP inclusions for each listed symbol,
// named tmap.f.cp and tmap.f.dc.
Theory theory_from_json(const json& j);

// Rows may mention the symbols of sig when it is given.
AxiomSchema schema_from_json(const json& row, const Signature* sig = nullptr);

Binding binding_from_json(const json& subst);
json to_json(const Binding& b);

// A proof file after its theory reference and derived rules are resolved.
struct ProofFile {
    Proof proof;
    Theory theory;
    RuleCatalog catalog;
    std::vector<std::string> derived_rules;
};

Proof proof_from_json(const json& j);
json to_json(const Proof& p);
// Relative theory paths are resolved against base_dir.
ProofFile load_proof(const json& j, const std::string& base_dir, const RuleCatalog& cat);
ProofFile load_proof_file(const std::string& path, const RuleCatalog& cat);

json to_json(const CheckReport& r);

}  // namespace neopeirce
