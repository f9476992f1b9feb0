#pragma once

#include <optional>
#include <string>
#include <vector>

#include "neopeirce/catalog.hpp"
#include "neopeirce/semantics.hpp"
#include "neopeirce/theory.hpp"

namespace neopeirce {

enum class Direction { Fwd, Bwd };

struct Step {
    std::string rule;
    Direction dir = Direction::Fwd;
    Path path;
    Binding subst;
};

struct Proof {
    std::string theory_ref;
    Term start;
    std::vector<Step> steps;
};

struct Sequent {
    Term lhs, rhs;
};

struct CheckReport {
    Sequent sequent;
    size_t steps = 0;
    std::vector<std::string> derived_rules_used;
    std::vector<std::string> theory_axioms_used;
};

// A rule resolved for one step: its directed source/target patterns.
struct ResolvedRule {
    const AxiomSchema* schema = nullptr;   // catalog rule
    const TheoryAxiom* axiom = nullptr;    // theory axiom
    Direction dir = Direction::Fwd;
};

ResolvedRule resolve_rule(const std::string& name, Direction dir, const RuleCatalog& cat, const Theory& T);

Term apply_step(const Term& t, const Step& s, const RuleCatalog& cat, const Theory& T);
CheckReport check_proof(const Proof& p, const RuleCatalog& cat, const Theory& T);

std::pair<Sequent, Sequent> tmap_axioms(const std::string& f, const Signature& sig);

enum class EndpointClass { Contradiction, Triviality, Plain };
EndpointClass classify_endpoints(const Sequent& s);
const char* to_string(EndpointClass c);

struct DerivedRule {
    AxiomSchema schema;
    enum class Kind { Proof, OracleValidated } justification = Kind::OracleValidated;
    std::optional<Proof> proof;
    int max_size = 2;
};

RuleCatalog register_derived_rule(const DerivedRule& r, const RuleCatalog& cat, const Theory& T);

// Syntactic sufficient condition for being a map: built from white
// copiers, discards, identities and symmetries, or symbols carrying both
// TMAP axioms in T, composed with ;+ and *+.
bool is_syntactic_map(const Term& t, const Theory& T);

}  // namespace neopeirce
