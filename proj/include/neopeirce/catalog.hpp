#pragma once

#include <map>
#include <string>
#include <vector>

#include "neopeirce/term.hpp"

namespace neopeirce {

enum class RuleKind { Leq, Eq, Struct };

struct MetaScheme {
    Arity dom, cod;
};

struct AxiomSchema {
    std::string name;
    RuleKind kind = RuleKind::Leq;
    Term lhs, rhs;
    // Term metavariables ($a) and symbol metavariables ($R^o) share this map.
    std::map<std::string, MetaScheme> metas;
    bool structural = false;  // smc.* rules
    bool derived = false;
    std::string justification;  // for derived rules: "proof" or "oracle(k)"
    std::vector<std::string> map_metas;  // metavariables restricted to maps
};

struct Binding {
    std::map<std::string, Term> terms;
    std::map<std::string, std::string> symbols;
    std::map<char, int> arities;
};

class RuleCatalog {
public:
    void add(AxiomSchema s);
    const AxiomSchema* find(const std::string& name) const;
    const std::vector<AxiomSchema>& rules() const { return rules_; }
    size_t base_row_count() const;

private:
    std::vector<AxiomSchema> rules_;
    std::map<std::string, size_t> index_;
};

// The default manifest compiled into the library; NEOPEIRCE_MANIFEST names a
// file that replaces it.
const std::string& builtin_manifest();
RuleCatalog catalog();
RuleCatalog load_catalog(const std::string& manifest_json);
RuleCatalog load_catalog_file(const std::string& path);

// Arity variables occurring in a schema (sugar indices and metavariable schemes).
std::vector<char> arity_vars(const AxiomSchema& s);
std::vector<std::string> term_metas(const AxiomSchema& s);
std::vector<std::string> symbol_metas(const AxiomSchema& s);

Term instantiate(const Term& pattern, const Binding& b);

// Flips colors of every generator, relation symbol and operator.
Term color_flip(const Term& t);

}  // namespace neopeirce
