#pragma once

#include <string>

#include "neopeirce/term.hpp"

namespace neopeirce {

// Parses the textual term syntax. Chains of one operator associate to the
// right; mixing operators without parentheses is a syntax error.
Term parse(const std::string& text);

std::string render(const Term& t);

// Structural layer: typing, sugar expansion, assoc/unit normal form, paths.
InterfaceType typecheck(const Term& t, const Signature& sig);

struct MetaTyping {
    std::map<std::string, InterfaceType> metas;
    std::map<char, int> arities;
};
InterfaceType typecheck(const Term& t, const Signature& sig, const MetaTyping& env);

Term desugar(const Term& t);
Term expand_sugar(SugarFamily f, Color c, int n, int m);
Term normalize(const Term& t);
bool struct_eq(const Term& a, const Term& b);

Term subterm_at(const Term& t, const Path& p);
Term replace_at(const Term& t, const Path& p, const Term& s, const Signature& sig);
// Unchecked variant for callers that guarantee type agreement.
Term replace_at(const Term& t, const Path& p, const Term& s);

// Identity block test on a normalized term: id1/id0 generators of color c, or
// a c-tensor of such.
bool is_identity_block(const Term& t, Color c);

std::string path_string(const Path& p);

}  // namespace neopeirce
