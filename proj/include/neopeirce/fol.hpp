#pragma once

#include <memory>
#include <string>
#include <vector>

#include "neopeirce/semantics.hpp"

namespace neopeirce {

// Variables are numbered 1..n in the ambient context; a quantifier always
// binds variable n+1 of its body's context n+1.
struct FolTerm {
    bool is_var = true;
    int var = 0;
    std::string fn;
    std::vector<FolTerm> args;
};

FolTerm fvar(int i);
FolTerm fapp(const std::string& f, std::vector<FolTerm> args);

struct FolNode;
using FolFormula = std::shared_ptr<const FolNode>;

enum class FolOp { Rel, Eq, And, Or, Not, Top, Bot, Exists, Forall };

struct FolNode {
    FolOp op;
    std::string name;
    std::vector<FolTerm> terms;
    FolFormula left, right;
};

FolFormula f_rel(const std::string& r, std::vector<FolTerm> args);
FolFormula f_eq(FolTerm a, FolTerm b);
FolFormula f_and(FolFormula a, FolFormula b);
FolFormula f_or(FolFormula a, FolFormula b);
FolFormula f_not(FolFormula a);
FolFormula f_top();
FolFormula f_bot();
FolFormula f_exists(FolFormula body);
FolFormula f_forall(FolFormula body);

// Throws ScopeError when a variable exceeds the context.
void fol_check_scope(const FolFormula& phi, int n);

// Text: R(t1,...), t1 = t2, /\, \/, !, exists! phi, forall! phi, top, bot,
// variables x1, x2, ...; "ctx n |- phi" declares the context.
struct FolSequent {
    int context = 0;
    FolFormula formula;
};
FolSequent fol_parse(const std::string& text);
// Free variables named by `names`; bound ones continue as z1, z2, ...
std::string fol_render(const FolFormula& phi, const std::vector<std::string>& names);
std::string fol_render(const FolFormula& phi, int n);

Term fol_encode_term(const FolTerm& t, int n);
Term fol_encode(const FolFormula& phi, int n, const Signature& sig);

bool fol_eval(const FolFormula& phi, const Interpretation& I, const Tuple& env);

// A diagram n -> m read as a formula over x1..xn, y1..ym (context n + m).
struct FolDecoded {
    int n = 0, m = 0;
    FolFormula formula;
};
FolDecoded fol_decode(const Term& t, const Signature& sig);
std::string fol_render(const FolDecoded& d);

}  // namespace neopeirce
