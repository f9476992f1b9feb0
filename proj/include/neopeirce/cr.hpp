#pragma once

#include <memory>
#include <string>

#include "neopeirce/semantics.hpp"

namespace neopeirce {

// Expressions of the calculus of binary relations.
struct CRNode;
using CRExpr = std::shared_ptr<const CRNode>;

enum class CROp { Sym, IdW, IdB, SeqW, SeqB, Top, Bot, Cap, Cup, Op, Neg };

struct CRNode {
    CROp op;
    std::string name;
    CRExpr left, right;
};

CRExpr cr_sym(const std::string& name);
CRExpr cr_const(CROp op);
CRExpr cr_unary(CROp op, CRExpr e);
CRExpr cr_binary(CROp op, CRExpr l, CRExpr r);

// Text syntax: R, id+, id-, top, bot, infix ;+ ;- & |, prefix ~, postfix ^.
// Binding strength from tight to loose: ^, ~, ;+ and ;-, &, |.
CRExpr cr_parse(const std::string& text);
std::string cr_render(const CRExpr& e);

Relation cr_eval(const CRExpr& e, const Interpretation& I);
Term cr_encode(const CRExpr& e);
// Every symbol of e declared 1 -> 1.
Signature cr_signature(const CRExpr& e);

}  // namespace neopeirce
