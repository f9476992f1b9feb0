#pragma once

#include <memory>
#include <set>
#include <string>

#include "neopeirce/semantics.hpp"

namespace neopeirce {

// Predicate functor logic. Symbols have coarity 0 in the signature.
struct PflNode;
using PflPred = std::shared_ptr<const PflNode>;

enum class PflOp { Sym, Ident, Minor, Major, Pad, Crop, Cap, Neg };

struct PflNode {
    PflOp op;
    std::string name;
    PflPred left, right;
};

PflPred pfl_sym(const std::string& r);
PflPred pfl_ident();
PflPred pfl_unary(PflOp op, PflPred p);
PflPred pfl_cap(PflPred a, PflPred b);

// Text: R, I, p P, P* P, [ P, ] P, P & Q, ! P. Prefix functors bind tighter than &.
PflPred pfl_parse(const std::string& text);
std::string pfl_render(const PflPred& p);

int pfl_arity(const PflPred& p, const Signature& sig);
Term pfl_encode(const PflPred& p, const Signature& sig);

// Membership over tuples of length N; N must cover every coordinate the
// clauses touch, otherwise TruncationTooSmall.
std::set<Tuple> pfl_eval_trunc(const PflPred& p, const Interpretation& I, int N);
bool pfl_member(const PflPred& p, const Interpretation& I, const Tuple& tau);

}  // namespace neopeirce
