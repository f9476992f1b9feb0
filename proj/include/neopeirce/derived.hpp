#pragma once

#include <array>
#include <utility>

#include "neopeirce/term.hpp"

namespace neopeirce {

// Converse built from the cup/cap wiring of the chosen color.
Term dagger(const Term& t, const Signature& sig, Color c = Color::White);

// Linear adjoint. Sugar is expanded first; metavariables are rejected.
Term alpha(const Term& t);

Term negate(const Term& t, const Signature& sig);

Term meet(const Term& a, const Term& b, const Signature& sig);
Term join(const Term& a, const Term& b, const Signature& sig);
Term top(int n, int m);
Term bottom(int n, int m);

// b ;- alpha(a) for a : n -> m and b : k -> m.
Term residual_left(const Term& b, const Term& a, const Signature& sig);

using SequentPair = std::pair<Term, Term>;
// Five equivalent ways of stating that a is included in b.
std::array<SequentPair, 5> entailment_forms(const Term& a, const Term& b, const Signature& sig);

}  // namespace neopeirce
