#pragma once

#include <string>

#include "neopeirce/kernel.hpp"

namespace neopeirce {

// Accumulates a checked step sequence. Every call applies its step at once,
// so a builder that finishes without throwing holds a valid proof.
class ProofBuilder {
public:
    ProofBuilder(Term start, const RuleCatalog& cat, const Theory& T);

    const Term& current() const { return cur_; }

    ProofBuilder& apply(const std::string& rule, const Path& path, Binding subst = {},
                        Direction dir = Direction::Fwd);
    // smc.struct to the given shape; skipped when the subterm already is that term.
    ProofBuilder& reshape(const Term& shape, const Path& path = {});
    // Replays a proof of the subterm at `at`, reshaping it to sub.start first.
    ProofBuilder& embed(const Proof& sub, const Path& at);

    Proof finish() const;

private:
    Proof proof_;
    Term cur_;
    const RuleCatalog& cat_;
    const Theory& T_;
};

Binding bind(std::initializer_list<std::pair<const std::string, Term>> terms, std::map<char, int> arities = {});

// id+@n <= t ;- alpha(t), starting from id+@n.
Proof unit_lemma(const Term& t, const RuleCatalog& cat, const Theory& T);
// alpha(t) ;+ t <= id-@m, starting from alpha(t) ;+ t.
Proof counit_lemma(const Term& t, const RuleCatalog& cat, const Theory& T);

// Turns a proof of a <= b over T + {hyp: e+ <= c} into a proof over T of
// c *+ id+@n <= b ;- alpha(a).
Proof deduction_transform(const Proof& p, const Theory& T, const Term& c, const std::string& hyp,
                          const RuleCatalog& cat);

}  // namespace neopeirce
