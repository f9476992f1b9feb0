#pragma once

#include <cstdint>
#include <random>

#include "neopeirce/term.hpp"

namespace neopeirce {

using Rng = std::mt19937_64;

// Uniform in [0, n); spelled out so streams agree across standard libraries.
inline int pick(Rng& rng, int n) { return static_cast<int>(rng() % static_cast<uint64_t>(n)); }
inline bool coin(Rng& rng) { return rng() & 1; }

struct TermGenOptions {
    int depth = 3;
    int max_mid = 2;        // arity of the hidden interface in compositions
    bool sugar = true;
    bool maps_only = false;  // white copiers, discards, identities and symmetries
};

// Symbols p, q, ... with arity + coarity <= max_total.
Signature random_signature(Rng& rng, int max_symbols = 2, int max_total = 2);

Term random_term(Rng& rng, InterfaceType ty, const Signature& sig, const TermGenOptions& opt = {});

}  // namespace neopeirce
