#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "neopeirce/catalog.hpp"
#include "neopeirce/kernel.hpp"
#include "neopeirce/semantics.hpp"

namespace neopeirce {

struct SweepOptions {
    int samples = 20;    // instances per directed rule
    int depth = 3;       // of the terms bound to metavariables
    int max_size = 2;    // every interpretation with |X| <= max_size
    uint64_t seed = 7;
    // Rule names or prefixes ending in '*'; empty selects the whole catalog.
    std::vector<std::string> rules;
};

struct SweepViolation {
    std::string rule;
    Direction dir = Direction::Fwd;
    Term lhs, rhs;
    Signature sig;
    Verdict verdict;
};

struct SweepReport {
    size_t directed_rules = 0;
    size_t instances = 0;
    uint64_t evaluations = 0;
    std::vector<SweepViolation> violations;
};

SweepReport soundness_sweep(const RuleCatalog& cat, const SweepOptions& opt);

}  // namespace neopeirce
