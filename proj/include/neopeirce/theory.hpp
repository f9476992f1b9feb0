#pragma once

#include <string>
#include <vector>

#include "neopeirce/term.hpp"

namespace neopeirce {

struct TheoryAxiom {
    std::string name;
    Term lhs, rhs;
};

struct Theory {
    Signature sig;
    std::vector<TheoryAxiom> axioms;

    const TheoryAxiom* find(const std::string& name) const {
        for (const auto& a : axioms)
            if (a.name == name) return &a;
        return nullptr;
    }
};

}  // namespace neopeirce
