#include "neopeirce/soundness.hpp"

#include <algorithm>

#include "neopeirce/random.hpp"
#include "neopeirce/syntax.hpp"

namespace neopeirce {

namespace {

bool selected(const std::string& name, const std::vector<std::string>& sel) {
    if (sel.empty()) return true;
    for (const auto& s : sel) {
        if (!s.empty() && s.back() == '*') {
            if (name.compare(0, s.size() - 1, s, 0, s.size() - 1) == 0) return true;
        } else if (s == name) {
            return true;
        }
    }
    return false;
}

bool dense_subset(const Dense& a, const Dense& b) {
    for (size_t i = 0; i < a.bits.size(); ++i)
        if (a.bits[i] && !b.bits[i]) return false;
    return true;
}

// First pair of a that is missing from b.
void witness(const Dense& a, const Dense& b, Verdict& v) {
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t j = 0; j < a.cols; ++j)
            if (a.at(i, j) && !b.at(i, j)) {
                v.witness_dom = decode_tuple(i, a.k, a.dom);
                v.witness_cod = decode_tuple(j, a.k, a.cod);
                return;
            }
}

struct Instance {
    Term lhs, rhs;
    Signature sig;
};

// Draws arities, a signature and metavariable terms for one instance.
bool draw(Rng& rng, const AxiomSchema& s, const SweepOptions& opt, Instance& out) {
    std::vector<char> vars = arity_vars(s);
    std::vector<std::string> syms = symbol_metas(s);
    for (int attempt = 0; attempt < 50; ++attempt) {
        Binding b;
        for (char v : vars) b.arities[v] = pick(rng, 3);
        auto resolve = [&](Arity a) { return a.is_var() ? b.arities[a.var] : a.value; };
        Signature sig;
        bool ok = true;
        char next = 'p';
        for (const auto& name : syms) {
            const MetaScheme& sch = s.metas.at(name);
            int d = resolve(sch.dom), c = resolve(sch.cod);
            if (d + c > 2) ok = false;
            std::string sym(1, next++);
            sig.symbols[sym] = {d, c};
            b.symbols[name] = sym;
        }
        if (!ok) continue;
        if (sig.symbols.size() < 2 && coin(rng)) {
            int ar = pick(rng, 3), coar = pick(rng, 3 - ar);
            sig.symbols[std::string(1, next)] = {ar, coar};
        }
        bool maps_ok = true;
        for (const auto& name : term_metas(s)) {
            const MetaScheme& sch = s.metas.at(name);
            InterfaceType ty{resolve(sch.dom), resolve(sch.cod)};
            TermGenOptions g;
            g.depth = pick(rng, opt.depth + 1);
            if (std::find(s.map_metas.begin(), s.map_metas.end(), name) != s.map_metas.end()) {
                g.maps_only = true;
                if (ty.dom == 0 && ty.cod > 0) {
                    maps_ok = false;
                    break;
                }
            }
            b.terms[name] = random_term(rng, ty, sig, g);
        }
        if (!maps_ok) continue;
        if (s.kind == RuleKind::Struct) {
            // The replacement is the structural normal form of the redex.
            b.terms["b"] = normalize(desugar(b.terms.at("a")));
        }
        out.lhs = instantiate(s.lhs, b);
        out.rhs = instantiate(s.rhs, b);
        out.sig = sig;
        return true;
    }
    return false;
}

}  // namespace

SweepReport soundness_sweep(const RuleCatalog& cat, const SweepOptions& opt) {
    SweepReport rep;
    Rng rng(opt.seed);
    for (const auto& s : cat.rules()) {
        if (!selected(s.name, opt.rules)) continue;
        std::vector<Direction> dirs{Direction::Fwd};
        if (s.kind != RuleKind::Leq) dirs.push_back(Direction::Bwd);
        for (Direction dir : dirs) {
            ++rep.directed_rules;
            for (int k = 0; k < opt.samples; ++k) {
                Instance inst;
                if (!draw(rng, s, opt, inst)) continue;
                ++rep.instances;
                const Term& from = dir == Direction::Fwd ? inst.lhs : inst.rhs;
                const Term& to = dir == Direction::Fwd ? inst.rhs : inst.lhs;
                bool found = false;
                for (int size = 0; size <= opt.max_size && !found; ++size) {
                    for_each_interpretation(inst.sig, size, UINT64_MAX, [&](const Interpretation& I) {
                        Evaluator ev(I);
                        Dense a = ev(from), b = ev(to);
                        ++rep.evaluations;
                        if (dense_subset(a, b)) return true;
                        SweepViolation v{s.name, dir, from, to, inst.sig, {}};
                        v.verdict.holds = false;
                        v.verdict.interp = I;
                        witness(a, b, v.verdict);
                        rep.violations.push_back(std::move(v));
                        found = true;
                        return false;
                    });
                }
            }
        }
    }
    return rep;
}

}  // namespace neopeirce
