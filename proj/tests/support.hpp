// Generators and reference evaluators shared by the unit and acceptance tests.
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "neopeirce/cr.hpp"
#include "neopeirce/deduction.hpp"
#include "neopeirce/fol.hpp"
#include "neopeirce/random.hpp"
#include "neopeirce/semantics.hpp"
#include "neopeirce/syntax.hpp"

namespace support {

using namespace neopeirce;

inline std::vector<Tuple> all_tuples(int k, int len) {
    std::vector<Tuple> out;
    size_t total = ipow(k, len);
    for (size_t i = 0; i < total; ++i) out.push_back(decode_tuple(i, k, len));
    return out;
}

inline Relation random_relation(Rng& rng, int k, int ar, int coar, bool functional = false) {
    std::vector<std::pair<Tuple, Tuple>> pairs;
    auto cods = all_tuples(k, coar);
    for (const auto& u : all_tuples(k, ar)) {
        if (functional) {
            if (!cods.empty()) pairs.push_back({u, cods[pick(rng, static_cast<int>(cods.size()))]});
            continue;
        }
        for (const auto& v : cods)
            if (coin(rng)) pairs.push_back({u, v});
    }
    return make_relation(k, ar, coar, std::move(pairs));
}

inline Interpretation random_interpretation(Rng& rng, const Signature& sig, int k,
                                            const std::vector<std::string>& functional = {}) {
    Interpretation I{k, {}};
    for (const auto& [name, st] : sig.symbols) {
        bool fn = std::find(functional.begin(), functional.end(), name) != functional.end();
        I.rho[name] = random_relation(rng, k, st.ar, st.coar, fn);
    }
    return I;
}

// Every interpretation of sig with 0 <= |X| <= max_k.
inline void every_interpretation(const Signature& sig, int max_k, const std::function<void(const Interpretation&)>& fn) {
    for (int k = 0; k <= max_k; ++k)
        for_each_interpretation(sig, k, UINT64_MAX, [&](const Interpretation& I) {
            fn(I);
            return true;
        });
}

inline Signature binary_signature(const std::vector<std::string>& names) {
    Signature sig;
    for (const auto& n : names) sig.symbols[n] = {1, 1};
    return sig;
}

inline CRExpr random_cr(Rng& rng, int depth, const std::vector<std::string>& syms) {
    if (depth == 0 || pick(rng, 4) == 0) {
        int r = pick(rng, static_cast<int>(syms.size()) + 4);
        if (r < static_cast<int>(syms.size())) return cr_sym(syms[r]);
        static const CROp consts[] = {CROp::IdW, CROp::IdB, CROp::Top, CROp::Bot};
        return cr_const(consts[r - syms.size()]);
    }
    static const CROp unary[] = {CROp::Op, CROp::Neg};
    static const CROp binary[] = {CROp::SeqW, CROp::SeqB, CROp::Cap, CROp::Cup};
    if (pick(rng, 3) == 0) return cr_unary(unary[pick(rng, 2)], random_cr(rng, depth - 1, syms));
    return cr_binary(binary[pick(rng, 4)], random_cr(rng, depth - 1, syms), random_cr(rng, depth - 1, syms));
}

// Relations of coarity 0 and functions of coarity 1.
struct FolVocabulary {
    std::map<std::string, int> relations, functions;

    Signature signature() const {
        Signature sig;
        for (const auto& [r, k] : relations) sig.symbols[r] = {k, 0};
        for (const auto& [f, k] : functions) sig.symbols[f] = {k, 1};
        return sig;
    }
    std::vector<std::string> function_names() const {
        std::vector<std::string> out;
        for (const auto& [f, k] : functions) out.push_back(f);
        return out;
    }
};

inline FolTerm random_fol_term(Rng& rng, int n, const FolVocabulary& voc, int depth) {
    bool var_ok = n > 0;
    if ((depth == 0 || voc.functions.empty() || coin(rng)) && var_ok) return fvar(1 + pick(rng, n));
    std::vector<std::pair<std::string, int>> fs(voc.functions.begin(), voc.functions.end());
    if (!var_ok) {
        // Only constants are usable without variables.
        std::vector<std::pair<std::string, int>> consts;
        for (const auto& f : fs)
            if (f.second == 0) consts.push_back(f);
        if (consts.empty()) throw std::logic_error("no closed terms");
        return fapp(consts[pick(rng, static_cast<int>(consts.size()))].first, {});
    }
    auto [f, k] = fs[pick(rng, static_cast<int>(fs.size()))];
    std::vector<FolTerm> args;
    for (int i = 0; i < k; ++i) args.push_back(random_fol_term(rng, n, voc, depth - 1));
    return fapp(f, args);
}

inline bool has_constant(const FolVocabulary& voc) {
    for (const auto& [f, k] : voc.functions)
        if (k == 0) return true;
    return false;
}

inline FolFormula random_fol(Rng& rng, int n, int depth, const FolVocabulary& voc) {
    bool atoms_ok = n > 0 || has_constant(voc);
    if (depth == 0 || pick(rng, 4) == 0) {
        int r = pick(rng, atoms_ok ? 4 : 1);
        if (r == 0) {
            for (const auto& [name, k] : voc.relations)
                if (k == 0 && coin(rng)) return f_rel(name, {});
            return coin(rng) ? f_top() : f_bot();
        }
        if (r == 1) return f_eq(random_fol_term(rng, n, voc, 1), random_fol_term(rng, n, voc, 1));
        std::vector<std::pair<std::string, int>> rs(voc.relations.begin(), voc.relations.end());
        auto [name, k] = rs[pick(rng, static_cast<int>(rs.size()))];
        std::vector<FolTerm> args;
        for (int i = 0; i < k; ++i) args.push_back(random_fol_term(rng, n, voc, 1));
        return f_rel(name, args);
    }
    switch (pick(rng, 5)) {
        case 0: return f_and(random_fol(rng, n, depth - 1, voc), random_fol(rng, n, depth - 1, voc));
        case 1: return f_or(random_fol(rng, n, depth - 1, voc), random_fol(rng, n, depth - 1, voc));
        case 2: return f_not(random_fol(rng, n, depth - 1, voc));
        case 3: return f_exists(random_fol(rng, n + 1, depth - 1, voc));
        default: return f_forall(random_fol(rng, n + 1, depth - 1, voc));
    }
}

// Closed terms 0 -> 0 over nullary symbols.
inline Term random_prop(Rng& rng, int depth, const std::vector<std::string>& syms) {
    if (depth == 0 || pick(rng, 4) == 0) {
        int r = pick(rng, static_cast<int>(syms.size()) * 2 + 2);
        if (r == 0) return gen(Gen::Id0, Color::White);
        if (r == 1) return gen(Gen::Id0, Color::Black);
        r -= 2;
        return rel(syms[r / 2], r % 2 ? Color::Black : Color::White);
    }
    Color c = coin(rng) ? Color::White : Color::Black;
    Term l = random_prop(rng, depth - 1, syms), r = random_prop(rng, depth - 1, syms);
    return coin(rng) ? seq(c, l, r) : tensor(c, l, r);
}

// Boolean reading of closed diagrams: white is conjunction, black disjunction.
inline bool truth(const Term& t, const std::map<std::string, bool>& val) {
    switch (t->kind) {
        case Kind::Gen:
            if (t->gen != Gen::Id0) throw std::logic_error("not a closed diagram");
            return t->color == Color::White;
        case Kind::Rel: {
            bool v = val.at(t->name);
            return t->color == Color::White ? v : !v;
        }
        case Kind::Seq:
        case Kind::Tensor: {
            bool a = truth(t->left, val), b = truth(t->right, val);
            return t->color == Color::White ? (a && b) : (a || b);
        }
        default: throw std::logic_error("not a closed diagram");
    }
}

inline Interpretation propositional_model(const std::map<std::string, bool>& val) {
    Interpretation I{0, {}};
    for (const auto& [name, v] : val)
        I.rho[name] = v ? make_relation(0, 0, 0, {{{}, {}}}) : make_relation(0, 0, 0, {});
    return I;
}

// Syntactic matching of a rule side against a sugar-free term; metavariables
// bind subterms, symbol metavariables bind names.
inline bool match(const Term& pat, const Term& t, Binding& b) {
    switch (pat->kind) {
        case Kind::Meta: {
            auto it = b.terms.find(pat->name);
            if (it != b.terms.end()) return equal(it->second, t);
            b.terms[pat->name] = t;
            return true;
        }
        case Kind::Rel:
            if (t->kind != Kind::Rel || t->color != pat->color) return false;
            if (!pat->name.empty() && pat->name[0] == '$') {
                auto it = b.symbols.find(pat->name.substr(1));
                if (it != b.symbols.end()) return it->second == t->name;
                b.symbols[pat->name.substr(1)] = t->name;
                return true;
            }
            return pat->name == t->name;
        case Kind::Gen: return t->kind == Kind::Gen && t->gen == pat->gen && t->color == pat->color;
        case Kind::Seq:
        case Kind::Tensor:
            return t->kind == pat->kind && t->color == pat->color && match(pat->left, t->left, b) &&
                   match(pat->right, t->right, b);
        case Kind::Sugar: return false;
    }
    return false;
}

inline void collect_paths(const Term& t, Path& cur, std::vector<Path>& out) {
    out.push_back(cur);
    if (!is_binary(t)) return;
    for (int i = 0; i < 2; ++i) {
        cur.push_back(i);
        collect_paths(i == 0 ? t->left : t->right, cur, out);
        cur.pop_back();
    }
}

// Source side of a rule with its arity variables fixed and sugar expanded.
inline Term grounded_side(const Term& p, const std::map<char, int>& ar) {
    switch (p->kind) {
        case Kind::Sugar: {
            auto get = [&](Arity a) { return a.is_var() ? ar.at(a.var) : a.value; };
            return desugar(sugar(p->fam, p->color, get(p->n), get(p->m)));
        }
        case Kind::Seq: return seq(p->color, grounded_side(p->left, ar), grounded_side(p->right, ar));
        case Kind::Tensor: return tensor(p->color, grounded_side(p->left, ar), grounded_side(p->right, ar));
        default: return p;
    }
}

struct DeductionCase {
    Theory base;        // T
    Theory extended;    // T + hyp
    Term hyp;           // closed c with e+ <= c
    Proof proof;        // over extended
    Term lhs, rhs;
};

// A proof of at most max_steps steps mixing hypothesis uses, theory axioms and
// catalog rules found by matching at random positions.
inline DeductionCase random_deduction_case(Rng& rng, const RuleCatalog& cat, int max_steps = 6) {
    DeductionCase dc;
    dc.base.sig = random_signature(rng, 2, 2);
    int n = pick(rng, 3), m = pick(rng, 3);
    TermGenOptions g;
    g.depth = 2;
    g.sugar = false;
    int axioms = pick(rng, 3);
    for (int i = 0; i < axioms; ++i) {
        InterfaceType ty{pick(rng, 2), pick(rng, 2)};
        dc.base.axioms.push_back({"ax" + std::to_string(i), random_term(rng, ty, dc.base.sig, g),
                                  random_term(rng, ty, dc.base.sig, g)});
    }
    dc.hyp = random_term(rng, {0, 0}, dc.base.sig, g);
    dc.extended = dc.base;
    dc.extended.axioms.push_back({"hyp", gen(Gen::Id0, Color::White), dc.hyp});

    Term start = random_term(rng, {n, m}, dc.base.sig, g);
    if (!dc.base.axioms.empty() && coin(rng)) {
        // Plant a closed copy of an axiom's left side next to the interface.
        const auto& ax = dc.base.axioms[pick(rng, static_cast<int>(dc.base.axioms.size()))];
        InterfaceType at = typecheck(ax.lhs, dc.base.sig);
        Term closed = seq(Color::White, sugar(SugarFamily::CodiscardN, Color::White, at.dom),
                          seq(Color::White, ax.lhs, sugar(SugarFamily::DiscardN, Color::White, at.cod)));
        start = tensor(Color::White, start, closed);
    }
    start = desugar(start);
    ProofBuilder pb(start, cat, dc.extended);
    int target = 1 + pick(rng, max_steps);
    int steps = 0;
    for (int attempt = 0; attempt < 200 && steps < target; ++attempt) {
        Term cur = pb.current();
        std::vector<Path> paths;
        Path tmp;
        collect_paths(cur, tmp, paths);
        const Path& p = paths[pick(rng, static_cast<int>(paths.size()))];
        Term sub = subterm_at(cur, p);
        int choice = pick(rng, 4);
        try {
            if (choice == 0 && steps + 2 <= target) {
                pb.reshape(tensor(Color::White, sub, gen(Gen::Id0, Color::White)), p);
                Path q = p;
                q.push_back(1);
                pb.apply("hyp", q);
                steps += 2;
            } else if (choice == 1) {
                for (const auto& ax : dc.base.axioms)
                    if (equal(normalize(desugar(ax.lhs)), normalize(sub))) {
                        pb.apply(ax.name, p);
                        ++steps;
                        break;
                    }
            } else {
                const auto& rules = cat.rules();
                const AxiomSchema& r = rules[pick(rng, static_cast<int>(rules.size()))];
                if (r.kind == RuleKind::Struct) continue;
                Direction dir = (r.kind == RuleKind::Eq && coin(rng)) ? Direction::Bwd : Direction::Fwd;
                std::map<char, int> ar;
                for (char v : arity_vars(r)) ar[v] = pick(rng, 3);
                Term src = grounded_side(dir == Direction::Fwd ? r.lhs : r.rhs, ar);
                Binding b;
                if (!match(src, sub, b)) continue;
                for (const auto& [name, t] : b.terms) {
                    InterfaceType ty = typecheck(t, dc.extended.sig);
                    const MetaScheme& sch = r.metas.at(name);
                    if (sch.dom.is_var()) ar[sch.dom.var] = ty.dom;
                    if (sch.cod.is_var()) ar[sch.cod.var] = ty.cod;
                }
                for (const auto& [name, sym] : b.symbols) {
                    const SymbolType& st = dc.extended.sig.symbols.at(sym);
                    const MetaScheme& sch = r.metas.at(name);
                    if (sch.dom.is_var()) ar[sch.dom.var] = st.ar;
                    if (sch.cod.is_var()) ar[sch.cod.var] = st.coar;
                }
                b.arities = ar;
                pb.apply(r.name, p, b, dir);
                ++steps;
            }
        } catch (const Error&) {
            // Inapplicable choice; the builder is unchanged.
        }
    }
    dc.proof = pb.finish();
    dc.lhs = start;
    dc.rhs = pb.current();
    return dc;
}

}  // namespace support
