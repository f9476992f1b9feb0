#include "neopeirce/kernel.hpp"

#include <algorithm>
#include <set>

#include "neopeirce/syntax.hpp"

namespace neopeirce {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void unify(char var_or_zero, int lit, int actual, std::map<char, int>& arities, const std::string& what) {
    if (var_or_zero == 0) {
        if (lit != actual)
            throw Error(ErrorKind::TypeMismatch,
                        what + " has arity " + std::to_string(actual) + ", rule expects " + std::to_string(lit));
        return;
    }
    auto [it, fresh] = arities.emplace(var_or_zero, actual);
    if (!fresh && it->second != actual)
        throw Error(ErrorKind::TypeMismatch, what + " forces " + std::string(1, var_or_zero) + " = " +
                                                 std::to_string(actual) + " but it is " + std::to_string(it->second));
}

void unify(const MetaScheme& sch, InterfaceType ty, std::map<char, int>& arities, const std::string& what) {
    unify(sch.dom.var, sch.dom.value, ty.dom, arities, what);
    unify(sch.cod.var, sch.cod.value, ty.cod, arities, what);
}

Term apply_struct(const Term& t, const Term& redex, const Step& s, const Signature& sig) {
    auto b = s.subst.terms.find("b");
    if (b == s.subst.terms.end()) throw Error(ErrorKind::MissingSubst, "smc.struct needs $b");
    if (auto a = s.subst.terms.find("a"); a != s.subst.terms.end() && !struct_eq(a->second, redex))
        throw Error(ErrorKind::RedexMismatch, "$a does not match the subterm at " + path_string(s.path), s.path);
    if (!(typecheck(b->second, sig) == typecheck(redex, sig)))
        throw Error(ErrorKind::TypeMismatch, "$b has a different type than the redex", s.path);
    if (!struct_eq(redex, b->second))
        throw Error(ErrorKind::RedexMismatch,
                    "smc.struct: " + render(b->second) + " is not structurally equal to " + render(redex), s.path);
    return replace_at(t, s.path, b->second);
}

}  // namespace

ResolvedRule resolve_rule(const std::string& name, Direction dir, const RuleCatalog& cat, const Theory& T) {
    ResolvedRule r;
    r.dir = dir;
    if ((r.schema = cat.find(name))) {
    } else if (ends_with(name, ".fwd") || ends_with(name, ".bwd")) {
        r.schema = cat.find(name.substr(0, name.size() - 4));
        if (r.schema && r.schema->kind == RuleKind::Leq) r.schema = nullptr;
        if (r.schema) {
            bool bwd = ends_with(name, ".bwd");
            if (dir == Direction::Bwd)
                throw Error(ErrorKind::IllegalDirection, "directed rule name " + name + " used with dir bwd");
            r.dir = bwd ? Direction::Bwd : Direction::Fwd;
        }
    }
    if (!r.schema) r.axiom = T.find(name);
    if (!r.schema && !r.axiom) throw Error(ErrorKind::UnknownRule, "unknown rule " + name);
    bool one_way = r.axiom || r.schema->kind == RuleKind::Leq;
    if (one_way && r.dir == Direction::Bwd)
        throw Error(ErrorKind::IllegalDirection, "rule " + name + " is an inclusion and cannot be used backwards");
    return r;
}

Term apply_step(const Term& t, const Step& s, const RuleCatalog& cat, const Theory& T) {
    ResolvedRule rr = resolve_rule(s.rule, s.dir, cat, T);
    Term redex = subterm_at(t, s.path);
    InterfaceType rt = typecheck(redex, T.sig);
    Term redex_nf = normalize(desugar(redex));

    if (rr.axiom) {
        if (!equal(normalize(desugar(rr.axiom->lhs)), redex_nf))
            throw Error(ErrorKind::RedexMismatch,
                        "axiom " + rr.axiom->name + " does not match " + render(redex) + " at " + path_string(s.path),
                        s.path);
        return replace_at(t, s.path, rr.axiom->rhs);
    }

    const AxiomSchema& sch = *rr.schema;
    if (sch.kind == RuleKind::Struct) return apply_struct(t, redex, s, T.sig);

    const Term& src = rr.dir == Direction::Fwd ? sch.lhs : sch.rhs;
    const Term& tgt = rr.dir == Direction::Fwd ? sch.rhs : sch.lhs;

    Binding b = s.subst;
    for (const auto& m : term_metas(sch)) {
        auto it = b.terms.find(m);
        if (it == b.terms.end()) throw Error(ErrorKind::MissingSubst, "rule " + sch.name + " needs $" + m);
        unify(sch.metas.at(m), typecheck(it->second, T.sig), b.arities, "$" + m);
    }
    for (const auto& m : symbol_metas(sch)) {
        auto it = b.symbols.find(m);
        if (it == b.symbols.end()) throw Error(ErrorKind::MissingSubst, "rule " + sch.name + " needs symbol $" + m);
        auto sym = T.sig.symbols.find(it->second);
        if (sym == T.sig.symbols.end()) throw Error(ErrorKind::UnknownSymbol, "unknown symbol " + it->second);
        unify(sch.metas.at(m), InterfaceType{sym->second.ar, sym->second.coar}, b.arities, "$" + m);
    }
    for (const auto& m : sch.map_metas)
        if (!is_syntactic_map(b.terms.at(m), T))
            throw Error(ErrorKind::RedexMismatch, "rule " + sch.name + " needs a map for $" + m, s.path);

    std::vector<char> free;
    for (char v : arity_vars(sch))
        if (!b.arities.count(v)) free.push_back(v);

    auto matches = [&](const Binding& bb, Term& out) {
        Term is;
        try {
            is = instantiate(src, bb);
            if (!(typecheck(is, T.sig) == rt)) return false;
        } catch (const Error&) {
            return false;
        }
        if (!equal(normalize(desugar(is)), redex_nf)) return false;
        out = instantiate(tgt, bb);
        return true;
    };

    if (free.empty()) {
        Term out;
        if (!matches(b, out))
            throw Error(ErrorKind::RedexMismatch,
                        "rule " + sch.name + " source " + render(instantiate(src, b)) + " does not match " +
                            render(redex) + " at " + path_string(s.path),
                        s.path);
        return replace_at(t, s.path, out);
    }

    if (free.size() > 4)
        throw Error(ErrorKind::AmbiguousArity, "rule " + sch.name + ": too many unbound arities, bind them in subst");
    int bound = std::max(rt.dom, rt.cod) + 1;
    std::vector<Term> found;
    std::vector<int> vals(free.size(), 0);
    while (true) {
        Binding bb = b;
        for (size_t i = 0; i < free.size(); ++i) bb.arities[free[i]] = vals[i];
        Term out;
        if (matches(bb, out)) {
            bool dup = false;
            for (const auto& f : found) dup = dup || struct_eq(f, out);
            if (!dup) found.push_back(out);
        }
        size_t i = 0;
        while (i < vals.size() && ++vals[i] > bound) vals[i++] = 0;
        if (i == vals.size()) break;
    }
    if (found.empty())
        throw Error(ErrorKind::RedexMismatch,
                    "rule " + sch.name + " does not match " + render(redex) + " at " + path_string(s.path), s.path);
    if (found.size() > 1)
        throw Error(ErrorKind::AmbiguousArity,
                    "rule " + sch.name + " matches with several arities; bind them explicitly in subst", s.path);
    return replace_at(t, s.path, found.front());
}

CheckReport check_proof(const Proof& p, const RuleCatalog& cat, const Theory& T) {
    typecheck(p.start, T.sig);
    CheckReport rep;
    Term cur = p.start;
    std::set<std::string> derived, axioms;
    for (size_t i = 0; i < p.steps.size(); ++i) {
        const Step& s = p.steps[i];
        try {
            cur = apply_step(cur, s, cat, T);
            ResolvedRule rr = resolve_rule(s.rule, s.dir, cat, T);
            if (rr.schema && rr.schema->derived) derived.insert(rr.schema->name);
            if (rr.axiom) axioms.insert(rr.axiom->name);
        } catch (const Error& e) {
            throw Error(e.kind(), "step " + std::to_string(i) + " (" + s.rule + "): " + e.what(), e.path());
        }
    }
    rep.sequent = {p.start, cur};
    rep.steps = p.steps.size();
    rep.derived_rules_used.assign(derived.begin(), derived.end());
    rep.theory_axioms_used.assign(axioms.begin(), axioms.end());
    return rep;
}

std::pair<Sequent, Sequent> tmap_axioms(const std::string& f, const Signature& sig) {
    auto it = sig.symbols.find(f);
    if (it == sig.symbols.end()) throw Error(ErrorKind::UnknownSymbol, "unknown symbol " + f);
    if (it->second.coar != 1) throw Error(ErrorKind::ArityError, f + " must have coarity 1");
    int n = it->second.ar;
    Term fo = rel(f, Color::White);
    Sequent single{seq(Color::White, fo, gen(Gen::Copier, Color::White)),
                   seq(Color::White, sugar(SugarFamily::CopierN, Color::White, n), tensor(Color::White, fo, fo))};
    Sequent total{sugar(SugarFamily::DiscardN, Color::White, n), seq(Color::White, fo, gen(Gen::Discard, Color::White))};
    return {single, total};
}

EndpointClass classify_endpoints(const Sequent& s) {
    auto is = [](const Term& t, Gen g, Color c) { return struct_eq(t, gen(g, c)); };
    if (is(s.lhs, Gen::Id0, Color::White) && is(s.rhs, Gen::Id0, Color::Black)) return EndpointClass::Contradiction;
    if (is(s.lhs, Gen::Codiscard, Color::White) && is(s.rhs, Gen::Codiscard, Color::Black))
        return EndpointClass::Triviality;
    return EndpointClass::Plain;
}

const char* to_string(EndpointClass c) {
    switch (c) {
        case EndpointClass::Contradiction: return "contradiction";
        case EndpointClass::Triviality: return "triviality";
        case EndpointClass::Plain: return "plain";
    }
    return "plain";
}

bool is_syntactic_map(const Term& t, const Theory& T) {
    switch (t->kind) {
        case Kind::Gen:
            return t->color == Color::White && t->gen != Gen::Cocopier && t->gen != Gen::Codiscard;
        case Kind::Sugar:
            return t->color == Color::White && t->fam != SugarFamily::CocopierN && t->fam != SugarFamily::CodiscardN;
        case Kind::Rel: {
            if (t->color != Color::White) return false;
            auto it = T.sig.symbols.find(t->name);
            if (it == T.sig.symbols.end() || it->second.coar != 1) return false;
            auto [single, total] = tmap_axioms(t->name, T.sig);
            auto has = [&](const Sequent& q) {
                for (const auto& a : T.axioms)
                    if (struct_eq(a.lhs, q.lhs) && struct_eq(a.rhs, q.rhs)) return true;
                return false;
            };
            return has(single) && has(total);
        }
        case Kind::Seq:
        case Kind::Tensor:
            return t->color == Color::White && is_syntactic_map(t->left, T) && is_syntactic_map(t->right, T);
        case Kind::Meta: return false;
    }
    return false;
}

RuleCatalog register_derived_rule(const DerivedRule& r, const RuleCatalog& cat, const Theory& T) {
    const AxiomSchema& s = r.schema;
    if (cat.find(s.name) || T.find(s.name)) throw Error(ErrorKind::JustificationFailed, "rule name taken: " + s.name);
    if (!symbol_metas(s).empty())
        throw Error(ErrorKind::JustificationFailed, "derived rules cannot quantify over symbols");
    std::vector<char> vars = arity_vars(s);
    AxiomSchema out = s;
    out.derived = true;

    auto grounded = [&](const std::map<char, int>& ar, Signature& sig, Term& lhs, Term& rhs) {
        sig = T.sig;
        Binding b;
        b.arities = ar;
        for (const auto& [name, sch] : s.metas) {
            if (sig.has(name))
                throw Error(ErrorKind::JustificationFailed, "metavariable $" + name + " clashes with a symbol");
            int d = sch.dom.is_var() ? ar.at(sch.dom.var) : sch.dom.value;
            int c = sch.cod.is_var() ? ar.at(sch.cod.var) : sch.cod.value;
            sig.symbols[name] = {d, c};
            b.terms[name] = rel(name, Color::White);
        }
        lhs = instantiate(s.lhs, b);
        rhs = instantiate(s.rhs, b);
        if (!(typecheck(lhs, sig) == typecheck(rhs, sig)))
            throw Error(ErrorKind::JustificationFailed, "sides of " + s.name + " have different types");
    };

    if (r.justification == DerivedRule::Kind::Proof) {
        if (!vars.empty() || s.kind != RuleKind::Leq || !r.proof)
            throw Error(ErrorKind::JustificationFailed,
                        "proof-justified rules must be inclusions with fixed arities and carry a proof");
        Signature sig;
        Term lhs, rhs;
        grounded({}, sig, lhs, rhs);
        Theory ext{sig, T.axioms};
        CheckReport rep;
        try {
            rep = check_proof(*r.proof, cat, ext);
        } catch (const Error& e) {
            throw Error(ErrorKind::JustificationFailed, std::string("justifying proof fails: ") + e.what());
        }
        if (!struct_eq(rep.sequent.lhs, lhs) || !struct_eq(rep.sequent.rhs, rhs))
            throw Error(ErrorKind::JustificationFailed, "justifying proof has the wrong endpoints");
        out.justification = "proof";
    } else {
        if (r.max_size < 2) throw Error(ErrorKind::JustificationFailed, "oracle validation needs max_size >= 2");
        size_t combos = 1;
        for (size_t i = 0; i < vars.size(); ++i) combos *= 3;
        for (size_t code = 0; code < combos; ++code) {
            std::map<char, int> ar;
            size_t c = code;
            for (char v : vars) {
                ar[v] = static_cast<int>(c % 3);
                c /= 3;
            }
            Signature sig;
            Term lhs, rhs;
            grounded(ar, sig, lhs, rhs);
            OracleOptions opt;
            opt.max_size = r.max_size;
            opt.functional = s.map_metas;
            auto check = [&](const Term& a, const Term& b) {
                Verdict v = bounded_counterexample(a, b, sig, opt);
                if (!v.holds)
                    throw Error(ErrorKind::JustificationFailed,
                                "counterexample for " + s.name + " at |X| = " + std::to_string(v.interp.domain_size));
            };
            check(lhs, rhs);
            if (s.kind == RuleKind::Eq) check(rhs, lhs);
        }
        out.justification = "oracle(" + std::to_string(r.max_size) + ")";
    }
    RuleCatalog next = cat;
    next.add(out);
    return next;
}

}  // namespace neopeirce
