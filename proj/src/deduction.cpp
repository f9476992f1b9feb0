#include "neopeirce/deduction.hpp"

#include "neopeirce/derived.hpp"
#include "neopeirce/syntax.hpp"

namespace neopeirce {

ProofBuilder::ProofBuilder(Term start, const RuleCatalog& cat, const Theory& T)
    : cur_(std::move(start)), cat_(cat), T_(T) {
    proof_.start = cur_;
}

ProofBuilder& ProofBuilder::apply(const std::string& rule, const Path& path, Binding subst, Direction dir) {
    Step s{rule, dir, path, std::move(subst)};
    cur_ = apply_step(cur_, s, cat_, T_);
    proof_.steps.push_back(std::move(s));
    return *this;
}

ProofBuilder& ProofBuilder::reshape(const Term& shape, const Path& path) {
    if (equal(subterm_at(cur_, path), shape)) return *this;
    return apply("smc.struct", path, bind({{"b", shape}}));
}

ProofBuilder& ProofBuilder::embed(const Proof& sub, const Path& at) {
    reshape(sub.start, at);
    for (const Step& s : sub.steps) {
        Path p = at;
        p.insert(p.end(), s.path.begin(), s.path.end());
        apply(s.rule, p, s.subst, s.dir);
    }
    return *this;
}

Proof ProofBuilder::finish() const {
    Proof p = proof_;
    return p;
}

Binding bind(std::initializer_list<std::pair<const std::string, Term>> terms, std::map<char, int> arities) {
    Binding b;
    b.terms = terms;
    b.arities = std::move(arities);
    return b;
}

namespace {

constexpr Color W = Color::White;
constexpr Color B = Color::Black;

Term idw(int n) { return sugar(SugarFamily::IdN, W, n); }
Term idb(int n) { return sugar(SugarFamily::IdN, B, n); }

std::string sign(Color c) { return c == W ? "+" : "-"; }

// Rule family suffix and arity binding for the per-generator unit/counit rows.
std::string gen_family(Gen g) {
    switch (g) {
        case Gen::Copier: return "cp";
        case Gen::Discard: return "dc";
        case Gen::Cocopier: return "cc";
        case Gen::Codiscard: return "cd";
        case Gen::Symm: return "sw";
        default: return "";
    }
}

std::map<char, int> gen_arities(Gen g) {
    if (g == Gen::Symm) return {{'n', 1}, {'m', 1}};
    return {{'n', 1}};
}

void reject_open(const Term& d, const char* what) {
    if (d->kind == Kind::Meta) throw Error(ErrorKind::InputError, std::string(what) + ": metavariable in term");
    if (d->kind == Kind::Sugar) throw Error(ErrorKind::ArityError, std::string(what) + ": symbolic arity in term");
}

}  // namespace

Proof unit_lemma(const Term& t, const RuleCatalog& cat, const Theory& T) {
    InterfaceType ty = typecheck(t, T.sig);
    Term d = desugar(t);
    ProofBuilder b(idw(ty.dom), cat, T);
    switch (d->kind) {
        case Kind::Gen:
            if (d->gen != Gen::Id0 && d->gen != Gen::Id1) {
                Binding bb;
                bb.arities = gen_arities(d->gen);
                b.apply("tau." + gen_family(d->gen) + sign(d->color), {}, bb);
            }
            break;
        case Kind::Rel: {
            Binding bb;
            bb.symbols["R"] = d->name;
            b.apply(d->color == W ? "tau.R+" : "tau.R-", {}, bb);
            break;
        }
        case Kind::Seq: {
            Term x = d->left, y = d->right, ax = alpha(x), ay = alpha(y);
            int l = typecheck(x, T.sig).cod;
            b.embed(unit_lemma(x, cat, T), {});
            if (d->color == W) {
                b.reshape(seq(B, seq(W, x, idw(l)), ax));
                b.embed(unit_lemma(y, cat, T), {0, 1});
                b.apply("delta.l", {0}, bind({{"a", x}, {"b", y}, {"c", ay}}));
            } else {
                b.reshape(seq(B, x, seq(W, idw(l), ax)));
                b.embed(unit_lemma(y, cat, T), {1, 0});
                b.apply("delta.r", {1}, bind({{"a", y}, {"b", ay}, {"c", ax}}));
            }
            break;
        }
        case Kind::Tensor: {
            Term x = d->left, y = d->right;
            b.reshape(tensor(W, idw(typecheck(x, T.sig).dom), idw(typecheck(y, T.sig).dom)));
            b.embed(unit_lemma(x, cat, T), {0});
            b.embed(unit_lemma(y, cat, T), {1});
            b.apply(d->color == W ? "nu.o.l" : "nu.o.r", {},
                    bind({{"a", x}, {"b", alpha(x)}, {"c", y}, {"d", alpha(y)}}));
            break;
        }
        default: reject_open(d, "unit_lemma");
    }
    b.reshape(seq(B, t, alpha(t)));
    return b.finish();
}

Proof counit_lemma(const Term& t, const RuleCatalog& cat, const Theory& T) {
    InterfaceType ty = typecheck(t, T.sig);
    Term d = desugar(t);
    ProofBuilder b(seq(W, alpha(t), t), cat, T);
    switch (d->kind) {
        case Kind::Gen:
            if (d->gen != Gen::Id0 && d->gen != Gen::Id1) {
                Binding bb;
                bb.arities = gen_arities(d->gen);
                b.apply("gamma." + gen_family(d->gen) + sign(d->color), {}, bb);
            }
            break;
        case Kind::Rel: {
            Binding bb;
            bb.symbols["R"] = d->name;
            b.apply(d->color == W ? "gamma.R+" : "gamma.R-", {}, bb);
            break;
        }
        case Kind::Seq: {
            Term x = d->left, y = d->right, ax = alpha(x), ay = alpha(y);
            if (d->color == W) {
                b.reshape(seq(W, seq(W, seq(B, ay, ax), x), y));
                b.apply("delta.r", {0}, bind({{"a", ay}, {"b", ax}, {"c", x}}));
                b.embed(counit_lemma(x, cat, T), {0, 1});
            } else {
                b.reshape(seq(W, ay, seq(W, ax, seq(B, x, y))));
                b.apply("delta.l", {1}, bind({{"a", ax}, {"b", x}, {"c", y}}));
                b.embed(counit_lemma(x, cat, T), {1, 0});
            }
            b.reshape(seq(W, ay, y));
            b.embed(counit_lemma(y, cat, T), {});
            break;
        }
        case Kind::Tensor: {
            Term x = d->left, y = d->right, ax = alpha(x), ay = alpha(y);
            b.reshape(seq(W, tensor(flip(d->color), ax, ay), tensor(d->color, x, y)));
            b.apply(d->color == W ? "nu.b.l" : "nu.b.r", {}, bind({{"a", ax}, {"b", x}, {"c", ay}, {"d", y}}));
            b.embed(counit_lemma(x, cat, T), {0});
            b.embed(counit_lemma(y, cat, T), {1});
            break;
        }
        default: reject_open(d, "counit_lemma");
    }
    b.reshape(idb(ty.cod));
    return b.finish();
}

namespace {

struct Transformer {
    const RuleCatalog& cat;
    const Theory& T;
    Term c;
    std::string hyp;

    Term K(int n) const { return tensor(W, c, idw(n)); }

    // c *+ id+@n <= t ;- alpha(t)
    Proof reflexive(const Term& t) const {
        ProofBuilder b(K(typecheck(t, T.sig).dom), cat, T);
        b.apply("dc+.nat", {0}, bind({{"c", c}}));
        b.embed(unit_lemma(t, cat, T), {});
        return b.finish();
    }

    // c *+ id+@n <= t' ;- alpha(t), where t' is t rewritten by s below depth d.
    std::pair<Proof, Term> rewrite(const Term& t, const Step& s, size_t d) const {
        int n = typecheck(t, T.sig).dom;
        ProofBuilder b(K(n), cat, T);
        if (d == s.path.size()) {
            if (s.rule == hyp) {
                b.reshape(seq(B, c, alpha(t)));
                return {b.finish(), c};
            }
            b.embed(reflexive(t), {});
            b.apply(s.rule, {0}, s.subst, s.dir);
            return {b.finish(), b.current()->left};
        }
        if (!is_binary(t)) throw Error(ErrorKind::InvalidPath, "path runs past a leaf", s.path);
        int k = s.path[d];
        Term x = t->left, y = t->right;
        Proof P1, P2;
        Term xn = x, yn = y;
        if (k == 0) {
            std::tie(P1, xn) = rewrite(x, s, d + 1);
            P2 = reflexive(y);
        } else {
            P1 = reflexive(x);
            std::tie(P2, yn) = rewrite(y, s, d + 1);
        }
        Term ax = alpha(x), ay = alpha(y);
        b.apply("cp+.nat", {0}, bind({{"c", c}}));
        if (t->kind == Kind::Seq) {
            int l = typecheck(x, T.sig).cod;
            b.reshape(tensor(W, c, K(n)));
            b.embed(P1, {1});
            if (t->color == W) {
                b.apply("nu.o.l", {}, bind({{"a", c}, {"b", gen(Gen::Id0, B)}, {"c", xn}, {"d", ax}}));
                b.apply("smc.interchange+", {0}, bind({{"a", gen(Gen::Id0, W)}, {"c", c}, {"b", xn}, {"d", idw(l)}}),
                        Direction::Bwd);
                b.reshape(seq(B, seq(W, xn, K(l)), ax));
                b.embed(P2, {0, 1});
                b.apply("delta.l", {0}, bind({{"a", xn}, {"b", yn}, {"c", ay}}));
            } else {
                b.apply("nu.o.r", {}, bind({{"a", gen(Gen::Id0, B)}, {"b", c}, {"c", xn}, {"d", ax}}));
                b.apply("smc.interchange+", {1}, bind({{"a", c}, {"c", gen(Gen::Id0, W)}, {"b", idw(l)}, {"d", ax}}),
                        Direction::Bwd);
                b.reshape(seq(B, xn, seq(W, K(l), ax)));
                b.embed(P2, {1, 0});
                b.apply("delta.r", {1}, bind({{"a", yn}, {"b", ay}, {"c", ax}}));
            }
        } else {
            int n1 = typecheck(x, T.sig).dom, n2 = typecheck(y, T.sig).dom;
            b.reshape(tensor(W, c, tensor(W, K(n1), idw(n2))));
            b.apply("smc.sym.nat+", {1, 0}, bind({{"a", c}}, {{'o', n1}}));
            b.reshape(tensor(W, K(n1), K(n2)));
            b.embed(P1, {0});
            b.embed(P2, {1});
            b.apply(t->color == W ? "nu.o.l" : "nu.o.r", {}, bind({{"a", xn}, {"b", ax}, {"c", yn}, {"d", ay}}));
        }
        Term tn = t->kind == Kind::Seq ? seq(t->color, xn, yn) : tensor(t->color, xn, yn);
        b.reshape(seq(B, tn, alpha(t)));
        return {b.finish(), tn};
    }

    // From acc: K <= prev ;- alpha(first) and step: K <= next ;- alpha(prev).
    Proof compose(const Proof& acc, const Proof& step, const Term& first, const Term& prev, const Term& next) const {
        int n = typecheck(first, T.sig).dom;
        Term e = gen(Gen::Id0, W);
        ProofBuilder b(K(n), cat, T);
        b.apply("cp+.nat", {0}, bind({{"c", c}}));
        b.apply("smc.interchange+", {0, 1}, bind({{"a", c}, {"c", e}, {"b", e}, {"d", c}}), Direction::Bwd);
        b.reshape(tensor(W, seq(W, c, c), seq(W, idw(n), idw(n))));
        b.apply("smc.interchange+", {}, bind({{"a", c}, {"c", c}, {"b", idw(n)}, {"d", idw(n)}}), Direction::Bwd);
        b.embed(step, {0});
        b.embed(acc, {1});
        Term ap = alpha(prev), af = alpha(first);
        b.apply("delta.r", {}, bind({{"a", next}, {"b", ap}, {"c", seq(B, prev, af)}}));
        b.apply("delta.l", {1}, bind({{"a", ap}, {"b", prev}, {"c", af}}));
        b.embed(counit_lemma(prev, cat, T), {1, 0});
        b.reshape(seq(B, next, af));
        return b.finish();
    }
};

}  // namespace

Proof deduction_transform(const Proof& p, const Theory& T, const Term& c, const std::string& hyp,
                          const RuleCatalog& cat) {
    InterfaceType ct = typecheck(c, T.sig);
    if (ct.dom != 0 || ct.cod != 0)
        throw Error(ErrorKind::NotClosedFormula, "hypothesis must have type 0 -> 0, got " + std::to_string(ct.dom) +
                                                     " -> " + std::to_string(ct.cod));
    if (cat.find(hyp) || T.find(hyp))
        throw Error(ErrorKind::InputError, "hypothesis name " + hyp + " clashes with an existing rule");
    Theory Tp = T;
    Tp.axioms.push_back({hyp, gen(Gen::Id0, W), c});
    for (size_t i = 0; i < p.steps.size(); ++i) {
        const Step& s = p.steps[i];
        if (s.rule == hyp) continue;
        try {
            resolve_rule(s.rule, s.dir, cat, T);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::UnknownRule) throw;
            throw Error(ErrorKind::UsesUnknownRule, "step " + std::to_string(i) + " uses unknown rule " + s.rule);
        }
    }
    check_proof(p, cat, Tp);

    Transformer tr{cat, T, c, hyp};
    std::vector<Term> ts{p.start};
    for (const Step& s : p.steps) ts.push_back(apply_step(ts.back(), s, cat, Tp));

    Proof acc = tr.reflexive(p.start);
    for (size_t i = 0; i < p.steps.size(); ++i) {
        Proof step = tr.rewrite(ts[i], p.steps[i], 0).first;
        acc = i == 0 ? step : tr.compose(acc, step, ts[0], ts[i], ts[i + 1]);
    }
    acc.theory_ref = p.theory_ref;
    return acc;
}

}  // namespace neopeirce
