#include "neopeirce/derived.hpp"

#include "neopeirce/syntax.hpp"

namespace neopeirce {

namespace {

InterfaceType same_type(const Term& a, const Term& b, const Signature& sig, const char* op) {
    InterfaceType ta = typecheck(a, sig), tb = typecheck(b, sig);
    if (!(ta == tb))
        throw Error(ErrorKind::TypeMismatch, std::string(op) + ": operands have types (" + std::to_string(ta.dom) +
                                                 "," + std::to_string(ta.cod) + ") and (" + std::to_string(tb.dom) +
                                                 "," + std::to_string(tb.cod) + ")");
    return ta;
}

Gen adjoint_gen(Gen g) {
    switch (g) {
        case Gen::Copier: return Gen::Cocopier;
        case Gen::Cocopier: return Gen::Copier;
        case Gen::Discard: return Gen::Codiscard;
        case Gen::Codiscard: return Gen::Discard;
        default: return g;
    }
}

}  // namespace

Term dagger(const Term& t, const Signature& sig, Color c) {
    InterfaceType ty = typecheck(t, sig);
    int n = ty.dom, m = ty.cod;
    auto S = [&](SugarFamily f, int k) { return sugar(f, c, k); };
    Term open = tensor(c, S(SugarFamily::IdN, m),
                       seq(c, S(SugarFamily::CodiscardN, n), S(SugarFamily::CopierN, n)));
    Term mid = tensor_chain(c, {S(SugarFamily::IdN, m), t, S(SugarFamily::IdN, n)});
    Term close = tensor(c, seq(c, S(SugarFamily::CocopierN, m), S(SugarFamily::DiscardN, m)),
                        S(SugarFamily::IdN, n));
    return seq_chain(c, {open, mid, close});
}

Term alpha(const Term& t0) {
    Term t = desugar(t0);
    switch (t->kind) {
        case Kind::Gen: return gen(adjoint_gen(t->gen), flip(t->color));
        case Kind::Rel: return rel(t->name, flip(t->color));
        case Kind::Seq: return seq(flip(t->color), alpha(t->right), alpha(t->left));
        case Kind::Tensor: return tensor(flip(t->color), alpha(t->left), alpha(t->right));
        case Kind::Sugar:
            throw Error(ErrorKind::ArityError, "alpha: sugar with a symbolic arity");
        case Kind::Meta:
            throw Error(ErrorKind::TypeMismatch, "alpha: metavariable $" + t->name);
    }
    return t;
}

Term negate(const Term& t, const Signature& sig) {
    typecheck(t, sig);
    return dagger(alpha(t), sig, Color::White);
}

Term meet(const Term& a, const Term& b, const Signature& sig) {
    InterfaceType ty = same_type(a, b, sig, "meet");
    return seq_chain(Color::White, {sugar(SugarFamily::CopierN, Color::White, ty.dom),
                                    tensor(Color::White, a, b),
                                    sugar(SugarFamily::CocopierN, Color::White, ty.cod)});
}

Term join(const Term& a, const Term& b, const Signature& sig) {
    InterfaceType ty = same_type(a, b, sig, "join");
    return seq_chain(Color::Black, {sugar(SugarFamily::CopierN, Color::Black, ty.dom),
                                    tensor(Color::Black, a, b),
                                    sugar(SugarFamily::CocopierN, Color::Black, ty.cod)});
}

Term top(int n, int m) {
    return seq(Color::White, sugar(SugarFamily::DiscardN, Color::White, n),
               sugar(SugarFamily::CodiscardN, Color::White, m));
}

Term bottom(int n, int m) {
    return seq(Color::Black, sugar(SugarFamily::DiscardN, Color::Black, n),
               sugar(SugarFamily::CodiscardN, Color::Black, m));
}

Term residual_left(const Term& b, const Term& a, const Signature& sig) {
    InterfaceType ta = typecheck(a, sig), tb = typecheck(b, sig);
    if (ta.cod != tb.cod)
        throw Error(ErrorKind::TypeMismatch, "residual_left: codomains " + std::to_string(tb.cod) + " and " +
                                                 std::to_string(ta.cod) + " differ");
    return seq(Color::Black, b, alpha(a));
}

std::array<SequentPair, 5> entailment_forms(const Term& a, const Term& b, const Signature& sig) {
    InterfaceType ty = same_type(a, b, sig, "entailment_forms");
    int n = ty.dom, m = ty.cod;
    Term neg_or = join(negate(a, sig), b, sig);
    Term closed = seq_chain(Color::Black, {sugar(SugarFamily::CodiscardN, Color::Black, n), neg_or,
                                           sugar(SugarFamily::DiscardN, Color::Black, m)});
    return {{{a, b},
             {sugar(SugarFamily::IdN, Color::White, n), seq(Color::Black, b, alpha(a))},
             {sugar(SugarFamily::IdN, Color::White, m), seq(Color::Black, alpha(a), b)},
             {top(n, m), neg_or},
             {gen(Gen::Id0, Color::White), closed}}};
}

}  // namespace neopeirce
