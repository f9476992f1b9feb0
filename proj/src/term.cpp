#include "neopeirce/term.hpp"

namespace neopeirce {

const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UnknownSymbol: return "UnknownSymbol";
        case ErrorKind::TypeMismatch: return "TypeMismatch";
        case ErrorKind::InvalidPath: return "InvalidPath";
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::ManifestError: return "ManifestError";
        case ErrorKind::RedexMismatch: return "RedexMismatch";
        case ErrorKind::IllegalDirection: return "IllegalDirection";
        case ErrorKind::UnknownRule: return "UnknownRule";
        case ErrorKind::MissingSubst: return "MissingSubst";
        case ErrorKind::AmbiguousArity: return "AmbiguousArity";
        case ErrorKind::JustificationFailed: return "JustificationFailed";
        case ErrorKind::NotClosedFormula: return "NotClosedFormula";
        case ErrorKind::UsesUnknownRule: return "UsesUnknownRule";
        case ErrorKind::ArityError: return "ArityError";
        case ErrorKind::ScopeError: return "ScopeError";
        case ErrorKind::NonFunctionalSymbol: return "NonFunctionalSymbol";
        case ErrorKind::Untypable: return "Untypable";
        case ErrorKind::TruncationTooSmall: return "TruncationTooSmall";
        case ErrorKind::InputError: return "InputError";
    }
    return "Error";
}

namespace {

Term make(TermNode n) { return std::make_shared<const TermNode>(std::move(n)); }

}  // namespace

Term gen(Gen g, Color c) {
    TermNode n{};
    n.kind = Kind::Gen;
    n.gen = g;
    n.color = c;
    return make(std::move(n));
}

Term rel(const std::string& name, Color c) {
    TermNode n{};
    n.kind = Kind::Rel;
    n.name = name;
    n.color = c;
    return make(std::move(n));
}

Term seq(Color c, Term l, Term r) {
    TermNode n{};
    n.kind = Kind::Seq;
    n.color = c;
    n.left = std::move(l);
    n.right = std::move(r);
    return make(std::move(n));
}

Term tensor(Color c, Term l, Term r) {
    TermNode n{};
    n.kind = Kind::Tensor;
    n.color = c;
    n.left = std::move(l);
    n.right = std::move(r);
    return make(std::move(n));
}

Term sugar(SugarFamily f, Color c, Arity a, Arity b) {
    TermNode n{};
    n.kind = Kind::Sugar;
    n.fam = f;
    n.color = c;
    n.n = a;
    n.m = b;
    return make(std::move(n));
}

Term sugar(SugarFamily f, Color c, int a, int b) { return sugar(f, c, Arity::lit(a), Arity::lit(b)); }

Term meta(const std::string& name) {
    TermNode n{};
    n.kind = Kind::Meta;
    n.name = name;
    return make(std::move(n));
}

Term seq_chain(Color c, const std::vector<Term>& parts) {
    if (parts.empty()) return gen(Gen::Id0, c);
    Term acc = parts.back();
    for (size_t i = parts.size() - 1; i-- > 0;) acc = seq(c, parts[i], acc);
    return acc;
}

Term tensor_chain(Color c, const std::vector<Term>& parts) {
    if (parts.empty()) return gen(Gen::Id0, c);
    Term acc = parts.back();
    for (size_t i = parts.size() - 1; i-- > 0;) acc = tensor(c, parts[i], acc);
    return acc;
}

bool equal(const Term& a, const Term& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Kind::Gen: return a->gen == b->gen && a->color == b->color;
        case Kind::Rel: return a->name == b->name && a->color == b->color;
        case Kind::Meta: return a->name == b->name;
        case Kind::Sugar:
            return a->fam == b->fam && a->color == b->color && a->n == b->n &&
                   (a->fam != SugarFamily::SymmNM || a->m == b->m);
        case Kind::Seq:
        case Kind::Tensor:
            return a->color == b->color && equal(a->left, b->left) && equal(a->right, b->right);
    }
    return false;
}

size_t term_size(const Term& t) {
    if (is_binary(t)) return 1 + term_size(t->left) + term_size(t->right);
    return 1;
}

bool has_meta(const Term& t) {
    if (t->kind == Kind::Meta) return true;
    if (t->kind == Kind::Rel) return !t->name.empty() && t->name[0] == '$';
    if (t->kind == Kind::Sugar) return t->n.is_var() || t->m.is_var();
    if (is_binary(t)) return has_meta(t->left) || has_meta(t->right);
    return false;
}

}  // namespace neopeirce
