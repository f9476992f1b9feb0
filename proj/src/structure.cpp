#include "neopeirce/syntax.hpp"

namespace neopeirce {

namespace {

int resolve(Arity a, const MetaTyping& env, const Path& path) {
    if (!a.is_var()) return a.value;
    auto it = env.arities.find(a.var);
    if (it == env.arities.end())
        throw Error(ErrorKind::TypeMismatch, std::string("unbound arity variable ") + a.var, path);
    return it->second;
}

InterfaceType type_of(const Term& t, const Signature& sig, const MetaTyping& env, Path& path) {
    switch (t->kind) {
        case Kind::Gen:
            switch (t->gen) {
                case Gen::Copier: return {1, 2};
                case Gen::Discard: return {1, 0};
                case Gen::Cocopier: return {2, 1};
                case Gen::Codiscard: return {0, 1};
                case Gen::Id0: return {0, 0};
                case Gen::Id1: return {1, 1};
                case Gen::Symm: return {2, 2};
            }
            break;
        case Kind::Rel: {
            auto it = sig.symbols.find(t->name);
            if (it == sig.symbols.end())
                throw Error(ErrorKind::UnknownSymbol, "unknown symbol " + t->name, path);
            if (t->color == Color::White) return {it->second.ar, it->second.coar};
            return {it->second.coar, it->second.ar};
        }
        case Kind::Meta: {
            auto it = env.metas.find(t->name);
            if (it == env.metas.end())
                throw Error(ErrorKind::UnknownSymbol, "unbound metavariable $" + t->name, path);
            return it->second;
        }
        case Kind::Sugar: {
            int n = resolve(t->n, env, path);
            int m = t->fam == SugarFamily::SymmNM ? resolve(t->m, env, path) : 0;
            if (n < 0 || m < 0) throw Error(ErrorKind::TypeMismatch, "negative arity", path);
            switch (t->fam) {
                case SugarFamily::CopierN: return {n, 2 * n};
                case SugarFamily::DiscardN: return {n, 0};
                case SugarFamily::CocopierN: return {2 * n, n};
                case SugarFamily::CodiscardN: return {0, n};
                case SugarFamily::IdN: return {n, n};
                case SugarFamily::SymmNM: return {n + m, m + n};
            }
            break;
        }
        case Kind::Seq:
        case Kind::Tensor: {
            path.push_back(0);
            InterfaceType a = type_of(t->left, sig, env, path);
            path.back() = 1;
            InterfaceType b = type_of(t->right, sig, env, path);
            path.pop_back();
            if (t->kind == Kind::Tensor) return {a.dom + b.dom, a.cod + b.cod};
            if (a.cod != b.dom)
                throw Error(ErrorKind::TypeMismatch,
                            "composition interface mismatch (" + std::to_string(a.cod) + " vs " +
                                std::to_string(b.dom) + ") at " + path_string(path),
                            path);
            return {a.dom, b.cod};
        }
    }
    throw Error(ErrorKind::TypeMismatch, "malformed term", path);
}

Term id_n(Color c, int n) {
    if (n == 0) return gen(Gen::Id0, c);
    std::vector<Term> parts(n, gen(Gen::Id1, c));
    return tensor_chain(c, parts);
}

Term symm(Color c, int m, int n) {
    if (m == 0) return id_n(c, n);
    if (n == 0) return id_n(c, m);
    if (m == 1 && n == 1) return gen(Gen::Symm, c);
    if (m == 1)  // σ_{1,n} = (σ_{1,n-1} ⊗ id1) ; (id_{n-1} ⊗ σ_{1,1})
        return seq(c, tensor(c, symm(c, 1, n - 1), gen(Gen::Id1, c)),
                   tensor(c, id_n(c, n - 1), gen(Gen::Symm, c)));
    // σ_{m,n} = (id1 ⊗ σ_{m-1,n}) ; (σ_{1,n} ⊗ id_{m-1})
    return seq(c, tensor(c, gen(Gen::Id1, c), symm(c, m - 1, n)),
               tensor(c, symm(c, 1, n), id_n(c, m - 1)));
}

Term copier(Color c, int n) {
    if (n == 0) return gen(Gen::Id0, c);
    if (n == 1) return gen(Gen::Copier, c);
    int k = n - 1;
    return seq(c, tensor(c, gen(Gen::Copier, c), copier(c, k)),
               tensor(c, gen(Gen::Id1, c), tensor(c, symm(c, 1, k), id_n(c, k))));
}

Term cocopier(Color c, int n) {
    if (n == 0) return gen(Gen::Id0, c);
    if (n == 1) return gen(Gen::Cocopier, c);
    int k = n - 1;
    return seq(c, tensor(c, gen(Gen::Id1, c), tensor(c, symm(c, k, 1), id_n(c, k))),
               tensor(c, gen(Gen::Cocopier, c), cocopier(c, k)));
}

Term repeat(Gen g, Color c, int n) {
    if (n == 0) return gen(Gen::Id0, c);
    if (n == 1) return gen(g, c);
    return tensor(c, gen(g, c), repeat(g, c, n - 1));
}

void flatten(const Term& t, Kind k, Color c, std::vector<Term>& out) {
    if (t->kind == k && t->color == c) {
        flatten(t->left, k, c, out);
        flatten(t->right, k, c, out);
    } else {
        out.push_back(t);
    }
}

bool is_unit(const Term& t, Color c) { return t->kind == Kind::Gen && t->gen == Gen::Id0 && t->color == c; }

}  // namespace

std::string path_string(const Path& p) {
    std::string s = "[";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + "]";
}

InterfaceType typecheck(const Term& t, const Signature& sig, const MetaTyping& env) {
    Path p;
    return type_of(t, sig, env, p);
}

InterfaceType typecheck(const Term& t, const Signature& sig) { return typecheck(t, sig, MetaTyping{}); }

Term expand_sugar(SugarFamily f, Color c, int n, int m) {
    switch (f) {
        case SugarFamily::CopierN: return copier(c, n);
        case SugarFamily::CocopierN: return cocopier(c, n);
        case SugarFamily::DiscardN: return repeat(Gen::Discard, c, n);
        case SugarFamily::CodiscardN: return repeat(Gen::Codiscard, c, n);
        case SugarFamily::IdN: return id_n(c, n);
        case SugarFamily::SymmNM: return symm(c, n, m);
    }
    return gen(Gen::Id0, c);
}

Term desugar(const Term& t) {
    switch (t->kind) {
        case Kind::Sugar:
            if (t->n.is_var() || t->m.is_var()) return t;
            return expand_sugar(t->fam, t->color, t->n.value, t->m.value);
        case Kind::Seq:
        case Kind::Tensor: {
            Term l = desugar(t->left), r = desugar(t->right);
            if (l == t->left && r == t->right) return t;
            return t->kind == Kind::Seq ? seq(t->color, l, r) : tensor(t->color, l, r);
        }
        default: return t;
    }
}

bool is_identity_block(const Term& t, Color c) {
    if (t->kind == Kind::Gen) return t->color == c && (t->gen == Gen::Id1 || t->gen == Gen::Id0);
    if (t->kind == Kind::Tensor && t->color == c)
        return is_identity_block(t->left, c) && is_identity_block(t->right, c);
    return false;
}

Term normalize(const Term& t) {
    if (!is_binary(t)) return t;
    Term l = normalize(t->left), r = normalize(t->right);
    Term node = t->kind == Kind::Seq ? seq(t->color, l, r) : tensor(t->color, l, r);
    std::vector<Term> parts;
    flatten(node, t->kind, t->color, parts);
    std::vector<Term> kept;
    if (t->kind == Kind::Tensor) {
        for (auto& p : parts)
            if (!is_unit(p, t->color)) kept.push_back(p);
        if (kept.empty()) return gen(Gen::Id0, t->color);
    } else {
        for (auto& p : parts)
            if (!is_identity_block(p, t->color)) kept.push_back(p);
        if (kept.empty()) return parts.front();
    }
    Term out = t->kind == Kind::Seq ? seq_chain(t->color, kept) : tensor_chain(t->color, kept);
    return equal(out, t) ? t : out;
}

bool struct_eq(const Term& a, const Term& b) { return equal(normalize(desugar(a)), normalize(desugar(b))); }

Term subterm_at(const Term& t, const Path& p) {
    Term cur = t;
    for (size_t i = 0; i < p.size(); ++i) {
        if (!is_binary(cur) || (p[i] != 0 && p[i] != 1))
            throw Error(ErrorKind::InvalidPath, "invalid path " + path_string(p), Path(p.begin(), p.begin() + i));
        cur = p[i] == 0 ? cur->left : cur->right;
    }
    return cur;
}

namespace {

Term replace_rec(const Term& t, const Path& p, size_t i, const Term& s) {
    if (i == p.size()) return s;
    if (!is_binary(t) || (p[i] != 0 && p[i] != 1))
        throw Error(ErrorKind::InvalidPath, "invalid path " + path_string(p), Path(p.begin(), p.begin() + i));
    if (p[i] == 0) {
        Term l = replace_rec(t->left, p, i + 1, s);
        return t->kind == Kind::Seq ? seq(t->color, l, t->right) : tensor(t->color, l, t->right);
    }
    Term r = replace_rec(t->right, p, i + 1, s);
    return t->kind == Kind::Seq ? seq(t->color, t->left, r) : tensor(t->color, t->left, r);
}

}  // namespace

Term replace_at(const Term& t, const Path& p, const Term& s) { return replace_rec(t, p, 0, s); }

Term replace_at(const Term& t, const Path& p, const Term& s, const Signature& sig) {
    Term old = subterm_at(t, p);
    InterfaceType a = typecheck(old, sig), b = typecheck(s, sig);
    if (!(a == b))
        throw Error(ErrorKind::TypeMismatch,
                    "replacement type " + std::to_string(b.dom) + " -> " + std::to_string(b.cod) +
                        " differs from " + std::to_string(a.dom) + " -> " + std::to_string(a.cod) + " at " +
                        path_string(p),
                    p);
    return replace_rec(t, p, 0, s);
}

}  // namespace neopeirce
