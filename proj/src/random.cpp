#include "neopeirce/random.hpp"

#include <vector>

namespace neopeirce {

Signature random_signature(Rng& rng, int max_symbols, int max_total) {
    Signature sig;
    int count = 1 + pick(rng, max_symbols);
    for (int i = 0; i < count; ++i) {
        int ar = pick(rng, max_total + 1);
        int coar = pick(rng, max_total - ar + 1);
        sig.symbols[std::string(1, static_cast<char>('p' + i))] = {ar, coar};
    }
    return sig;
}

namespace {

void leaves(InterfaceType ty, const Signature& sig, const TermGenOptions& opt, std::vector<Term>& out) {
    int n = ty.dom, m = ty.cod;
    for (Color c : {Color::White, Color::Black}) {
        if (opt.maps_only && c == Color::Black) break;
        if (n == 1 && m == 1) out.push_back(gen(Gen::Id1, c));
        if (n == 0 && m == 0) out.push_back(gen(Gen::Id0, c));
        if (n == 1 && m == 2) out.push_back(gen(Gen::Copier, c));
        if (n == 1 && m == 0) out.push_back(gen(Gen::Discard, c));
        if (n == 2 && m == 2) out.push_back(gen(Gen::Symm, c));
        if (!opt.maps_only) {
            if (n == 2 && m == 1) out.push_back(gen(Gen::Cocopier, c));
            if (n == 0 && m == 1) out.push_back(gen(Gen::Codiscard, c));
        }
        if (!opt.sugar) continue;
        if (n == m && n >= 2) out.push_back(sugar(SugarFamily::IdN, c, n));
        if (m == 2 * n && n >= 2) out.push_back(sugar(SugarFamily::CopierN, c, n));
        if (m == 0 && n >= 2) out.push_back(sugar(SugarFamily::DiscardN, c, n));
        if (n == m && n >= 3)
            for (int a = 1; a < n; ++a) out.push_back(sugar(SugarFamily::SymmNM, c, a, n - a));
        if (opt.maps_only) continue;
        if (n == 2 * m && m >= 2) out.push_back(sugar(SugarFamily::CocopierN, c, m));
        if (n == 0 && m >= 2) out.push_back(sugar(SugarFamily::CodiscardN, c, m));
    }
    if (opt.maps_only) return;
    for (const auto& [name, st] : sig.symbols) {
        if (st.ar == n && st.coar == m) out.push_back(rel(name, Color::White));
        if (st.coar == n && st.ar == m) out.push_back(rel(name, Color::Black));
    }
}

// A map n -> m for n >= 1 or m == 0: keep the last wire and copy it m times.
Term canonical_map(InterfaceType ty) {
    const Color w = Color::White;
    if (ty.cod == 0) return sugar(SugarFamily::DiscardN, w, ty.dom);
    Term copies = gen(Gen::Id1, w);
    for (int i = 1; i < ty.cod; ++i) copies = seq(w, gen(Gen::Copier, w), tensor(w, gen(Gen::Id1, w), copies));
    if (ty.dom == 1) return copies;
    return seq(w, tensor(w, sugar(SugarFamily::DiscardN, w, ty.dom - 1), gen(Gen::Id1, w)), copies);
}

bool map_typable(int n, int m) { return n >= 1 || m == 0; }

Term gen_term(Rng& rng, InterfaceType ty, const Signature& sig, const TermGenOptions& opt, int depth) {
    if (opt.maps_only && !map_typable(ty.dom, ty.cod)) throw Error(ErrorKind::TypeMismatch, "no map of this type");
    std::vector<Term> ls;
    leaves(ty, sig, opt, ls);
    if (depth == 0 || (!ls.empty() && pick(rng, 3) == 0)) {
        if (!ls.empty()) return ls[pick(rng, static_cast<int>(ls.size()))];
        if (opt.maps_only) return canonical_map(ty);
        Color c = coin(rng) ? Color::White : Color::Black;
        return seq(c, sugar(SugarFamily::DiscardN, c, ty.dom), sugar(SugarFamily::CodiscardN, c, ty.cod));
    }
    Color c = opt.maps_only ? Color::White : (coin(rng) ? Color::White : Color::Black);
    if (coin(rng) || ty.dom + ty.cod == 0) {
        int k = pick(rng, opt.max_mid + 1);
        if (opt.maps_only && !map_typable(ty.dom, k)) k = 0;
        if (opt.maps_only && !map_typable(k, ty.cod)) k = 1;
        return seq(c, gen_term(rng, {ty.dom, k}, sig, opt, depth - 1), gen_term(rng, {k, ty.cod}, sig, opt, depth - 1));
    }
    int n1 = pick(rng, ty.dom + 1), m1 = pick(rng, ty.cod + 1);
    if (opt.maps_only && (!map_typable(n1, m1) || !map_typable(ty.dom - n1, ty.cod - m1))) return canonical_map(ty);
    return tensor(c, gen_term(rng, {n1, m1}, sig, opt, depth - 1),
                  gen_term(rng, {ty.dom - n1, ty.cod - m1}, sig, opt, depth - 1));
}

}  // namespace

Term random_term(Rng& rng, InterfaceType ty, const Signature& sig, const TermGenOptions& opt) {
    return gen_term(rng, ty, sig, opt, opt.depth);
}

}  // namespace neopeirce
