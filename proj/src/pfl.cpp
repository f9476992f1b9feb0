#include "neopeirce/pfl.hpp"

#include <cctype>

#include "neopeirce/derived.hpp"

namespace neopeirce {

PflPred pfl_sym(const std::string& r) { return std::make_shared<const PflNode>(PflNode{PflOp::Sym, r, {}, {}}); }
PflPred pfl_ident() { return std::make_shared<const PflNode>(PflNode{PflOp::Ident, {}, {}, {}}); }
PflPred pfl_unary(PflOp op, PflPred p) { return std::make_shared<const PflNode>(PflNode{op, {}, std::move(p), {}}); }
PflPred pfl_cap(PflPred a, PflPred b) {
    return std::make_shared<const PflNode>(PflNode{PflOp::Cap, {}, std::move(a), std::move(b)});
}

namespace {

class PflParser {
public:
    explicit PflParser(const std::string& s) : s_(s) {}

    PflPred run() {
        PflPred p = cap();
        skip();
        if (i_ != s_.size()) fail("unexpected input");
        return p;
    }

private:
    const std::string& s_;
    size_t i_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorKind::SyntaxError, msg + " at position " + std::to_string(i_));
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(const std::string& tok) {
        skip();
        if (s_.compare(i_, tok.size(), tok) == 0) {
            i_ += tok.size();
            return true;
        }
        return false;
    }
    std::string ident() {
        skip();
        size_t st = i_;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
        return s_.substr(st, i_ - st);
    }

    PflPred cap() {
        PflPred p = unary();
        while (eat("&")) p = pfl_cap(p, unary());
        return p;
    }
    PflPred unary() {
        if (eat("!")) return pfl_unary(PflOp::Neg, unary());
        if (eat("[")) return pfl_unary(PflOp::Pad, unary());
        if (eat("]")) return pfl_unary(PflOp::Crop, unary());
        if (eat("P*")) return pfl_unary(PflOp::Major, unary());
        if (eat("(")) {
            PflPred p = cap();
            if (!eat(")")) fail("expected )");
            return p;
        }
        size_t save = i_;
        std::string w = ident();
        if (w.empty()) fail("expected a predicate");
        if (w == "p") return pfl_unary(PflOp::Minor, unary());
        if (w == "I") return pfl_ident();
        if (!std::isalpha(static_cast<unsigned char>(w[0]))) {
            i_ = save;
            fail("expected a predicate");
        }
        return pfl_sym(w);
    }
};

Error untypable(const std::string& msg) { return Error(ErrorKind::Untypable, msg); }

constexpr Color W = Color::White;

Term idw(int n) { return n == 0 ? gen(Gen::Id0, W) : sugar(SugarFamily::IdN, W, n); }
Term dcw(int n) { return n == 0 ? gen(Gen::Id0, W) : sugar(SugarFamily::DiscardN, W, n); }

// Moves the last of n wires to the front and the first to the back.
Term outer_swap(int n) {
    if (n < 2) return idw(n);
    return seq(W, sugar(SugarFamily::SymmNM, W, 1, n - 1),
               tensor(W, sugar(SugarFamily::SymmNM, W, n - 2, 1), gen(Gen::Id1, W)));
}

// Widens an encoded predicate of arity k to arity n >= k by ignoring the extra coordinates.
Term widen(const Term& enc, int k, int n) {
    if (k == n) return enc;
    return seq(W, tensor(W, idw(k), dcw(n - k)), enc);
}

}  // namespace

PflPred pfl_parse(const std::string& text) { return PflParser(text).run(); }

std::string pfl_render(const PflPred& p) {
    switch (p->op) {
        case PflOp::Sym: return p->name;
        case PflOp::Ident: return "I";
        case PflOp::Minor: return "p " + pfl_render(p->left);
        case PflOp::Major: return "P* " + pfl_render(p->left);
        case PflOp::Pad: return "[ " + pfl_render(p->left);
        case PflOp::Crop: return "] " + pfl_render(p->left);
        case PflOp::Neg: return "! " + pfl_render(p->left);
        case PflOp::Cap: return "(" + pfl_render(p->left) + " & " + pfl_render(p->right) + ")";
    }
    return "";
}

int pfl_arity(const PflPred& p, const Signature& sig) {
    switch (p->op) {
        case PflOp::Sym: {
            auto it = sig.symbols.find(p->name);
            if (it == sig.symbols.end()) throw Error(ErrorKind::UnknownSymbol, "unknown predicate " + p->name);
            if (it->second.coar != 0) throw untypable(p->name + " must have coarity 0");
            return it->second.ar;
        }
        case PflOp::Ident: return 2;
        case PflOp::Minor: return std::max(2, pfl_arity(p->left, sig));
        case PflOp::Major:
        case PflOp::Neg: return pfl_arity(p->left, sig);
        case PflOp::Pad: return pfl_arity(p->left, sig) + 1;
        case PflOp::Crop: {
            int n = pfl_arity(p->left, sig);
            return n == 0 ? 0 : n - 1;
        }
        case PflOp::Cap: return std::max(pfl_arity(p->left, sig), pfl_arity(p->right, sig));
    }
    throw untypable("unknown functor");
}

Term pfl_encode(const PflPred& p, const Signature& sig) {
    switch (p->op) {
        case PflOp::Sym: pfl_arity(p, sig); return rel(p->name, W);
        case PflOp::Ident: return seq(W, gen(Gen::Cocopier, W), gen(Gen::Discard, W));
        case PflOp::Minor: {
            int n = pfl_arity(p->left, sig);
            Term e = pfl_encode(p->left, sig);
            if (n >= 2) return seq(W, tensor(W, gen(Gen::Symm, W), idw(n - 2)), e);
            if (n == 1) return tensor(W, gen(Gen::Discard, W), e);
            return seq(W, dcw(2), e);
        }
        case PflOp::Major: {
            int n = pfl_arity(p->left, sig);
            return n < 2 ? pfl_encode(p->left, sig) : seq(W, outer_swap(n), pfl_encode(p->left, sig));
        }
        case PflOp::Cap: {
            int a = pfl_arity(p->left, sig), b = pfl_arity(p->right, sig), n = std::max(a, b);
            Term ea = widen(pfl_encode(p->left, sig), a, n), eb = widen(pfl_encode(p->right, sig), b, n);
            return seq(W, sugar(SugarFamily::CopierN, W, n), tensor(W, ea, eb));
        }
        case PflOp::Neg: return negate(pfl_encode(p->left, sig), sig);
        case PflOp::Pad: return tensor(W, gen(Gen::Discard, W), pfl_encode(p->left, sig));
        case PflOp::Crop: {
            int n = pfl_arity(p->left, sig);
            Term e = pfl_encode(p->left, sig);
            if (n == 0) return e;
            return seq(W, tensor(W, gen(Gen::Codiscard, W), idw(n - 1)), e);
        }
    }
    throw untypable("unknown functor");
}

namespace {

void need(const Tuple& tau, size_t k) {
    if (tau.size() < k)
        throw Error(ErrorKind::TruncationTooSmall,
                    "truncation " + std::to_string(tau.size()) + " is below the " + std::to_string(k) +
                        " coordinates this predicate reads");
}

// Arity of the predicate without a signature: read off the interpretation.
int arity_in(const PflPred& p, const Interpretation& I) {
    Signature sig;
    std::vector<std::string> names;
    for (const auto& [name, r] : I.rho) sig.symbols[name] = {r.dom_arity, r.cod_arity};
    return pfl_arity(p, sig);
}

}  // namespace

bool pfl_member(const PflPred& p, const Interpretation& I, const Tuple& tau) {
    switch (p->op) {
        case PflOp::Sym: {
            auto it = I.rho.find(p->name);
            if (it == I.rho.end()) throw Error(ErrorKind::UnknownSymbol, "no interpretation for " + p->name);
            size_t n = it->second.dom_arity;
            need(tau, n);
            return it->second.contains(Tuple(tau.begin(), tau.begin() + n), {});
        }
        case PflOp::Ident: need(tau, 2); return tau[0] == tau[1];
        case PflOp::Cap: return pfl_member(p->left, I, tau) && pfl_member(p->right, I, tau);
        case PflOp::Neg: return !pfl_member(p->left, I, tau);
        case PflOp::Minor: {
            need(tau, 2);
            Tuple t = tau;
            std::swap(t[0], t[1]);
            return pfl_member(p->left, I, t);
        }
        case PflOp::Major: {
            size_t n = arity_in(p->left, I);
            if (n < 2) return pfl_member(p->left, I, tau);
            need(tau, n);
            Tuple t = tau;
            std::swap(t[0], t[n - 1]);
            return pfl_member(p->left, I, t);
        }
        case PflOp::Pad: need(tau, 1); return pfl_member(p->left, I, Tuple(tau.begin() + 1, tau.end()));
        case PflOp::Crop: {
            Tuple t(tau.size() + 1);
            std::copy(tau.begin(), tau.end(), t.begin() + 1);
            for (int x = 0; x < I.domain_size; ++x) {
                t[0] = x;
                if (pfl_member(p->left, I, t)) return true;
            }
            return false;
        }
    }
    return false;
}

std::set<Tuple> pfl_eval_trunc(const PflPred& p, const Interpretation& I, int N) {
    std::set<Tuple> out;
    size_t total = ipow(I.domain_size, N);
    for (size_t i = 0; i < total; ++i) {
        Tuple tau = decode_tuple(i, I.domain_size, N);
        if (pfl_member(p, I, tau)) out.insert(tau);
    }
    return out;
}

}  // namespace neopeirce
