#include "neopeirce/cr.hpp"

#include <cctype>
#include <set>

#include "neopeirce/derived.hpp"

namespace neopeirce {

CRExpr cr_sym(const std::string& name) { return std::make_shared<const CRNode>(CRNode{CROp::Sym, name, {}, {}}); }
CRExpr cr_const(CROp op) { return std::make_shared<const CRNode>(CRNode{op, {}, {}, {}}); }
CRExpr cr_unary(CROp op, CRExpr e) { return std::make_shared<const CRNode>(CRNode{op, {}, std::move(e), {}}); }
CRExpr cr_binary(CROp op, CRExpr l, CRExpr r) {
    return std::make_shared<const CRNode>(CRNode{op, {}, std::move(l), std::move(r)});
}

namespace {

class CRParser {
public:
    explicit CRParser(const std::string& s) : s_(s) {}

    CRExpr run() {
        CRExpr e = join();
        skip();
        if (i_ != s_.size()) fail("unexpected input");
        return e;
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

    CRExpr join() {
        CRExpr e = meet();
        while (eat("|")) e = cr_binary(CROp::Cup, e, meet());
        return e;
    }
    CRExpr meet() {
        CRExpr e = compose();
        while (eat("&")) e = cr_binary(CROp::Cap, e, compose());
        return e;
    }
    CRExpr compose() {
        CRExpr e = prefix();
        while (true) {
            if (eat(";+"))
                e = cr_binary(CROp::SeqW, e, prefix());
            else if (eat(";-"))
                e = cr_binary(CROp::SeqB, e, prefix());
            else
                return e;
        }
    }
    CRExpr prefix() {
        if (eat("~")) return cr_unary(CROp::Neg, prefix());
        return postfix();
    }
    CRExpr postfix() {
        CRExpr e = atom();
        while (eat("^")) e = cr_unary(CROp::Op, e);
        return e;
    }
    CRExpr atom() {
        skip();
        if (eat("(")) {
            CRExpr e = join();
            if (!eat(")")) fail("expected )");
            return e;
        }
        if (eat("id+")) return cr_const(CROp::IdW);
        if (eat("id-")) return cr_const(CROp::IdB);
        size_t start = i_;
        if (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) {
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
            std::string w = s_.substr(start, i_ - start);
            if (w == "top") return cr_const(CROp::Top);
            if (w == "bot") return cr_const(CROp::Bot);
            return cr_sym(w);
        }
        fail("expected a relation expression");
    }
};

Relation identity(int k) {
    std::vector<std::pair<Tuple, Tuple>> ps;
    for (int x = 0; x < k; ++x) ps.push_back({{x}, {x}});
    return make_relation(k, 1, 1, ps);
}

void collect(const CRExpr& e, std::set<std::string>& out) {
    if (!e) return;
    if (e->op == CROp::Sym) out.insert(e->name);
    collect(e->left, out);
    collect(e->right, out);
}

}  // namespace

CRExpr cr_parse(const std::string& text) { return CRParser(text).run(); }

std::string cr_render(const CRExpr& e) {
    switch (e->op) {
        case CROp::Sym: return e->name;
        case CROp::IdW: return "id+";
        case CROp::IdB: return "id-";
        case CROp::Top: return "top";
        case CROp::Bot: return "bot";
        case CROp::Op: return "(" + cr_render(e->left) + ")^";
        case CROp::Neg: return "~(" + cr_render(e->left) + ")";
        case CROp::SeqW: return "(" + cr_render(e->left) + " ;+ " + cr_render(e->right) + ")";
        case CROp::SeqB: return "(" + cr_render(e->left) + " ;- " + cr_render(e->right) + ")";
        case CROp::Cap: return "(" + cr_render(e->left) + " & " + cr_render(e->right) + ")";
        case CROp::Cup: return "(" + cr_render(e->left) + " | " + cr_render(e->right) + ")";
    }
    return "";
}

// Set-theoretic clauses; black composition is the complement of the white
// composite of complements.
Relation cr_eval(const CRExpr& e, const Interpretation& I) {
    int k = I.domain_size;
    switch (e->op) {
        case CROp::Sym: {
            auto it = I.rho.find(e->name);
            if (it == I.rho.end()) throw Error(ErrorKind::UnknownSymbol, "no interpretation for " + e->name);
            if (it->second.dom_arity != 1 || it->second.cod_arity != 1)
                throw Error(ErrorKind::ArityError, e->name + " is not binary");
            return it->second;
        }
        case CROp::IdW: return identity(k);
        case CROp::IdB: return complement(identity(k));
        case CROp::Top: return complement(make_relation(k, 1, 1, {}));
        case CROp::Bot: return make_relation(k, 1, 1, {});
        case CROp::Op: return converse(cr_eval(e->left, I));
        case CROp::Neg: return complement(cr_eval(e->left, I));
        case CROp::SeqW: return compose_white(cr_eval(e->left, I), cr_eval(e->right, I));
        case CROp::SeqB:
            return complement(
                compose_white(complement(cr_eval(e->left, I)), complement(cr_eval(e->right, I))));
        case CROp::Cap: return intersect(cr_eval(e->left, I), cr_eval(e->right, I));
        case CROp::Cup: return unite(cr_eval(e->left, I), cr_eval(e->right, I));
    }
    return {};
}

Signature cr_signature(const CRExpr& e) {
    std::set<std::string> names;
    collect(e, names);
    Signature sig;
    for (const auto& n : names) sig.symbols[n] = {1, 1};
    return sig;
}

Term cr_encode(const CRExpr& e) {
    constexpr Color W = Color::White, B = Color::Black;
    switch (e->op) {
        case CROp::Sym: return rel(e->name, W);
        case CROp::IdW: return gen(Gen::Id1, W);
        case CROp::IdB: return gen(Gen::Id1, B);
        case CROp::Top: return seq(W, gen(Gen::Discard, W), gen(Gen::Codiscard, W));
        case CROp::Bot: return seq(B, gen(Gen::Discard, B), gen(Gen::Codiscard, B));
        case CROp::SeqW: return seq(W, cr_encode(e->left), cr_encode(e->right));
        case CROp::SeqB: return seq(B, cr_encode(e->left), cr_encode(e->right));
        case CROp::Cap:
            return seq_chain(W, {gen(Gen::Copier, W), tensor(W, cr_encode(e->left), cr_encode(e->right)),
                                 gen(Gen::Cocopier, W)});
        case CROp::Cup:
            return seq_chain(B, {gen(Gen::Copier, B), tensor(B, cr_encode(e->left), cr_encode(e->right)),
                                 gen(Gen::Cocopier, B)});
        case CROp::Op: return dagger(cr_encode(e->left), cr_signature(e->left), W);
        case CROp::Neg: return negate(cr_encode(e->left), cr_signature(e->left));
    }
    return {};
}

}  // namespace neopeirce
