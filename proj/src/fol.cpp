#include "neopeirce/fol.hpp"

#include <cctype>

#include "neopeirce/derived.hpp"
#include "neopeirce/syntax.hpp"

namespace neopeirce {

FolTerm fvar(int i) { return FolTerm{true, i, {}, {}}; }
FolTerm fapp(const std::string& f, std::vector<FolTerm> args) { return FolTerm{false, 0, f, std::move(args)}; }

namespace {

FolFormula node(FolOp op, std::string name = {}, std::vector<FolTerm> terms = {}, FolFormula l = {},
                FolFormula r = {}) {
    return std::make_shared<const FolNode>(FolNode{op, std::move(name), std::move(terms), std::move(l), std::move(r)});
}

}  // namespace

FolFormula f_rel(const std::string& r, std::vector<FolTerm> args) { return node(FolOp::Rel, r, std::move(args)); }
FolFormula f_eq(FolTerm a, FolTerm b) { return node(FolOp::Eq, {}, {std::move(a), std::move(b)}); }
FolFormula f_and(FolFormula a, FolFormula b) { return node(FolOp::And, {}, {}, std::move(a), std::move(b)); }
FolFormula f_or(FolFormula a, FolFormula b) { return node(FolOp::Or, {}, {}, std::move(a), std::move(b)); }
FolFormula f_not(FolFormula a) { return node(FolOp::Not, {}, {}, std::move(a)); }
FolFormula f_top() { return node(FolOp::Top); }
FolFormula f_bot() { return node(FolOp::Bot); }
FolFormula f_exists(FolFormula body) { return node(FolOp::Exists, {}, {}, std::move(body)); }
FolFormula f_forall(FolFormula body) { return node(FolOp::Forall, {}, {}, std::move(body)); }

namespace {

void check_term(const FolTerm& t, int n) {
    if (t.is_var) {
        if (t.var < 1 || t.var > n)
            throw Error(ErrorKind::ScopeError,
                        "variable x" + std::to_string(t.var) + " outside context of size " + std::to_string(n));
        return;
    }
    for (const auto& a : t.args) check_term(a, n);
}

}  // namespace

void fol_check_scope(const FolFormula& phi, int n) {
    switch (phi->op) {
        case FolOp::Rel:
        case FolOp::Eq:
            for (const auto& t : phi->terms) check_term(t, n);
            break;
        case FolOp::And:
        case FolOp::Or:
            fol_check_scope(phi->left, n);
            fol_check_scope(phi->right, n);
            break;
        case FolOp::Not: fol_check_scope(phi->left, n); break;
        case FolOp::Exists:
        case FolOp::Forall: fol_check_scope(phi->left, n + 1); break;
        default: break;
    }
}

namespace {

class FolParser {
public:
    explicit FolParser(const std::string& s) : s_(s) {}

    FolSequent run() {
        FolSequent out;
        bool declared = false;
        if (peek_word() == "ctx") {
            word();
            skip();
            size_t st = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (st == i_) fail("expected context size");
            out.context = std::stoi(s_.substr(st, i_ - st));
            if (!eat("|-")) fail("expected |-");
            declared = true;
        }
        out.formula = disj();
        skip();
        if (i_ != s_.size()) fail("unexpected input");
        if (!declared) out.context = max_free_;
        return out;
    }

private:
    const std::string& s_;
    size_t i_ = 0;
    int depth_ = 0;     // enclosing quantifiers
    int max_free_ = 0;  // largest variable index seen outside its binders

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
    std::string peek_word() {
        skip();
        size_t j = i_;
        while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
        return s_.substr(i_, j - i_);
    }
    std::string word() {
        std::string w = peek_word();
        i_ += w.size();
        return w;
    }

    FolFormula disj() {
        FolFormula f = conj();
        while (eat("\\/")) f = f_or(f, conj());
        return f;
    }
    FolFormula conj() {
        FolFormula f = unary();
        while (eat("/\\")) f = f_and(f, unary());
        return f;
    }
    FolFormula unary() {
        std::string w = peek_word();
        if ((w == "exists" || w == "forall") && s_.compare(i_ + w.size(), 1, "!") == 0) {
            i_ += w.size() + 1;
            ++depth_;
            FolFormula body = disj();
            --depth_;
            return w == "exists" ? f_exists(body) : f_forall(body);
        }
        if (eat("!")) return f_not(unary());
        return atom();
    }

    FolTerm term() {
        std::string w = word();
        if (w.empty()) fail("expected a term");
        if (is_var(w)) return var(w);
        std::vector<FolTerm> args;
        if (eat("(")) args = term_list();
        return fapp(w, std::move(args));
    }
    std::vector<FolTerm> term_list() {
        std::vector<FolTerm> args;
        if (eat(")")) return args;
        do args.push_back(term());
        while (eat(","));
        if (!eat(")")) fail("expected )");
        return args;
    }
    static bool is_var(const std::string& w) {
        if (w.size() < 2 || w[0] != 'x') return false;
        for (size_t k = 1; k < w.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(w[k]))) return false;
        return true;
    }
    FolTerm var(const std::string& w) {
        int v = std::stoi(w.substr(1));
        if (v < 1) fail("variables start at x1");
        max_free_ = std::max(max_free_, v - depth_);
        return fvar(v);
    }

    FolFormula atom() {
        skip();
        if (eat("(")) {
            FolFormula f = disj();
            if (!eat(")")) fail("expected )");
            return f;
        }
        std::string w = peek_word();
        if (w == "top") return word(), f_top();
        if (w == "bot") return word(), f_bot();
        if (w.empty()) fail("expected a formula");
        size_t save = i_;
        FolTerm lhs = term();
        if (eat("=")) return f_eq(lhs, term());
        if (lhs.is_var) {
            i_ = save;
            fail("variable used as a formula");
        }
        return f_rel(lhs.fn, lhs.args);
    }
};

std::string term_text(const FolTerm& t, const std::vector<std::string>& names) {
    if (t.is_var) return names.at(t.var - 1);
    std::string s = t.fn;
    if (t.args.empty()) return s;
    s += "(";
    for (size_t i = 0; i < t.args.size(); ++i) s += (i ? "," : "") + term_text(t.args[i], names);
    return s + ")";
}

std::string render_rec(const FolFormula& f, std::vector<std::string>& names, bool bang, int& fresh) {
    auto bin = [&](const char* op) {
        return "(" + render_rec(f->left, names, bang, fresh) + " " + op + " " +
               render_rec(f->right, names, bang, fresh) + ")";
    };
    switch (f->op) {
        case FolOp::Top: return "top";
        case FolOp::Bot: return "bot";
        case FolOp::Eq: return term_text(f->terms[0], names) + " = " + term_text(f->terms[1], names);
        case FolOp::Rel: {
            std::string s = f->name + "(";
            for (size_t i = 0; i < f->terms.size(); ++i) s += (i ? "," : "") + term_text(f->terms[i], names);
            return s + ")";
        }
        case FolOp::And: return bin("/\\");
        case FolOp::Or: return bin("\\/");
        case FolOp::Not: return "!" + render_rec(f->left, names, bang, fresh);
        case FolOp::Exists:
        case FolOp::Forall: {
            std::string q = f->op == FolOp::Exists ? "exists" : "forall";
            std::string v = bang ? "x" + std::to_string(names.size() + 1) : "z" + std::to_string(++fresh);
            names.push_back(v);
            std::string body = render_rec(f->left, names, bang, fresh);
            names.pop_back();
            return bang ? "(" + q + "! " + body + ")" : "(" + q + " " + v + ". " + body + ")";
        }
    }
    return "";
}

}  // namespace

FolSequent fol_parse(const std::string& text) {
    FolSequent s = FolParser(text).run();
    fol_check_scope(s.formula, s.context);
    return s;
}

std::string fol_render(const FolFormula& phi, const std::vector<std::string>& names) {
    std::vector<std::string> ns = names;
    int fresh = 0;
    return render_rec(phi, ns, false, fresh);
}

std::string fol_render(const FolFormula& phi, int n) {
    std::vector<std::string> ns;
    for (int i = 1; i <= n; ++i) ns.push_back("x" + std::to_string(i));
    int fresh = 0;
    return "ctx " + std::to_string(n) + " |- " + render_rec(phi, ns, true, fresh);
}

namespace {

constexpr Color W = Color::White;
constexpr Color B = Color::Black;

Term discard(Color c, int n) { return n == 0 ? gen(Gen::Id0, c) : sugar(SugarFamily::DiscardN, c, n); }

bool is_identity_args(const std::vector<FolTerm>& ts, int n) {
    if (static_cast<int>(ts.size()) != n) return false;
    for (int i = 0; i < n; ++i)
        if (!ts[i].is_var || ts[i].var != i + 1) return false;
    return true;
}

// n -> ts.size(), the tuple of encoded terms.
Term encode_args(const std::vector<FolTerm>& ts, size_t from, int n) {
    size_t m = ts.size() - from;
    if (m == 0) return discard(W, n);
    if (m == 1) return fol_encode_term(ts[from], n);
    return seq(W, sugar(SugarFamily::CopierN, W, n),
               tensor(W, fol_encode_term(ts[from], n), encode_args(ts, from + 1, n)));
}

// Applies symbol `s` to the encoded arguments.
Term apply_symbol(const std::string& s, const std::vector<FolTerm>& ts, int n) {
    if (is_identity_args(ts, n)) return rel(s, W);
    return seq(W, encode_args(ts, 0, n), rel(s, W));
}

}  // namespace

Term fol_encode_term(const FolTerm& t, int n) {
    check_term(t, n);
    if (t.is_var) {
        std::vector<Term> parts;
        if (t.var > 1) parts.push_back(sugar(SugarFamily::DiscardN, W, t.var - 1));
        parts.push_back(gen(Gen::Id1, W));
        if (n > t.var) parts.push_back(sugar(SugarFamily::DiscardN, W, n - t.var));
        return tensor_chain(W, parts);
    }
    return apply_symbol(t.fn, t.args, n);
}

Term fol_encode(const FolFormula& phi, int n, const Signature& sig) {
    auto check_sym = [&](const std::string& s, size_t arity, int coar) {
        auto it = sig.symbols.find(s);
        if (it == sig.symbols.end()) throw Error(ErrorKind::UnknownSymbol, "unknown symbol " + s);
        if (it->second.ar != static_cast<int>(arity) || it->second.coar != coar)
            throw Error(ErrorKind::ArityError, "symbol " + s + " used with the wrong arity");
    };
    std::function<void(const FolTerm&)> check_fns = [&](const FolTerm& t) {
        if (t.is_var) return;
        check_sym(t.fn, t.args.size(), 1);
        for (const auto& a : t.args) check_fns(a);
    };
    switch (phi->op) {
        case FolOp::Top: return discard(W, n);
        case FolOp::Bot: return discard(B, n);
        case FolOp::Rel:
            check_sym(phi->name, phi->terms.size(), 0);
            for (const auto& t : phi->terms) {
                check_term(t, n);
                check_fns(t);
            }
            return apply_symbol(phi->name, phi->terms, n);
        case FolOp::Eq:
            for (const auto& t : phi->terms) check_fns(t);
            return seq_chain(W, {sugar(SugarFamily::CopierN, W, n),
                                 tensor(W, fol_encode_term(phi->terms[0], n), fol_encode_term(phi->terms[1], n)),
                                 gen(Gen::Cocopier, W), gen(Gen::Discard, W)});
        case FolOp::And:
            return seq(W, sugar(SugarFamily::CopierN, W, n),
                       tensor(W, fol_encode(phi->left, n, sig), fol_encode(phi->right, n, sig)));
        case FolOp::Or:
            return seq(B, sugar(SugarFamily::CopierN, B, n),
                       tensor(B, fol_encode(phi->left, n, sig), fol_encode(phi->right, n, sig)));
        case FolOp::Not: return negate(fol_encode(phi->left, n, sig), sig);
        case FolOp::Exists: {
            Term plug = n == 0 ? gen(Gen::Codiscard, W)
                               : tensor(W, sugar(SugarFamily::IdN, W, n), gen(Gen::Codiscard, W));
            return seq(W, plug, fol_encode(phi->left, n + 1, sig));
        }
        case FolOp::Forall: {
            Term plug = n == 0 ? gen(Gen::Codiscard, B)
                               : tensor(B, sugar(SugarFamily::IdN, B, n), gen(Gen::Codiscard, B));
            return seq(B, plug, fol_encode(phi->left, n + 1, sig));
        }
    }
    return {};
}

namespace {

int term_value(const FolTerm& t, const Interpretation& I, const Tuple& env) {
    if (t.is_var) {
        if (t.var < 1 || t.var > static_cast<int>(env.size()))
            throw Error(ErrorKind::ScopeError, "variable x" + std::to_string(t.var) + " unbound");
        return env[t.var - 1];
    }
    auto it = I.rho.find(t.fn);
    if (it == I.rho.end()) throw Error(ErrorKind::UnknownSymbol, "no interpretation for " + t.fn);
    if (it->second.cod_arity != 1 || !is_map_relation(it->second))
        throw Error(ErrorKind::NonFunctionalSymbol, t.fn + " is not interpreted as a total function");
    Tuple args;
    for (const auto& a : t.args) args.push_back(term_value(a, I, env));
    for (const auto& [u, v] : it->second.pairs)
        if (u == args) return v[0];
    throw Error(ErrorKind::NonFunctionalSymbol, t.fn + " is undefined on its arguments");
}

}  // namespace

bool fol_eval(const FolFormula& phi, const Interpretation& I, const Tuple& env) {
    switch (phi->op) {
        case FolOp::Top: return true;
        case FolOp::Bot: return false;
        case FolOp::Eq: return term_value(phi->terms[0], I, env) == term_value(phi->terms[1], I, env);
        case FolOp::Rel: {
            auto it = I.rho.find(phi->name);
            if (it == I.rho.end()) throw Error(ErrorKind::UnknownSymbol, "no interpretation for " + phi->name);
            Tuple args;
            for (const auto& t : phi->terms) args.push_back(term_value(t, I, env));
            // Decoded atoms of an n -> m symbol carry n + m arguments.
            const Relation& r = it->second;
            if (static_cast<int>(args.size()) != r.dom_arity + r.cod_arity)
                throw Error(ErrorKind::ArityError, "wrong number of arguments to " + phi->name);
            Tuple cod(args.begin() + r.dom_arity, args.end());
            args.resize(r.dom_arity);
            return r.contains(args, cod);
        }
        case FolOp::And: return fol_eval(phi->left, I, env) && fol_eval(phi->right, I, env);
        case FolOp::Or: return fol_eval(phi->left, I, env) || fol_eval(phi->right, I, env);
        case FolOp::Not: return !fol_eval(phi->left, I, env);
        case FolOp::Exists:
        case FolOp::Forall: {
            bool ex = phi->op == FolOp::Exists;
            Tuple e2 = env;
            e2.push_back(0);
            for (int x = 0; x < I.domain_size; ++x) {
                e2.back() = x;
                if (fol_eval(phi->left, I, e2) == ex) return ex;
            }
            return !ex;
        }
    }
    return false;
}

namespace {

FolTerm rename_term(const FolTerm& t, const std::vector<int>& sigma) {
    if (t.is_var) return fvar(sigma.at(t.var));
    FolTerm out = t;
    for (auto& a : out.args) a = rename_term(a, sigma);
    return out;
}

// sigma maps variables 1..c of phi's context to a context of size c2.
FolFormula rename(const FolFormula& f, std::vector<int> sigma, int c2) {
    switch (f->op) {
        case FolOp::Rel:
        case FolOp::Eq: {
            std::vector<FolTerm> ts;
            for (const auto& t : f->terms) ts.push_back(rename_term(t, sigma));
            return node(f->op, f->name, std::move(ts));
        }
        case FolOp::And:
        case FolOp::Or: return node(f->op, {}, {}, rename(f->left, sigma, c2), rename(f->right, sigma, c2));
        case FolOp::Not: return f_not(rename(f->left, sigma, c2));
        case FolOp::Exists:
        case FolOp::Forall:
            sigma.push_back(c2 + 1);
            return node(f->op, {}, {}, rename(f->left, sigma, c2 + 1));
        default: return f;
    }
}

FolFormula eq(int a, int b) { return f_eq(fvar(a), fvar(b)); }
FolFormula neq(int a, int b) { return f_not(eq(a, b)); }

// Decoded formulas keep index 0 unused so sigma[i] renames variable i.
std::vector<int> block_map(std::initializer_list<std::pair<int, int>> blocks) {
    std::vector<int> s{0};
    for (auto [len, base] : blocks)
        for (int i = 1; i <= len; ++i) s.push_back(base + i);
    return s;
}

FolDecoded decode(const Term& t, const Signature& sig) {
    bool white = t->color == W;
    switch (t->kind) {
        case Kind::Gen:
            switch (t->gen) {
                case Gen::Id0: return {0, 0, white ? f_top() : f_bot()};
                case Gen::Id1: return {1, 1, white ? eq(1, 2) : neq(1, 2)};
                case Gen::Symm:
                    return {2, 2, white ? f_and(eq(1, 4), eq(2, 3)) : f_or(neq(1, 4), neq(2, 3))};
                case Gen::Copier:
                    return {1, 2, white ? f_and(eq(1, 2), eq(1, 3)) : f_or(neq(1, 2), neq(1, 3))};
                case Gen::Cocopier:
                    return {2, 1, white ? f_and(eq(1, 3), eq(2, 3)) : f_or(neq(1, 3), neq(2, 3))};
                case Gen::Discard: return {1, 0, white ? f_top() : f_bot()};
                case Gen::Codiscard: return {0, 1, white ? f_top() : f_bot()};
            }
            break;
        case Kind::Rel: {
            auto it = sig.symbols.find(t->name);
            if (it == sig.symbols.end()) throw Error(ErrorKind::UnknownSymbol, "unknown symbol " + t->name);
            int n = it->second.ar, m = it->second.coar;
            std::vector<FolTerm> args;
            if (white) {
                for (int i = 1; i <= n + m; ++i) args.push_back(fvar(i));
                return {n, m, f_rel(t->name, args)};
            }
            // R^b : m -> n holds at (v, u) when (u, v) is outside R.
            for (int i = 1; i <= n; ++i) args.push_back(fvar(m + i));
            for (int i = 1; i <= m; ++i) args.push_back(fvar(i));
            return {m, n, f_not(f_rel(t->name, args))};
        }
        case Kind::Seq: {
            FolDecoded p = decode(t->left, sig), q = decode(t->right, sig);
            int n = p.n, k = p.m, m = q.m;
            int c = n + m + k;
            FolFormula a = rename(p.formula, block_map({{n, 0}, {k, n + m}}), c);
            FolFormula b = rename(q.formula, block_map({{k, n + m}, {m, n}}), c);
            FolFormula body = white ? f_and(a, b) : f_or(a, b);
            for (int i = 0; i < k; ++i) body = white ? f_exists(body) : f_forall(body);
            return {n, m, body};
        }
        case Kind::Tensor: {
            FolDecoded p = decode(t->left, sig), q = decode(t->right, sig);
            int n = p.n, m = p.m, l = q.n, k = q.m;
            int c = n + l + m + k;
            FolFormula a = rename(p.formula, block_map({{n, 0}, {m, n + l}}), c);
            FolFormula b = rename(q.formula, block_map({{l, n}, {k, n + l + m}}), c);
            return {n + l, m + k, white ? f_and(a, b) : f_or(a, b)};
        }
        default: break;
    }
    throw Error(ErrorKind::InputError, "cannot decode " + render(t));
}

}  // namespace

FolDecoded fol_decode(const Term& t, const Signature& sig) {
    typecheck(t, sig);
    return decode(desugar(t), sig);
}

std::string fol_render(const FolDecoded& d) {
    std::vector<std::string> names;
    for (int i = 1; i <= d.n; ++i) names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= d.m; ++i) names.push_back("y" + std::to_string(i));
    return "ctx " + std::to_string(d.n) + ";" + std::to_string(d.m) + " |- " + fol_render(d.formula, names);
}

}  // namespace neopeirce
