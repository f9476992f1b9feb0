#include "neopeirce/syntax.hpp"

#include <cctype>
#include <optional>

namespace neopeirce {

namespace {

struct GenName {
    const char* text;
    Gen gen;
    SugarFamily fam;
    bool sugarable;
};

constexpr GenName kGenNames[] = {
    {"cp", Gen::Copier, SugarFamily::CopierN, true},
    {"dc", Gen::Discard, SugarFamily::DiscardN, true},
    {"cc", Gen::Cocopier, SugarFamily::CocopierN, true},
    {"cd", Gen::Codiscard, SugarFamily::CodiscardN, true},
    {"id", Gen::Id1, SugarFamily::IdN, true},
    {"e", Gen::Id0, SugarFamily::IdN, false},
    {"sw", Gen::Symm, SugarFamily::SymmNM, true},
};

const char* gen_text(Gen g) {
    for (const auto& n : kGenNames)
        if (n.gen == g) return n.text;
    return "?";
}

const char* fam_text(SugarFamily f) {
    for (const auto& n : kGenNames)
        if (n.sugarable && n.fam == f) return n.text;
    return "?";
}

char color_char(Color c) { return c == Color::White ? '+' : '-'; }

enum class Op { None, SeqW, SeqB, TenW, TenB };

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Term run() {
        Term t = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return t;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorKind::SyntaxError, msg + " at position " + std::to_string(pos_));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    std::optional<Op> op() {
        skip();
        if (pos_ + 1 >= s_.size()) return std::nullopt;
        char a = s_[pos_], b = s_[pos_ + 1];
        if ((a != ';' && a != '*') || (b != '+' && b != '-')) {
            if (a == ';' || a == '*') {
                ++pos_;
                fail("operator must be followed by + or -");
            }
            return std::nullopt;
        }
        pos_ += 2;
        if (a == ';') return b == '+' ? Op::SeqW : Op::SeqB;
        return b == '+' ? Op::TenW : Op::TenB;
    }

    Term expr() {
        std::vector<Term> parts{primary()};
        Op first = Op::None;
        while (true) {
            size_t save = pos_;
            auto o = op();
            if (!o) {
                pos_ = save;
                break;
            }
            if (first == Op::None)
                first = *o;
            else if (*o != first) {
                pos_ = save;
                fail("mixed operators need parentheses");
            }
            parts.push_back(primary());
        }
        if (parts.size() == 1) return parts[0];
        Color c = (first == Op::SeqW || first == Op::TenW) ? Color::White : Color::Black;
        bool is_seq = first == Op::SeqW || first == Op::SeqB;
        Term acc = parts.back();
        for (size_t i = parts.size() - 1; i-- > 0;)
            acc = is_seq ? seq(c, parts[i], acc) : tensor(c, parts[i], acc);
        return acc;
    }

    std::string ident() {
        size_t start = pos_;
        if (pos_ >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[pos_]))) fail("expected identifier");
        ++pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    Arity arity() {
        skip();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            int v = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                v = v * 10 + (s_[pos_] - '0');
                if (v > 64) fail("arity too large");
                ++pos_;
            }
            return Arity::lit(v);
        }
        if (pos_ < s_.size() && std::islower(static_cast<unsigned char>(s_[pos_])) &&
            (pos_ + 1 >= s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1]))))
            return Arity::sym(s_[pos_++]);
        fail("expected arity");
    }

    Color rel_color() {
        if (pos_ + 1 >= s_.size() || s_[pos_] != '^') fail("expected ^o or ^b");
        char c = s_[pos_ + 1];
        if (c != 'o' && c != 'b') fail("expected ^o or ^b");
        pos_ += 2;
        return c == 'o' ? Color::White : Color::Black;
    }

    Term primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Term t = expr();
            if (!peek(')')) fail("expected )");
            ++pos_;
            return t;
        }
        if (c == '$') {
            ++pos_;
            std::string name = ident();
            if (pos_ < s_.size() && s_[pos_] == '^') return rel("$" + name, rel_color());
            return meta(name);
        }
        if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected character");
        std::string name = ident();
        if (pos_ < s_.size() && s_[pos_] == '^') return rel(name, rel_color());
        if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
            Color col = s_[pos_] == '+' ? Color::White : Color::Black;
            for (const auto& g : kGenNames) {
                if (name != g.text) continue;
                ++pos_;
                if (pos_ < s_.size() && s_[pos_] == '@') {
                    if (!g.sugarable) fail("e has no indexed form");
                    ++pos_;
                    Arity a = arity();
                    Arity b = Arity::lit(0);
                    if (g.fam == SugarFamily::SymmNM) {
                        skip();
                        if (pos_ >= s_.size() || s_[pos_] != ',') fail("expected , in sw@n,m");
                        ++pos_;
                        b = arity();
                    }
                    return sugar(g.fam, col, a, b);
                }
                return gen(g.gen, col);
            }
        }
        fail("unknown token '" + name + "'");
    }
};

std::string arity_text(Arity a) { return a.is_var() ? std::string(1, a.var) : std::to_string(a.value); }

void render_into(const Term& t, std::string& out) {
    switch (t->kind) {
        case Kind::Gen:
            out += gen_text(t->gen);
            out += color_char(t->color);
            return;
        case Kind::Rel:
            out += t->name;
            out += t->color == Color::White ? "^o" : "^b";
            return;
        case Kind::Meta:
            out += "$" + t->name;
            return;
        case Kind::Sugar:
            out += fam_text(t->fam);
            out += color_char(t->color);
            out += "@" + arity_text(t->n);
            if (t->fam == SugarFamily::SymmNM) out += "," + arity_text(t->m);
            return;
        case Kind::Seq:
        case Kind::Tensor: {
            auto child = [&](const Term& c, bool right) {
                bool bare = !is_binary(c) || (right && c->kind == t->kind && c->color == t->color);
                if (!bare) out += "(";
                render_into(c, out);
                if (!bare) out += ")";
            };
            child(t->left, false);
            out += t->kind == Kind::Seq ? " ;" : " *";
            out += color_char(t->color);
            out += " ";
            child(t->right, true);
            return;
        }
    }
}

}  // namespace

Term parse(const std::string& text) { return Parser(text).run(); }

std::string render(const Term& t) {
    std::string out;
    render_into(t, out);
    return out;
}

}  // namespace neopeirce
