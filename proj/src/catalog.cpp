#include "neopeirce/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "neopeirce/io.hpp"
#include "neopeirce/syntax.hpp"

namespace neopeirce {

extern const char* const kBuiltinManifest;

void RuleCatalog::add(AxiomSchema s) {
    if (index_.count(s.name)) throw Error(ErrorKind::ManifestError, "duplicate rule name " + s.name);
    index_[s.name] = rules_.size();
    rules_.push_back(std::move(s));
}

const AxiomSchema* RuleCatalog::find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : &rules_[it->second];
}

size_t RuleCatalog::base_row_count() const {
    size_t n = 0;
    for (const auto& r : rules_) n += !r.structural && !r.derived;
    return n;
}

Term color_flip(const Term& t) {
    switch (t->kind) {
        case Kind::Gen: return gen(t->gen, flip(t->color));
        case Kind::Rel: return rel(t->name, flip(t->color));
        case Kind::Sugar: return sugar(t->fam, flip(t->color), t->n, t->m);
        case Kind::Meta: return t;
        case Kind::Seq: return seq(flip(t->color), color_flip(t->left), color_flip(t->right));
        case Kind::Tensor: return tensor(flip(t->color), color_flip(t->left), color_flip(t->right));
    }
    return t;
}

Term instantiate(const Term& p, const Binding& b) {
    switch (p->kind) {
        case Kind::Meta: {
            auto it = b.terms.find(p->name);
            if (it == b.terms.end()) throw Error(ErrorKind::MissingSubst, "no substitution for $" + p->name);
            return it->second;
        }
        case Kind::Rel: {
            if (p->name.empty() || p->name[0] != '$') return p;
            auto it = b.symbols.find(p->name.substr(1));
            if (it == b.symbols.end()) throw Error(ErrorKind::MissingSubst, "no symbol for " + p->name);
            return rel(it->second, p->color);
        }
        case Kind::Sugar: {
            if (!p->n.is_var() && !p->m.is_var()) return p;
            auto get = [&](Arity a) {
                if (!a.is_var()) return a;
                auto it = b.arities.find(a.var);
                if (it == b.arities.end())
                    throw Error(ErrorKind::MissingSubst, std::string("no value for arity ") + a.var);
                return Arity::lit(it->second);
            };
            return sugar(p->fam, p->color, get(p->n), get(p->m));
        }
        case Kind::Seq: return seq(p->color, instantiate(p->left, b), instantiate(p->right, b));
        case Kind::Tensor: return tensor(p->color, instantiate(p->left, b), instantiate(p->right, b));
        case Kind::Gen: return p;
    }
    return p;
}

namespace {

void collect_vars(const Term& t, std::set<char>& vs, std::set<std::string>& metas, std::set<std::string>& syms) {
    switch (t->kind) {
        case Kind::Sugar:
            if (t->n.is_var()) vs.insert(t->n.var);
            if (t->fam == SugarFamily::SymmNM && t->m.is_var()) vs.insert(t->m.var);
            break;
        case Kind::Meta: metas.insert(t->name); break;
        case Kind::Rel:
            if (!t->name.empty() && t->name[0] == '$') syms.insert(t->name.substr(1));
            break;
        case Kind::Seq:
        case Kind::Tensor:
            collect_vars(t->left, vs, metas, syms);
            collect_vars(t->right, vs, metas, syms);
            break;
        default: break;
    }
}

Arity parse_arity(const nlohmann::json& j, const std::string& row) {
    if (j.is_number_integer()) return Arity::lit(j.get<int>());
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s.size() == 1 && std::islower(static_cast<unsigned char>(s[0]))) return Arity::sym(s[0]);
        if (!s.empty() && std::all_of(s.begin(), s.end(), ::isdigit)) return Arity::lit(std::stoi(s));
    }
    throw Error(ErrorKind::ManifestError, "row " + row + ": bad arity scheme");
}

// Typechecks both sides under every assignment of the arity variables in {0,1,2}.
void check_row(const AxiomSchema& s, const Signature* base = nullptr) {
    std::vector<char> vars = arity_vars(s);
    if (vars.size() > 8) throw Error(ErrorKind::ManifestError, "row " + s.name + ": too many arity variables");
    size_t total = 1;
    for (size_t i = 0; i < vars.size(); ++i) total *= 3;
    for (size_t code = 0; code < total; ++code) {
        MetaTyping env;
        size_t c = code;
        for (char v : vars) {
            env.arities[v] = static_cast<int>(c % 3);
            c /= 3;
        }
        Signature sig = base ? *base : Signature{};
        for (const auto& [name, sch] : s.metas) {
            int d = sch.dom.is_var() ? env.arities[sch.dom.var] : sch.dom.value;
            int e = sch.cod.is_var() ? env.arities[sch.cod.var] : sch.cod.value;
            env.metas[name] = {d, e};
            sig.symbols["$" + name] = {d, e};
        }
        InterfaceType a, b;
        try {
            a = typecheck(s.lhs, sig, env);
            b = typecheck(s.rhs, sig, env);
        } catch (const Error& e) {
            throw Error(ErrorKind::ManifestError, "row " + s.name + ": " + e.what());
        }
        if (!(a == b)) throw Error(ErrorKind::ManifestError, "row " + s.name + ": sides have different types");
    }
}

}  // namespace

std::vector<char> arity_vars(const AxiomSchema& s) {
    std::set<char> vs;
    std::set<std::string> metas, syms;
    collect_vars(s.lhs, vs, metas, syms);
    collect_vars(s.rhs, vs, metas, syms);
    for (const auto& [name, sch] : s.metas) {
        if (sch.dom.is_var()) vs.insert(sch.dom.var);
        if (sch.cod.is_var()) vs.insert(sch.cod.var);
    }
    return {vs.begin(), vs.end()};
}

std::vector<std::string> term_metas(const AxiomSchema& s) {
    std::set<char> vs;
    std::set<std::string> metas, syms;
    collect_vars(s.lhs, vs, metas, syms);
    collect_vars(s.rhs, vs, metas, syms);
    return {metas.begin(), metas.end()};
}

std::vector<std::string> symbol_metas(const AxiomSchema& s) {
    std::set<char> vs;
    std::set<std::string> metas, syms;
    collect_vars(s.lhs, vs, metas, syms);
    collect_vars(s.rhs, vs, metas, syms);
    return {syms.begin(), syms.end()};
}

AxiomSchema schema_from_json(const nlohmann::json& row, const Signature* sig) {
    if (!row.is_object()) throw Error(ErrorKind::ManifestError, "rule row must be an object");
    AxiomSchema s;
    s.name = row.value("name", "");
    if (s.name.empty()) throw Error(ErrorKind::ManifestError, "row without name");
    std::string kind = row.value("kind", "");
    if (kind == "leq")
        s.kind = RuleKind::Leq;
    else if (kind == "eq")
        s.kind = RuleKind::Eq;
    else if (kind == "struct")
        s.kind = RuleKind::Struct;
    else
        throw Error(ErrorKind::ManifestError, "row " + s.name + ": kind must be leq or eq");
    try {
        s.lhs = parse(row.at("lhs").get<std::string>());
        s.rhs = parse(row.at("rhs").get<std::string>());
    } catch (const Error& e) {
        throw Error(ErrorKind::ManifestError, "row " + s.name + ": " + e.what());
    } catch (const std::exception& e) {
        throw Error(ErrorKind::ManifestError, "row " + s.name + ": missing lhs/rhs");
    }
    s.structural = row.value("structural", false);
    if (row.contains("meta"))
        for (const auto& [mv, sch] : row["meta"].items())
            s.metas[mv] = {parse_arity(sch.at("dom"), s.name), parse_arity(sch.at("cod"), s.name)};
    if (row.contains("map_metas"))
        for (const auto& m : row["map_metas"]) {
            std::string name = m.get<std::string>();
            if (!name.empty() && name[0] == '$') name.erase(0, 1);
            s.map_metas.push_back(name);
        }
    for (const auto& m : term_metas(s))
        if (!s.metas.count(m)) throw Error(ErrorKind::ManifestError, "row " + s.name + ": untyped $" + m);
    for (const auto& m : symbol_metas(s))
        if (!s.metas.count(m)) throw Error(ErrorKind::ManifestError, "row " + s.name + ": untyped $" + m);
    for (const auto& m : s.map_metas)
        if (!s.metas.count(m)) throw Error(ErrorKind::ManifestError, "row " + s.name + ": map_metas names unknown $" + m);
    check_row(s, sig);
    return s;
}

RuleCatalog load_catalog(const std::string& text) {
    nlohmann::json rows;
    try {
        rows = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw Error(ErrorKind::ManifestError, std::string("manifest is not valid JSON: ") + e.what());
    }
    if (!rows.is_array()) throw Error(ErrorKind::ManifestError, "manifest must be a JSON array");
    RuleCatalog cat;
    for (const auto& row : rows) {
        AxiomSchema s = schema_from_json(row);
        std::string dual = row.value("dual", "");
        if (!dual.empty()) {
            AxiomSchema d = s;
            d.name = dual;
            d.lhs = color_flip(s.lhs);
            d.rhs = color_flip(s.rhs);
            if (s.kind == RuleKind::Leq) std::swap(d.lhs, d.rhs);
            check_row(d);
            cat.add(std::move(s));
            cat.add(std::move(d));
        } else {
            cat.add(std::move(s));
        }
    }
    return cat;
}

RuleCatalog load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ManifestError, "cannot read manifest " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_catalog(ss.str());
}

const std::string& builtin_manifest() {
    static const std::string text = kBuiltinManifest;
    return text;
}

RuleCatalog catalog() {
    if (const char* p = std::getenv("NEOPEIRCE_MANIFEST"); p && *p) return load_catalog_file(p);
    static const RuleCatalog cat = load_catalog(builtin_manifest());
    return cat;
}

}  // namespace neopeirce
