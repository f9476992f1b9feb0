#include "neopeirce/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "neopeirce/syntax.hpp"

namespace neopeirce {

namespace {

Error input_error(const std::string& msg) { return Error(ErrorKind::InputError, msg); }

Tuple tuple_from_json(const json& j) {
    if (!j.is_array()) throw input_error("tuple must be an array");
    Tuple t;
    for (const auto& x : j) t.push_back(x.get<int>());
    return t;
}

json tuple_json(const Tuple& t) {
    json a = json::array();
    for (int x : t) a.push_back(x);
    return a;
}

bool is_identifier(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char ch : s)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
    return true;
}

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const std::exception& e) {
        throw input_error(what + " is not valid JSON: " + e.what());
    }
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Signature signature_from_json(const json& j) {
    const json& syms = j.contains("symbols") ? j.at("symbols") : j;
    if (!syms.is_object()) throw input_error("signature must map symbol names to {ar, coar}");
    Signature sig;
    for (const auto& [name, ty] : syms.items()) {
        if (!is_identifier(name)) throw input_error("bad symbol name " + name);
        int ar = ty.at("ar").get<int>(), coar = ty.at("coar").get<int>();
        if (ar < 0 || coar < 0) throw input_error("negative arity for " + name);
        sig.symbols[name] = {ar, coar};
    }
    return sig;
}

json to_json(const Signature& sig) {
    json syms = json::object();
    for (const auto& [name, ty] : sig.symbols) syms[name] = {{"ar", ty.ar}, {"coar", ty.coar}};
    return {{"symbols", syms}};
}

Interpretation interpretation_from_json(const json& j, const Signature* sig) {
    Interpretation I;
    I.domain_size = j.at("domain").get<int>();
    if (I.domain_size < 0) throw input_error("negative domain size");
    if (j.contains("rels"))
        for (const auto& [name, pairs] : j.at("rels").items()) {
            std::vector<std::pair<Tuple, Tuple>> ps;
            for (const auto& p : pairs) {
                if (!p.is_array() || p.size() != 2) throw input_error("relation " + name + ": pairs are [dom, cod]");
                ps.emplace_back(tuple_from_json(p[0]), tuple_from_json(p[1]));
            }
            int ar = 0, coar = 0;
            if (sig && sig->has(name)) {
                ar = sig->symbols.at(name).ar;
                coar = sig->symbols.at(name).coar;
            } else if (!ps.empty()) {
                ar = static_cast<int>(ps.front().first.size());
                coar = static_cast<int>(ps.front().second.size());
            } else {
                throw input_error("relation " + name + " is empty and has no declared type");
            }
            I.rho[name] = make_relation(I.domain_size, ar, coar, std::move(ps));
        }
    return I;
}

json to_json(const Relation& r) {
    json a = json::array();
    for (const auto& [u, v] : r.pairs) a.push_back(json::array({tuple_json(u), tuple_json(v)}));
    return a;
}

json to_json(const Interpretation& I) {
    json rels = json::object();
    for (const auto& [name, r] : I.rho) rels[name] = to_json(r);
    return {{"domain", I.domain_size}, {"rels", rels}};
}

json to_json(const Verdict& v) {
    if (v.holds) return {{"holds", true}, {"max_size", v.max_size}};
    return {{"holds", false},
            {"interpretation", to_json(v.interp)},
            {"witness", json::array({tuple_json(v.witness_dom), tuple_json(v.witness_cod)})}};
}

Theory theory_from_json(const json& j) {
    Theory T;
    if (j.contains("signature")) T.sig = signature_from_json(j.at("signature"));
    if (j.contains("axioms"))
        for (const auto& a : j.at("axioms")) {
            TheoryAxiom ax{a.at("name").get<std::string>(), parse(a.at("lhs").get<std::string>()),
                           parse(a.at("rhs").get<std::string>())};
            InterfaceType l = typecheck(ax.lhs, T.sig), r = typecheck(ax.rhs, T.sig);
            if (!(l == r)) throw Error(ErrorKind::TypeMismatch, "theory axiom " + ax.name + ": sides differ in type");
            if (T.find(ax.name)) throw input_error("duplicate theory axiom " + ax.name);
            T.axioms.push_back(std::move(ax));
        }
    if (j.contains("tmap"))
        for (const auto& f : j.at("tmap")) {
            std::string name = f.get<std::string>();
            auto [single, total] = tmap_axioms(name, T.sig);
            T.axioms.push_back({"tmap." + name + ".cp", single.lhs, single.rhs});
            T.axioms.push_back({"tmap." + name + ".dc", total.lhs, total.rhs});
        }
    return T;
}

Binding binding_from_json(const json& subst) {
    Binding b;
    if (subst.is_null()) return b;
    if (!subst.is_object()) throw input_error("subst must be an object");
    for (const auto& [key, val] : subst.items()) {
        if (key.size() > 1 && key[0] == '$') {
            std::string name = key.substr(1);
            std::string text = val.get<std::string>();
            if (is_identifier(text))
                b.symbols[name] = text;
            else
                b.terms[name] = parse(text);
        } else if (key.size() == 1 && std::islower(static_cast<unsigned char>(key[0]))) {
            b.arities[key[0]] = val.get<int>();
        } else {
            throw input_error("bad subst key " + key);
        }
    }
    return b;
}

json to_json(const Binding& b) {
    json j = json::object();
    for (const auto& [k, t] : b.terms) j["$" + k] = render(t);
    for (const auto& [k, s] : b.symbols) j["$" + k] = s;
    for (const auto& [k, n] : b.arities) j[std::string(1, k)] = n;
    return j;
}

Proof proof_from_json(const json& j) {
    Proof p;
    if (j.contains("theory") && j.at("theory").is_string()) p.theory_ref = j.at("theory").get<std::string>();
    p.start = parse(j.at("start").get<std::string>());
    if (j.contains("steps"))
        for (const auto& s : j.at("steps")) {
            Step st;
            st.rule = s.at("rule").get<std::string>();
            std::string dir = s.value("dir", "fwd");
            if (dir == "fwd")
                st.dir = Direction::Fwd;
            else if (dir == "bwd")
                st.dir = Direction::Bwd;
            else
                throw input_error("dir must be fwd or bwd");
            if (s.contains("path"))
                for (const auto& x : s.at("path")) st.path.push_back(x.get<int>());
            if (s.contains("subst")) st.subst = binding_from_json(s.at("subst"));
            p.steps.push_back(std::move(st));
        }
    if (j.contains("claim") && j.at("claim") != "leq") throw input_error("only leq claims are supported");
    return p;
}

json to_json(const Proof& p) {
    json steps = json::array();
    for (const auto& s : p.steps) {
        json js = {{"rule", s.rule}, {"dir", s.dir == Direction::Fwd ? "fwd" : "bwd"}, {"path", s.path}};
        if (!s.subst.terms.empty() || !s.subst.symbols.empty() || !s.subst.arities.empty())
            js["subst"] = to_json(s.subst);
        steps.push_back(std::move(js));
    }
    json j = {{"start", render(p.start)}, {"steps", steps}, {"claim", "leq"}};
    if (!p.theory_ref.empty()) j["theory"] = p.theory_ref;
    return j;
}

ProofFile load_proof(const json& j, const std::string& base_dir, const RuleCatalog& cat) {
    ProofFile pf{proof_from_json(j), {}, cat, {}};
    if (j.contains("theory")) {
        const json& th = j.at("theory");
        if (th.is_string()) {
            std::filesystem::path p(th.get<std::string>());
            if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
            pf.theory = theory_from_json(parse_json(read_file(p.string()), p.string()));
        } else {
            pf.theory = theory_from_json(th);
        }
    }
    if (j.contains("derived"))
        for (const auto& row : j.at("derived")) {
            DerivedRule r;
            r.schema = schema_from_json(row, &pf.theory.sig);
            std::string just = row.value("justification", "oracle");
            if (just == "oracle") {
                r.justification = DerivedRule::Kind::OracleValidated;
                r.max_size = row.value("max_size", 2);
            } else if (just == "proof") {
                r.justification = DerivedRule::Kind::Proof;
                r.proof = proof_from_json(row.at("proof"));
            } else {
                throw input_error("justification must be oracle or proof");
            }
            pf.catalog = register_derived_rule(r, pf.catalog, pf.theory);
            pf.derived_rules.push_back(r.schema.name);
        }
    return pf;
}

ProofFile load_proof_file(const std::string& path, const RuleCatalog& cat) {
    json j = parse_json(read_file(path), path);
    return load_proof(j, std::filesystem::path(path).parent_path().string(), cat);
}

json to_json(const CheckReport& r) {
    return {{"verified", true},
            {"lhs", render(r.sequent.lhs)},
            {"rhs", render(r.sequent.rhs)},
            {"steps", r.steps},
            {"uses_derived_rules", !r.derived_rules_used.empty()},
            {"derived_rules_used", r.derived_rules_used},
            {"theory_axioms_used", r.theory_axioms_used},
            {"classification", to_string(classify_endpoints(r.sequent))}};
}

}  // namespace neopeirce
