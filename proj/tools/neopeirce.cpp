#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "neopeirce/cr.hpp"
#include "neopeirce/deduction.hpp"
#include "neopeirce/derived.hpp"
#include "neopeirce/fol.hpp"
#include "neopeirce/io.hpp"
#include "neopeirce/pfl.hpp"
#include "neopeirce/soundness.hpp"
#include "neopeirce/syntax.hpp"

#ifndef NEOPEIRCE_DATA_DIR
#define NEOPEIRCE_DATA_DIR "data"
#endif

using namespace neopeirce;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0, kInput = 1, kFailed = 2;

// Thrown for verification failures so main can map them to exit code 2.
struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arguments naming an existing file are read; anything else is taken literally.
std::string text_arg(const std::string& arg) {
    std::error_code ec;
    if (fs::is_regular_file(arg, ec)) {
        std::string s = read_file(arg);
        while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
        return s;
    }
    return arg;
}

json json_arg(const std::string& arg) {
    std::string s = text_arg(arg);
    try {
        return json::parse(s);
    } catch (const std::exception& e) {
        throw Error(ErrorKind::InputError, arg + " is not valid JSON");
    }
}

Signature sig_arg(const std::string& arg) {
    if (arg.empty()) return {};
    return signature_from_json(json_arg(arg));
}

std::string type_string(InterfaceType t) { return std::to_string(t.dom) + " -> " + std::to_string(t.cod); }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_typecheck(const std::string& term, const std::string& sig) {
    InterfaceType ty = typecheck(parse(text_arg(term)), sig_arg(sig));
    std::cout << type_string(ty) << "\n";
    return kOk;
}

int cmd_eval(const std::string& term, const std::string& interp, const std::string& sigfile) {
    Signature sig = sig_arg(sigfile);
    Interpretation I = interpretation_from_json(json_arg(interp), sigfile.empty() ? nullptr : &sig);
    Term t = parse(text_arg(term));
    if (!sigfile.empty()) typecheck(t, sig);
    Relation r = eval(t, I);
    emit(to_json(r));
    std::cerr << r.pairs.size() << " pairs over |X| = " << I.domain_size << "\n";
    return kOk;
}

int cmd_check(const std::string& path) {
    ProofFile pf;
    try {
        pf = load_proof_file(path, catalog());
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::JustificationFailed) throw Failure(e.what());
        throw;
    }
    CheckReport rep;
    try {
        rep = check_proof(pf.proof, pf.catalog, pf.theory);
    } catch (const Error& e) {
        throw Failure(std::string(to_string(e.kind())) + ": " + e.what());
    }
    emit(to_json(rep));
    std::cerr << "verified " << rep.steps << " steps: " << render(rep.sequent.lhs) << "  <=  "
              << render(rep.sequent.rhs) << "\n";
    return kOk;
}

int cmd_oracle(const std::string& lhs, const std::string& rhs, const std::string& sigfile, int max_size) {
    Signature sig = sig_arg(sigfile);
    Term a = parse(text_arg(lhs)), b = parse(text_arg(rhs));
    if (!(typecheck(a, sig) == typecheck(b, sig))) throw Error(ErrorKind::TypeMismatch, "sides have different types");
    OracleOptions opt;
    opt.max_size = max_size;
    Verdict v = bounded_counterexample(a, b, sig, opt);
    emit(to_json(v));
    if (v.holds) {
        std::cerr << "no counterexample up to |X| = " << v.max_size << "\n";
        return kOk;
    }
    std::cerr << "counterexample at |X| = " << v.interp.domain_size << "\n";
    return kFailed;
}

int cmd_encode(const std::string& from, const std::string& input, const std::string& sigfile) {
    std::string text = text_arg(input);
    Signature sig = sig_arg(sigfile);
    Term t;
    if (from == "cr") {
        CRExpr e = cr_parse(text);
        t = cr_encode(e);
        sig = cr_signature(e);
    } else if (from == "fol") {
        FolSequent s = fol_parse(text);
        t = fol_encode(s.formula, s.context, sig);
    } else if (from == "pfl") {
        t = pfl_encode(pfl_parse(text), sig);
    } else {
        throw Error(ErrorKind::InputError, "--from must be cr, fol or pfl");
    }
    InterfaceType ty = typecheck(t, sig);
    emit({{"term", render(t)}, {"type", type_string(ty)}});
    std::cerr << "encoded as " << type_string(ty) << " diagram of size " << term_size(t) << "\n";
    return kOk;
}

int cmd_decode(const std::string& term, const std::string& sigfile) {
    Signature sig = sig_arg(sigfile);
    Term t = parse(text_arg(term));
    FolDecoded d = fol_decode(t, sig);
    std::string text = fol_render(d);
    emit({{"formula", text}, {"inputs", d.n}, {"outputs", d.m}});
    std::cerr << text << "\n";
    return kOk;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

int cmd_fuzz(const SweepOptions& opt) {
    SweepReport rep = soundness_sweep(catalog(), opt);
    json viol = json::array();
    for (const auto& v : rep.violations)
        viol.push_back({{"rule", v.rule},
                        {"dir", v.dir == Direction::Fwd ? "fwd" : "bwd"},
                        {"lhs", render(v.lhs)},
                        {"rhs", render(v.rhs)},
                        {"signature", to_json(v.sig)},
                        {"counterexample", to_json(v.verdict)}});
    emit({{"seed", opt.seed},
          {"max_size", opt.max_size},
          {"directed_rules", rep.directed_rules},
          {"instances", rep.instances},
          {"evaluations", rep.evaluations},
          {"violations", viol}});
    std::cerr << rep.violations.size() << " violations (" << rep.directed_rules << " directed rules, "
              << rep.instances << " instances)\n";
    return rep.violations.empty() ? kOk : kFailed;
}

// Shipped proofs with the endpoints they must reach.
struct ShippedProof {
    const char* file;
    std::string lhs, rhs;
};

std::vector<ShippedProof> shipped_proofs() {
    Signature sig;
    sig.symbols["c"] = {1, 1};
    Term n = negate(parse("c^o"), sig);
    std::string iterated = render(seq(Color::White, parse("cp+"),
                                      seq(Color::White, parse("id+ *+ c^o"),
                                          seq(Color::Black, tensor(Color::Black, n, parse("id-")),
                                              parse("cc- ;- d^o")))));
    return {
        {"forallexists.proof", "cd+ ;+ ((id- *- cd-) ;- R^o)", "cd- ;- ((cd+ *+ id+) ;+ R^o)"},
        {"peirce_iteration.proof", "c^o ;+ d^o", iterated},
        {"peirce_deiteration.proof", iterated, "c^o ;+ d^o"},
        {"nonempty_domain.proof", "e+", "cd+ ;+ dc+"},
    };
}

int cmd_demo(const std::string& data_dir) {
    json out;
    int failures = 0;
    auto note = [&](const std::string& name, bool ok, const std::string& detail) {
        out["checks"][name] = ok;
        std::cerr << (ok ? "ok    " : "FAIL  ") << name << (detail.empty() ? "" : ": " + detail) << "\n";
        failures += !ok;
    };

    // Shipped proofs.
    out["proofs"] = json::array();
    for (const auto& sp : shipped_proofs()) {
        std::string path = (fs::path(data_dir) / "proofs" / sp.file).string();
        try {
            ProofFile pf = load_proof_file(path, catalog());
            CheckReport rep = check_proof(pf.proof, pf.catalog, pf.theory);
            bool ends = struct_eq(rep.sequent.lhs, parse(sp.lhs)) && struct_eq(rep.sequent.rhs, parse(sp.rhs));
            json r = to_json(rep);
            r["file"] = sp.file;
            out["proofs"].push_back(r);
            note(sp.file, ends, render(rep.sequent.lhs) + "  <=  " + render(rep.sequent.rhs));
        } catch (const std::exception& e) {
            note(sp.file, false, e.what());
        }
    }

    // Quantifier swap: one direction holds, the other has a two-element counterexample.
    Signature rsig;
    rsig.symbols["R"] = {2, 0};
    Term ea = parse("cd+ ;+ ((id- *- cd-) ;- R^o)"), ae = parse("cd- ;- ((cd+ *+ id+) ;+ R^o)");
    Verdict fwd = bounded_counterexample(ea, ae, rsig, 3);
    Verdict smallest = bounded_counterexample(ae, ea, rsig, 2);
    OracleOptions two;
    two.min_size = two.max_size = 2;
    Verdict bwd = bounded_counterexample(ae, ea, rsig, two);
    note("exists-forall below forall-exists", fwd.holds, "searched |X| <= 3");
    note("converse refuted on two elements", !bwd.holds, bwd.holds ? "no counterexample" : "");
    note("converse refuted on the empty domain", !smallest.holds && smallest.interp.domain_size == 0, "");
    out["converse_counterexample"] = to_json(bwd);

    // FOL encoding reproduces the same diagram, and decoding reads it back.
    Term enc = fol_encode(fol_parse("ctx 0 |- exists! forall! R(x1, x2)").formula, 0, rsig);
    note("fol encoding of exists-forall", struct_eq(enc, ea), render(enc));
    out["decoded"] = fol_render(fol_decode(ae, rsig));

    // CR: encoded expression evaluates like the expression.
    CRExpr cr = cr_parse("(R ;+ ~S) & ~(S ;- R^)");
    Interpretation I;
    I.domain_size = 2;
    I.rho["R"] = make_relation(2, 1, 1, {{{0}, {1}}, {{1}, {1}}});
    I.rho["S"] = make_relation(2, 1, 1, {{{0}, {0}}, {{1}, {0}}});
    note("cr encoding", cr_eval(cr, I) == eval(cr_encode(cr), I), cr_render(cr));

    // PFL: membership agrees with the encoded diagram.
    Signature psig;
    psig.symbols["P"] = {2, 0};
    PflPred pp = pfl_parse("!(P* P & p P)");
    Term penc = pfl_encode(pp, psig);
    Interpretation J;
    J.domain_size = 2;
    J.rho["P"] = make_relation(2, 2, 0, {{{0, 1}, {}}, {{1, 1}, {}}});
    bool pfl_ok = true;
    Relation pr = eval(penc, J);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) pfl_ok &= pfl_member(pp, J, {a, b}) == pr.contains({a, b}, {});
    note("pfl encoding", pfl_ok, pfl_render(pp));

    // Derived operators: negation is complement, dagger is converse.
    Signature csig;
    csig.symbols["c"] = {1, 2};
    Interpretation K;
    K.domain_size = 2;
    K.rho["c"] = make_relation(2, 1, 2, {{{0}, {0, 1}}, {{1}, {1, 1}}});
    Term c = parse("c^o");
    note("negation", eval(negate(c, csig), K) == complement(eval(c, K)), "");
    note("converse", eval(dagger(c, csig), K) == converse(eval(c, K)), "");

    // Deduction: a one-step proof using the hypothesis becomes a proof in the empty theory.
    Theory T;
    T.sig.symbols["q"] = {0, 0};
    Term q = parse("q^o");
    Theory Th = T;
    Th.axioms.push_back({"hyp", parse("e+"), q});
    Proof p{"", parse("e+"), {Step{"hyp", Direction::Fwd, {}, {}}}};
    try {
        Proof d = deduction_transform(p, T, q, "hyp", catalog());
        CheckReport rep = check_proof(d, catalog(), T);
        Term want_l = tensor(Color::White, q, parse("e+"));
        Term want_r = residual_left(q, parse("e+"), T.sig);
        note("deduction transform", struct_eq(rep.sequent.lhs, want_l) && struct_eq(rep.sequent.rhs, want_r),
             std::to_string(rep.steps) + " steps");
    } catch (const std::exception& e) {
        note("deduction transform", false, e.what());
    }

    out["failures"] = failures;
    emit(out);
    if (failures) throw Failure(std::to_string(failures) + " demo checks failed");
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Neo-Peircean relations workbench"};
    app.require_subcommand(1);

    std::string term, sig, interp, proof, lhs, rhs, from, input, data_dir = NEOPEIRCE_DATA_DIR;
    int max_size = 2;

    auto* tc = app.add_subcommand("typecheck", "print the interface type of a term");
    tc->add_option("term", term, "term file or text")->required();
    tc->add_option("signature", sig, "signature JSON file");

    auto* ev = app.add_subcommand("eval", "evaluate a term in a finite interpretation");
    ev->add_option("term", term, "term file or text")->required();
    ev->add_option("interpretation", interp, "interpretation JSON file")->required();
    ev->add_option("--sig", sig, "signature JSON file");

    auto* ck = app.add_subcommand("check", "verify a proof file");
    ck->add_option("proof", proof, "proof JSON file")->required();

    auto* orc = app.add_subcommand("oracle", "search for a counterexample to lhs <= rhs");
    orc->add_option("lhs", lhs)->required();
    orc->add_option("rhs", rhs)->required();
    orc->add_option("signature", sig);
    orc->add_option("--max-size", max_size, "largest domain searched")->check(CLI::Range(0, 6));

    auto* enc = app.add_subcommand("encode", "translate cr, fol or pfl input into a term");
    enc->add_option("--from", from)->required()->check(CLI::IsMember({"cr", "fol", "pfl"}));
    enc->add_option("input", input)->required();
    enc->add_option("--sig", sig, "signature JSON file (fol, pfl)");

    auto* dec = app.add_subcommand("decode", "read a term as a first-order formula");
    dec->add_option("term", term)->required();
    dec->add_option("--sig", sig, "signature JSON file");

    SweepOptions sweep;
    std::string axioms;
    auto* fz = app.add_subcommand("fuzz", "random soundness sweep over the rule catalog");
    fz->add_option("--axioms", axioms, "comma-separated rule names; a trailing * matches a prefix");
    fz->add_option("--max-size", sweep.max_size)->check(CLI::Range(0, 3));
    fz->add_option("--seed", sweep.seed);
    fz->add_option("--samples", sweep.samples)->check(CLI::Range(1, 10000));
    fz->add_option("--depth", sweep.depth)->check(CLI::Range(0, 6));

    auto* dm = app.add_subcommand("demo", "replay the shipped proofs and exercise every module");
    dm->add_option("--data", data_dir, "directory holding proofs/ and theories/");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*tc) return cmd_typecheck(term, sig);
        if (*ev) return cmd_eval(term, interp, sig);
        if (*ck) return cmd_check(proof);
        if (*orc) return cmd_oracle(lhs, rhs, sig, max_size);
        if (*enc) return cmd_encode(from, input, sig);
        if (*dec) return cmd_decode(term, sig);
        if (*fz) {
            sweep.rules = split_list(axioms);
            return cmd_fuzz(sweep);
        }
        if (*dm) return cmd_demo(data_dir);
    } catch (const Failure& f) {
        std::cerr << "verification failed: " << f.what() << "\n";
        return kFailed;
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return kInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    }
    return kOk;
}
