#include <gtest/gtest.h>

#include "neopeirce/io.hpp"
#include "support.hpp"

using namespace support;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::InputError;
}

Step step(const std::string& rule, Path path = {}, Binding b = {}, Direction dir = Direction::Fwd) {
    return Step{rule, dir, std::move(path), std::move(b)};
}

Theory binary_theory() {
    Theory T;
    T.sig.symbols["R"] = {1, 1};
    T.sig.symbols["S"] = {1, 1};
    T.axioms.push_back({"ax.rs", parse("R^o"), parse("S^o")});
    return T;
}

}  // namespace

TEST(Catalog, BuiltinManifestLoads) {
    RuleCatalog cat = catalog();
    json rows = json::parse(builtin_manifest());
    size_t duals = 0;
    for (const auto& r : rows) duals += r.contains("dual");
    EXPECT_EQ(cat.rules().size(), rows.size() + duals);
    for (const char* name : {"eps.dc+", "eps.dc-", "delta.l", "delta.r", "nu.b.r", "smc.struct", "cp+.nat",
                             "cp-.nat", "gamma.cd-", "tau.R+", "F.bw"})
        EXPECT_NE(cat.find(name), nullptr) << name;
    EXPECT_EQ(cat.find("no.such.rule"), nullptr);
}

TEST(Catalog, DualsSwapColorsAndDirection) {
    RuleCatalog cat = catalog();
    const AxiomSchema* w = cat.find("eps.dc+");
    const AxiomSchema* b = cat.find("eps.dc-");
    ASSERT_TRUE(w && b);
    EXPECT_TRUE(equal(b->lhs, color_flip(w->rhs)));
    EXPECT_TRUE(equal(b->rhs, color_flip(w->lhs)));
}

TEST(Catalog, ManifestErrors) {
    auto load = [](const std::string& text) { return [text] { load_catalog(text); }; };
    EXPECT_EQ(kind_of(load("{")), ErrorKind::ManifestError);
    EXPECT_EQ(kind_of(load("{}")), ErrorKind::ManifestError);
    EXPECT_EQ(kind_of(load(R"([{"name":"x","kind":"leq","lhs":"cp+","rhs":"cp+"},
                                {"name":"x","kind":"leq","lhs":"cp+","rhs":"cp+"}])")),
              ErrorKind::ManifestError);
    EXPECT_EQ(kind_of(load(R"([{"name":"x","kind":"maybe","lhs":"cp+","rhs":"cp+"}])")), ErrorKind::ManifestError);
    EXPECT_EQ(kind_of(load(R"([{"name":"x","kind":"leq","lhs":"cp+","rhs":"dc+"}])")), ErrorKind::ManifestError);
    EXPECT_EQ(kind_of(load(R"([{"name":"x","kind":"leq","lhs":"$a","rhs":"$a"}])")), ErrorKind::ManifestError);
    RuleCatalog ok = load_catalog(R"([{"name":"x","kind":"leq","dual":"y","lhs":"cp+","rhs":"cp+ ;+ sw+"}])");
    EXPECT_EQ(ok.rules().size(), 2u);
}

TEST(Kernel, AppliesInclusionsAndEquations) {
    RuleCatalog cat = catalog();
    Theory T;
    EXPECT_TRUE(equal(apply_step(parse("cd+ ;+ dc+"), step("eps.dc+"), cat, T), parse("e+")));
    EXPECT_TRUE(equal(apply_step(parse("cp+"), step("cp+.comm", {}, {}, Direction::Bwd), cat, T),
                      parse("cp+ ;+ sw+")));
    Term nested = apply_step(parse("id+ ;+ (cp+ ;+ sw+)"), step("cp+.comm", {1}), cat, T);
    EXPECT_TRUE(equal(nested, parse("id+ ;+ cp+")));
}

TEST(Kernel, MatchesModuloStructure) {
    RuleCatalog cat = catalog();
    Theory T;
    // Redex written with a stray unit and sugar.
    Term t = apply_step(parse("(cd+@1 ;+ id+) ;+ dc+"), step("eps.dc+"), cat, T);
    EXPECT_TRUE(equal(t, parse("e+")));
}

TEST(Kernel, StepErrors) {
    RuleCatalog cat = catalog();
    Theory T = binary_theory();
    auto at = [&](const char* term, Step s) { return [&cat, &T, term, s] { apply_step(parse(term), s, cat, T); }; };
    EXPECT_EQ(kind_of(at("cd+ ;+ dc+", step("nope"))), ErrorKind::UnknownRule);
    EXPECT_EQ(kind_of(at("e+", step("eps.dc+", {}, {}, Direction::Bwd))), ErrorKind::IllegalDirection);
    EXPECT_EQ(kind_of(at("cp+", step("eps.dc+"))), ErrorKind::RedexMismatch);
    EXPECT_EQ(kind_of(at("cd+ ;+ dc+", step("eps.dc+", {0, 1}))), ErrorKind::InvalidPath);
    EXPECT_EQ(kind_of(at("R^o ;+ (S^o ;- R^o)", step("delta.l"))), ErrorKind::MissingSubst);
    EXPECT_EQ(kind_of(at("R^o", step("smc.struct"))), ErrorKind::MissingSubst);
    EXPECT_EQ(kind_of(at("R^o", step("smc.struct", {}, bind({{"b", parse("S^o")}})))), ErrorKind::RedexMismatch);
}

TEST(Kernel, ExplicitSubstitutionDrivesMetaRules) {
    RuleCatalog cat = catalog();
    Theory T = binary_theory();
    Binding b = bind({{"a", parse("R^o")}, {"b", parse("S^o")}, {"c", parse("R^o")}});
    Term t = apply_step(parse("R^o ;+ (S^o ;- R^o)"), step("delta.l", {}, b), cat, T);
    EXPECT_TRUE(equal(t, parse("(R^o ;+ S^o) ;- R^o")));
    // Bound to the wrong subterm.
    Binding wrong = bind({{"a", parse("S^o")}, {"b", parse("S^o")}, {"c", parse("R^o")}});
    EXPECT_EQ(kind_of([&] { apply_step(parse("R^o ;+ (S^o ;- R^o)"), step("delta.l", {}, wrong), cat, T); }),
              ErrorKind::RedexMismatch);
}

TEST(Kernel, TheoryAxiomsAndProofCheck) {
    RuleCatalog cat = catalog();
    Theory T = binary_theory();
    Proof p;
    p.start = parse("cp+ ;+ (R^o *+ R^o)");
    p.steps.push_back(step("ax.rs", {1, 0}));
    p.steps.push_back(step("ax.rs", {1, 1}));
    CheckReport rep = check_proof(p, cat, T);
    EXPECT_EQ(rep.steps, 2u);
    EXPECT_TRUE(equal(rep.sequent.rhs, parse("cp+ ;+ (S^o *+ S^o)")));
    EXPECT_EQ(rep.theory_axioms_used, std::vector<std::string>{"ax.rs"});
    p.steps.push_back(step("ax.rs", {1, 1}));
    try {
        check_proof(p, cat, T);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::RedexMismatch);
        EXPECT_NE(std::string(e.what()).find("step 2"), std::string::npos);
    }
}

TEST(Kernel, TotalMapAxioms) {
    Signature sig;
    sig.symbols["f"] = {1, 1};
    sig.symbols["R"] = {1, 0};
    auto [cp, dc] = tmap_axioms("f", sig);
    EXPECT_TRUE(struct_eq(cp.lhs, parse("f^o ;+ cp+")));
    EXPECT_TRUE(struct_eq(cp.rhs, parse("cp+ ;+ (f^o *+ f^o)")));
    EXPECT_TRUE(struct_eq(dc.lhs, parse("dc+")));
    EXPECT_TRUE(struct_eq(dc.rhs, parse("f^o ;+ dc+")));
    EXPECT_EQ(kind_of([&] { tmap_axioms("R", sig); }), ErrorKind::ArityError);
    EXPECT_EQ(kind_of([&] { tmap_axioms("g", sig); }), ErrorKind::UnknownSymbol);
}

TEST(Kernel, EndpointClasses) {
    EXPECT_EQ(classify_endpoints({parse("e+"), parse("e-")}), EndpointClass::Contradiction);
    EXPECT_EQ(classify_endpoints({parse("cd+"), parse("cd-")}), EndpointClass::Triviality);
    EXPECT_EQ(classify_endpoints({parse("e+"), parse("e+")}), EndpointClass::Plain);
}

TEST(Kernel, SyntacticMaps) {
    Theory T;
    T.sig.symbols["f"] = {1, 1};
    T.sig.symbols["g"] = {1, 1};
    auto [cp, dc] = tmap_axioms("f", T.sig);
    T.axioms.push_back({"tmap.f.cp", cp.lhs, cp.rhs});
    T.axioms.push_back({"tmap.f.dc", dc.lhs, dc.rhs});
    EXPECT_TRUE(is_syntactic_map(parse("cp+ ;+ (id+ *+ dc+) ;+ sw+@0,1"), T));
    EXPECT_TRUE(is_syntactic_map(parse("cp+ ;+ (f^o *+ f^o)"), T));
    EXPECT_FALSE(is_syntactic_map(parse("g^o"), T));
    EXPECT_FALSE(is_syntactic_map(parse("cc+"), T));
    EXPECT_FALSE(is_syntactic_map(parse("cp-"), T));
}

TEST(DerivedRules, OracleAcceptsSoundAndRejectsUnsound) {
    RuleCatalog cat = catalog();
    Theory T;
    DerivedRule good;
    good.schema = schema_from_json(json::parse(
        R"({"name":"lemma.drop","kind":"leq","lhs":"$a ;+ dc+","rhs":"dc+","meta":{"a":{"dom":1,"cod":1}}})"));
    good.max_size = 2;
    RuleCatalog ext = register_derived_rule(good, cat, T);
    ASSERT_NE(ext.find("lemma.drop"), nullptr);
    Term t = apply_step(parse("cp+ ;+ cc+ ;+ dc+"), step("lemma.drop", {}, bind({{"a", parse("cp+ ;+ cc+")}})), ext, T);
    EXPECT_TRUE(struct_eq(t, parse("dc+")));

    DerivedRule bad = good;
    bad.schema = schema_from_json(json::parse(
        R"({"name":"lemma.bad","kind":"leq","lhs":"dc+","rhs":"$a ;+ dc+","meta":{"a":{"dom":1,"cod":1}}})"));
    EXPECT_EQ(kind_of([&] { register_derived_rule(bad, cat, T); }), ErrorKind::JustificationFailed);
    DerivedRule taken = good;
    taken.schema.name = "eps.dc+";
    EXPECT_EQ(kind_of([&] { register_derived_rule(taken, cat, T); }), ErrorKind::JustificationFailed);
}

TEST(DerivedRules, ProofJustified) {
    RuleCatalog cat = catalog();
    Theory T;
    DerivedRule r;
    r.schema = schema_from_json(json::parse(R"({"name":"lemma.sw","kind":"leq","lhs":"cp+","rhs":"cp+ ;+ sw+"})"));
    r.justification = DerivedRule::Kind::Proof;
    Proof p;
    p.start = parse("cp+");
    p.steps.push_back(step("cp+.comm", {}, {}, Direction::Bwd));
    r.proof = p;
    EXPECT_NE(register_derived_rule(r, cat, T).find("lemma.sw"), nullptr);
    r.proof->steps.push_back(step("cp+.comm"));
    EXPECT_EQ(kind_of([&] { register_derived_rule(r, cat, T); }), ErrorKind::JustificationFailed);
}

TEST(ShippedProofs, ReplayWithExpectedEndpoints) {
    struct Case {
        const char* file;
        const char* lhs;
        const char* rhs;
    } cases[] = {
        {"forallexists.proof", "cd+ ;+ ((id- *- cd-) ;- R^o)", "cd- ;- ((cd+ *+ id+) ;+ R^o)"},
        {"nonempty_domain.proof", "e+", "cd+ ;+ dc+"},
        {"peirce_iteration.proof", "c^o ;+ d^o", nullptr},
        {"peirce_deiteration.proof", nullptr, "c^o ;+ d^o"},
    };
    for (const auto& c : cases) {
        ProofFile pf = load_proof_file(std::string(NEOPEIRCE_DATA_DIR) + "/proofs/" + c.file, catalog());
        CheckReport rep = check_proof(pf.proof, pf.catalog, pf.theory);
        if (c.lhs) EXPECT_TRUE(struct_eq(rep.sequent.lhs, parse(c.lhs))) << c.file;
        if (c.rhs) EXPECT_TRUE(struct_eq(rep.sequent.rhs, parse(c.rhs))) << c.file;
        // Every shipped inclusion is semantically valid.
        Verdict v = bounded_counterexample(rep.sequent.lhs, rep.sequent.rhs, pf.theory.sig, 2);
        if (pf.theory.axioms.empty()) EXPECT_TRUE(v.holds) << c.file;
    }
}

TEST(ShippedProofs, RejectedAfterTampering) {
    json j = json::parse(read_file(std::string(NEOPEIRCE_DATA_DIR) + "/proofs/forallexists.proof"));
    j["steps"].erase(j["steps"].begin() + 3);
    EXPECT_THROW(
        {
            ProofFile pf = load_proof(j, std::string(NEOPEIRCE_DATA_DIR) + "/proofs", catalog());
            check_proof(pf.proof, pf.catalog, pf.theory);
        },
        Error);
}
