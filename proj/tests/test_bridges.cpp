#include <gtest/gtest.h>

#include "neopeirce/pfl.hpp"
#include "support.hpp"

using namespace support;

namespace {

using Pairs = std::vector<std::pair<Tuple, Tuple>>;

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::InputError;
}

Interpretation successor3() {
    return Interpretation{3, {{"R", make_relation(3, 1, 1, {{{0}, {1}}, {{1}, {2}}, {{2}, {0}}})},
                              {"S", make_relation(3, 1, 1, {{{0}, {0}}, {{1}, {1}}})}}};
}

PflPred random_pfl(Rng& rng, int depth, const std::vector<std::string>& syms) {
    if (depth == 0 || pick(rng, 4) == 0) {
        int r = pick(rng, static_cast<int>(syms.size()) + 1);
        return r < static_cast<int>(syms.size()) ? pfl_sym(syms[r]) : pfl_ident();
    }
    static const PflOp unary[] = {PflOp::Minor, PflOp::Major, PflOp::Pad, PflOp::Crop, PflOp::Neg};
    if (pick(rng, 3) == 0) return pfl_cap(random_pfl(rng, depth - 1, syms), random_pfl(rng, depth - 1, syms));
    return pfl_unary(unary[pick(rng, 5)], random_pfl(rng, depth - 1, syms));
}

}  // namespace

TEST(CR, ParseRenderRoundTrip) {
    for (const char* text : {"R", "R ;+ S", "~R & S^", "(R | S) ;- id-", "~(S ;- R^)", "top & bot"}) {
        CRExpr e = cr_parse(text);
        EXPECT_EQ(cr_render(cr_parse(cr_render(e))), cr_render(e)) << text;
    }
    EXPECT_EQ(kind_of([] { cr_parse("R ;+"); }), ErrorKind::SyntaxError);
    EXPECT_EQ(kind_of([] { cr_parse("R $ S"); }), ErrorKind::SyntaxError);
}

TEST(CR, PrecedenceFromTightToLoose) {
    Interpretation I = successor3();
    EXPECT_EQ(cr_eval(cr_parse("R | S & R"), I), cr_eval(cr_parse("R | (S & R)"), I));
    EXPECT_EQ(cr_eval(cr_parse("~R ;+ S"), I), cr_eval(cr_parse("(~R) ;+ S"), I));
    EXPECT_EQ(cr_eval(cr_parse("~R^"), I), cr_eval(cr_parse("~(R^)"), I));
}

TEST(CR, FrozenValuesOnSuccessor) {
    Interpretation I = successor3();
    EXPECT_EQ(cr_eval(cr_parse("R ;+ R"), I).pairs, (Pairs{{{0}, {2}}, {{1}, {0}}, {{2}, {1}}}));
    EXPECT_EQ(cr_eval(cr_parse("R^"), I).pairs, (Pairs{{{0}, {2}}, {{1}, {0}}, {{2}, {1}}}));
    EXPECT_EQ(cr_eval(cr_parse("R & S"), I).pairs, Pairs{});
    EXPECT_EQ(cr_eval(cr_parse("id- ;- R"), I), cr_eval(cr_parse("R"), I));
    EXPECT_EQ(cr_eval(cr_parse("top"), I).pairs.size(), 9u);
    EXPECT_EQ(cr_eval(cr_parse("~id+"), I), cr_eval(cr_parse("id-"), I));
}

TEST(CR, EncodingTypesAndAgrees) {
    Rng rng(501);
    std::vector<std::string> syms{"R", "S"};
    Signature sig = binary_signature(syms);
    for (int i = 0; i < 300; ++i) {
        CRExpr e = random_cr(rng, 3, syms);
        Term t = cr_encode(e);
        ASSERT_EQ(typecheck(t, sig), (InterfaceType{1, 1}));
        Interpretation I = random_interpretation(rng, sig, pick(rng, 4));
        ASSERT_EQ(cr_eval(e, I), eval(t, I)) << cr_render(e);
    }
    EXPECT_EQ(cr_signature(cr_parse("R ;+ ~Q")).symbols.size(), 2u);
}

TEST(FOL, ParseAndScope) {
    FolSequent s = fol_parse("ctx 2 |- exists! (R(x1, x3) /\\ !x2 = x3)");
    EXPECT_EQ(s.context, 2);
    EXPECT_EQ(s.formula->op, FolOp::Exists);
    EXPECT_EQ(kind_of([] { fol_check_scope(fol_parse("ctx 1 |- R(x2)").formula, 1); }), ErrorKind::ScopeError);
    EXPECT_EQ(kind_of([] { fol_parse("ctx 1 |- R(x1"); }), ErrorKind::SyntaxError);
    EXPECT_EQ(fol_render(s.formula, 2), fol_render(fol_parse(fol_render(s.formula, 2)).formula, 2));
}

TEST(FOL, EvaluationFrozen) {
    // R = {(0,1), (1,1)}, f swaps 0 and 1.
    Interpretation I{2,
                     {{"R", make_relation(2, 2, 0, {{{0, 1}, {}}, {{1, 1}, {}}})},
                      {"f", make_relation(2, 1, 1, {{{0}, {1}}, {{1}, {0}}})}}};
    auto holds = [&](const char* text, const Tuple& env) { return fol_eval(fol_parse(text).formula, I, env); };
    EXPECT_TRUE(holds("ctx 0 |- exists! forall! R(x2, x1)", {}));
    EXPECT_FALSE(holds("ctx 0 |- exists! forall! R(x1, x2)", {}));
    EXPECT_FALSE(holds("ctx 0 |- forall! exists! R(x2, x1)", {}));
    EXPECT_TRUE(holds("ctx 0 |- forall! exists! R(x1, x2)", {}));
    EXPECT_TRUE(holds("ctx 0 |- exists! R(x1, x1)", {}));
    EXPECT_TRUE(holds("ctx 1 |- R(x1, f(x1))", {0}));
    EXPECT_FALSE(holds("ctx 1 |- R(x1, f(x1))", {1}));
    EXPECT_TRUE(holds("ctx 2 |- x1 = f(x2)", {1, 0}));
}

TEST(FOL, EncodingAgreesWithEvaluation) {
    Rng rng(502);
    for (int i = 0; i < 150; ++i) {
        FolVocabulary voc;
        voc.relations["R"] = 2;
        voc.relations["P"] = 1;
        voc.functions["f"] = 1;
        int n = pick(rng, 3);
        FolFormula phi = random_fol(rng, n, 3, voc);
        Signature sig = voc.signature();
        Term t = fol_encode(phi, n, sig);
        ASSERT_EQ(typecheck(t, sig), (InterfaceType{n, 0}));
        int k = 1 + pick(rng, 3);
        Interpretation I = random_interpretation(rng, sig, k, voc.function_names());
        Relation r = eval(t, I);
        for (const auto& env : all_tuples(k, n)) ASSERT_EQ(fol_eval(phi, I, env), r.contains(env, {}));
    }
}

TEST(FOL, NonFunctionalSymbolsAreRejectedInTerms) {
    Signature sig;
    sig.symbols["R"] = {1, 0};
    sig.symbols["f"] = {1, 1};
    Interpretation I{2, {{"R", make_relation(2, 1, 0, {{{0}, {}}})}, {"f", make_relation(2, 1, 1, {{{0}, {1}}})}}};
    EXPECT_EQ(kind_of([&] { fol_eval(fol_parse("ctx 1 |- R(f(x1))").formula, I, {1}); }),
              ErrorKind::NonFunctionalSymbol);
    EXPECT_EQ(kind_of([&] { fol_encode(fol_parse("ctx 1 |- R(x1, x1)").formula, 1, sig); }), ErrorKind::ArityError);
    EXPECT_EQ(kind_of([&] { fol_encode(fol_parse("ctx 1 |- Q(x1)").formula, 1, sig); }), ErrorKind::UnknownSymbol);
}

TEST(FOL, DecodeFlagshipTerms) {
    Signature sig;
    sig.symbols["R"] = {2, 0};
    FolDecoded ea = fol_decode(parse("cd+ ;+ ((id- *- cd-) ;- R^o)"), sig);
    EXPECT_EQ(ea.n, 0);
    EXPECT_EQ(ea.m, 0);
    for_each_interpretation(sig, 2, UINT64_MAX, [&](const Interpretation& I) {
        bool want = fol_eval(fol_parse("ctx 0 |- exists! forall! R(x1, x2)").formula, I, {});
        EXPECT_EQ(fol_eval(ea.formula, I, {}), want);
        return true;
    });
}

TEST(PFL, ParseArityAndTruncation) {
    Signature sig;
    sig.symbols["P"] = {2, 0};
    sig.symbols["Q"] = {1, 0};
    EXPECT_EQ(pfl_arity(pfl_parse("P"), sig), 2);
    EXPECT_EQ(pfl_arity(pfl_parse("] P"), sig), 1);
    EXPECT_EQ(pfl_arity(pfl_parse("[ Q"), sig), 2);
    EXPECT_EQ(pfl_arity(pfl_parse("p Q"), sig), 2);
    EXPECT_EQ(pfl_arity(pfl_parse("Q & P"), sig), 2);
    EXPECT_EQ(kind_of([] { pfl_parse("P &"); }), ErrorKind::SyntaxError);
    Interpretation I{2, {{"P", make_relation(2, 2, 0, {{{0, 1}, {}}})}, {"Q", make_relation(2, 1, 0, {{{1}, {}}})}}};
    EXPECT_TRUE(pfl_member(pfl_parse("p P"), I, {1, 0}));
    EXPECT_FALSE(pfl_member(pfl_parse("P"), I, {1, 0}));
    EXPECT_TRUE(pfl_member(pfl_parse("] P"), I, {1}));
    EXPECT_TRUE(pfl_member(pfl_parse("I"), I, {1, 1}));
    EXPECT_EQ(kind_of([&] { pfl_member(pfl_parse("P"), I, {1}); }), ErrorKind::TruncationTooSmall);
    EXPECT_EQ(pfl_eval_trunc(pfl_parse("P"), I, 2), (std::set<Tuple>{{0, 1}}));
    EXPECT_EQ(pfl_eval_trunc(pfl_parse("[ Q"), I, 2), (std::set<Tuple>{{0, 1}, {1, 1}}));
}

TEST(PFL, EncodingAgreesWithMembership) {
    Rng rng(503);
    Signature sig;
    sig.symbols["P"] = {2, 0};
    sig.symbols["Q"] = {1, 0};
    sig.symbols["Z"] = {0, 0};
    for (int i = 0; i < 300; ++i) {
        PflPred p = random_pfl(rng, 3, {"P", "Q", "Z"});
        int n = pfl_arity(p, sig);
        Term t = pfl_encode(p, sig);
        ASSERT_EQ(typecheck(t, sig), (InterfaceType{n, 0})) << pfl_render(p);
        int k = pick(rng, 4);
        Interpretation I = random_interpretation(rng, sig, k);
        Relation r = eval(t, I);
        for (const auto& tau : all_tuples(k, n))
            ASSERT_EQ(pfl_member(p, I, tau), r.contains(tau, {})) << pfl_render(p);
    }
}
