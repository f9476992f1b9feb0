#include <gtest/gtest.h>

#include "neopeirce/derived.hpp"
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

}  // namespace

TEST(Builder, RejectsBadStepsAndKeepsState) {
    RuleCatalog cat = catalog();
    Theory T;
    ProofBuilder pb(parse("cd+ ;+ dc+"), cat, T);
    EXPECT_THROW(pb.apply("eps.cp+", {}), Error);
    EXPECT_TRUE(equal(pb.current(), parse("cd+ ;+ dc+")));
    pb.apply("eps.dc+", {});
    Proof p = pb.finish();
    EXPECT_EQ(p.steps.size(), 1u);
    EXPECT_TRUE(equal(check_proof(p, cat, T).sequent.rhs, parse("e+")));
}

TEST(Builder, ReshapeSkipsWhenAlreadyEqual) {
    RuleCatalog cat = catalog();
    Theory T;
    ProofBuilder pb(parse("cp+"), cat, T);
    pb.reshape(parse("cp+"));
    EXPECT_TRUE(pb.finish().steps.empty());
    pb.reshape(parse("id+ ;+ cp+"));
    EXPECT_EQ(pb.finish().steps.size(), 1u);
}

TEST(AdjunctionLemmas, UnitAndCounitCheck) {
    RuleCatalog cat = catalog();
    Rng rng(401);
    for (int i = 0; i < 40; ++i) {
        Theory T;
        T.sig = random_signature(rng, 2, 2);
        TermGenOptions g;
        g.depth = 2;
        InterfaceType ty{pick(rng, 3), pick(rng, 3)};
        Term t = random_term(rng, ty, T.sig, g);
        CheckReport u = check_proof(unit_lemma(t, cat, T), cat, T);
        EXPECT_TRUE(struct_eq(u.sequent.lhs, sugar(SugarFamily::IdN, Color::White, ty.dom)));
        EXPECT_TRUE(struct_eq(u.sequent.rhs, seq(Color::Black, t, alpha(t))));
        CheckReport c = check_proof(counit_lemma(t, cat, T), cat, T);
        EXPECT_TRUE(struct_eq(c.sequent.lhs, seq(Color::White, alpha(t), t)));
        EXPECT_TRUE(struct_eq(c.sequent.rhs, sugar(SugarFamily::IdN, Color::Black, ty.cod)));
    }
}

TEST(Deduction, HandWrittenProof) {
    // R <= R *+ P under e+ <= P becomes P *+ id+ <= (R *+ P) ;- alpha(R) without it.
    RuleCatalog cat = catalog();
    Theory T;
    T.sig.symbols["P"] = {0, 0};
    T.sig.symbols["R"] = {1, 1};
    T.sig.symbols["S"] = {1, 1};
    Theory ext = T;
    ext.axioms.push_back({"h", parse("e+"), parse("P^o")});
    ProofBuilder pb(parse("R^o"), cat, ext);
    pb.reshape(parse("R^o *+ e+"));
    pb.apply("h", {1});
    Proof p = pb.finish();
    Proof q = deduction_transform(p, T, parse("P^o"), "h", cat);
    CheckReport rep = check_proof(q, cat, T);
    EXPECT_TRUE(struct_eq(rep.sequent.lhs, parse("P^o *+ id+")));
    EXPECT_TRUE(struct_eq(rep.sequent.rhs, seq(Color::Black, parse("R^o *+ P^o"), alpha(parse("R^o")))));
}

TEST(Deduction, Errors) {
    RuleCatalog cat = catalog();
    Theory T;
    T.sig.symbols["R"] = {1, 1};
    Proof p;
    p.start = parse("R^o");
    EXPECT_EQ(kind_of([&] { deduction_transform(p, T, parse("R^o"), "h", cat); }), ErrorKind::NotClosedFormula);
    EXPECT_EQ(kind_of([&] { deduction_transform(p, T, parse("e+"), "eps.dc+", cat); }), ErrorKind::InputError);
    p.steps.push_back({"mystery", Direction::Fwd, {}, {}});
    EXPECT_EQ(kind_of([&] { deduction_transform(p, T, parse("e+"), "h", cat); }), ErrorKind::UsesUnknownRule);
}

TEST(Deduction, RandomProofsTransformToCheckedProofs) {
    RuleCatalog cat = catalog();
    Rng rng(402);
    for (int i = 0; i < 30; ++i) {
        DeductionCase dc = random_deduction_case(rng, cat, 6);
        ASSERT_NO_THROW(check_proof(dc.proof, cat, dc.extended));
        Proof t = deduction_transform(dc.proof, dc.base, dc.hyp, "hyp", cat);
        CheckReport rep = check_proof(t, cat, dc.base);
        InterfaceType ty = typecheck(dc.lhs, dc.base.sig);
        EXPECT_TRUE(struct_eq(rep.sequent.lhs,
                              tensor(Color::White, dc.hyp, sugar(SugarFamily::IdN, Color::White, ty.dom))));
        EXPECT_TRUE(struct_eq(rep.sequent.rhs, seq(Color::Black, dc.rhs, alpha(dc.lhs))));
    }
}
