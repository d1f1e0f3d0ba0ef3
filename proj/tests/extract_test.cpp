// Copyright (c) 2026 The dnsk Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include <gtest/gtest.h>

#include "dnsk/eval.hpp"
#include "dnsk/extract.hpp"
#include "dnsk/parser.hpp"
#include "dnsk/printer.hpp"
#include "dnsk/subst.hpp"
#include "dnsk/translate.hpp"
#include "gen.hpp"

namespace dnsk {
namespace {

Signature sig() {
    Signature s;
    s.declare("P", {Type::nat()});
    s.declare("Q", {Type::nat(), Type::nat()});
    return s;
}

Derivation derive(const Context& ctx, const std::string& p, const std::string& goal) {
    CheckReport r = check_proof(sig(), ctx, Annotation::Plain, parse_proof(p), parse_formula(goal));
    if (!r.accepted) throw std::runtime_error(r.error->path + ": " + std::string(to_string(r.error->kind)));
    return *r.derivation;
}

TEST(Dummy, Canonical) {
    EXPECT_EQ(to_string(dummy(parse_type("nat -> unit"))), "fun (x:nat) => star");
    EXPECT_EQ(to_string(dummy(parse_type("nat * unit"))), "(0, star)");
}

TEST(Extract, ExistentialWitness) {
    Context ctx;
    ctx.assume("refl", parse_formula("S(S(S(S 0))) = S(S(S(S 0)))"));
    Derivation d = derive(ctx, "[S(S(S(S 0))), refl]", "exists x:nat. x = S(S(S(S 0)))");
    ExtractionEnv env;
    env.axiom_realizers.emplace("refl", star());
    Term r = extract_mr(d, env);
    EXPECT_EQ(infer_term_type({}, r), parse_type("unit * nat"));
    Term witness = normalize_term({}, proj2(r));
    EXPECT_EQ(witness, numeral(4));
    // The instance at the witness re-checks.
    Formula inst = subst_formula(parse_formula("x = S(S(S(S 0)))"), "x", witness);
    EXPECT_TRUE(check_proof(sig(), ctx, Annotation::Plain, parse_proof("refl"), inst).accepted);
}

TEST(Extract, DisjunctionFlag) {
    Context ctx;
    ctx.assume("refl", parse_formula("0 = 0"));
    Derivation d = derive(ctx, "inl refl", "0 = 0 \\/ 0 = S 0");
    ExtractionEnv env;
    env.axiom_realizers.emplace("refl", star());
    Term r = extract_mr(d, env);
    EXPECT_EQ(to_string(r), "((star, star), 0)");
    EXPECT_EQ(normalize_term({}, proj2(r)), zero());
}

TEST(Extract, RightInjectionFlag) {
    Context ctx;
    ctx.assume("refl", parse_formula("0 = 0"));
    Derivation d = derive(ctx, "inr refl", "P(0) \\/ 0 = 0");
    ExtractionEnv env;
    env.axiom_realizers.emplace("refl", star());
    EXPECT_EQ(normalize_term({}, proj2(extract_mr(d, env))), numeral(1));
}

TEST(Extract, Identity) {
    Derivation d = derive({}, "fun a => a", "P(0) -> P(0)");
    EXPECT_TRUE(alpha_equal(extract_mr(d, {}), parse_term("fun (a:unit) => a")));
}

TEST(Extract, CaseCompilesToRecursor) {
    Context ctx;
    ctx.assume("d", parse_formula("P(0) \\/ (exists y:nat. P(y))"));
    Derivation d = derive(ctx, "case d of a => [0, a] | b => b", "exists y:nat. P(y)");
    ExtractionEnv env;
    Context tctx;
    env.bind("d", "w", parse_formula("P(0) \\/ (exists y:nat. P(y))"), tctx);
    Term r = extract_mr(d, env);
    EXPECT_EQ(infer_term_type(tctx, r), parse_type("unit * nat"));
    EXPECT_TRUE(r.is(Term::Kind::Rec));
    // Flag 1 selects the right branch's realizer.
    Term concrete = subst_term(r, "w", parse_term("((star, (star, S(S 0))), S 0)"));
    EXPECT_EQ(normalize_term({}, concrete), parse_term("(star, S(S 0))"));
    concrete = subst_term(r, "w", parse_term("((star, (star, S(S 0))), 0)"));
    EXPECT_EQ(normalize_term({}, concrete), parse_term("(star, 0)"));
}

TEST(Extract, DestructsExistentialWitness) {
    Context ctx;
    ctx.assume("e", parse_formula("exists y:nat. P(y)"));
    ctx.assume("g", parse_formula("forall y:nat. P(y) -> P(S y)"));
    Derivation d = derive(ctx, "dest e as [z, a] in [S z, g @ z a]", "exists y:nat. P(y)");
    ExtractionEnv env;
    Context tctx;
    env.bind("e", "we", parse_formula("exists y:nat. P(y)"), tctx);
    env.bind("g", "wg", parse_formula("forall y:nat. P(y) -> P(S y)"), tctx);
    Term r = extract_mr(d, env);
    EXPECT_EQ(infer_term_type(tctx, r), parse_type("unit * nat"));
    Term concrete = subst_term(subst_term(r, "we", parse_term("(star, S 0)")), "wg",
                               parse_term("fun (n:nat) => fun (u:unit) => u"));
    EXPECT_EQ(normalize_term({}, concrete), parse_term("(star, S(S 0))"));
}

TEST(Extract, EfqGivesDummy) {
    Context ctx;
    ctx.assume("b", parse_formula("bot"));
    Derivation d = derive(ctx, "efq b", "exists y:nat. P(y)");
    EXPECT_EQ(extract_mr(d, {}), parse_term("(star, 0)"));
}

TEST(Extract, Errors) {
    Context ctx;
    ctx.assume("h", parse_formula("P(0)"));
    ctx.assume("k", parse_formula("~P(0)"));
    Derivation plain = derive(ctx, "h", "P(0)");
    try {
        extract_mr(plain, {});
        FAIL();
    } catch (const ExtractError& e) {
        EXPECT_EQ(e.kind(), ExtractError::Kind::UnmappedHypothesis);
    }
    ExtractionEnv dns;
    dns.unrealizable.insert("h");
    try {
        extract_mr(plain, dns);
        FAIL();
    } catch (const ExtractError& e) {
        EXPECT_EQ(e.kind(), ExtractError::Kind::UnrealizableAxiom);
    }
    Derivation ctl = derive(ctx, "reset (k h)", "bot");
    try {
        extract_mr(ctl, {});
        FAIL();
    } catch (const ExtractError& e) {
        EXPECT_EQ(e.kind(), ExtractError::Kind::ControlNodePresent);
    }
}

TEST(Extract, RealizerNamesAvoidTermVariables) {
    // The hypothesis a and the bound variable a share a name.
    Derivation d = derive({}, "fun a => tfun a => a", "P(0) -> forall a:nat. P(0)");
    Term r = extract_mr(d, {});
    EXPECT_EQ(infer_term_type({}, r), parse_type("unit -> nat -> unit"));
    EXPECT_NE(r.body().body(), var("a"));
}

TEST(Choice, RealizerSortAndBehaviour) {
    Formula a = parse_formula("Q(x, y)");
    Term r = ac_realizer(Type::nat(), Type::nat(), a);
    EXPECT_EQ(infer_term_type({}, r), parse_type("(nat -> unit * nat) -> (nat -> unit) * (nat -> nat)"));
    Formula ac = parse_formula("(forall x:nat. exists y:nat. Q(x, y)) -> exists f:nat -> nat. forall x:nat. Q(x, f x)");
    EXPECT_EQ(infer_term_type({}, r), mr_type(ac));
    Term applied = app(r, parse_term("fun (n:nat) => (star, S n)"));
    Term f = normalize_term({}, app(proj2(applied), numeral(2)));
    EXPECT_EQ(f, numeral(3));
}

TEST(Induction, RealizerSortAndBehaviour) {
    Formula a = parse_formula("exists y:nat. Q(n, y)");
    Term r = induction_realizer(a, "n");
    Formula ind = parse_formula(
        "(exists y:nat. Q(0, y)) -> (forall n:nat. (exists y:nat. Q(n, y)) -> exists y:nat. Q(S n, y)) -> "
        "forall n:nat. exists y:nat. Q(n, y)");
    EXPECT_EQ(infer_term_type({}, r), mr_type(ind));
    Term run = app(r, {parse_term("(star, 0)"), parse_term("fun (n:nat) => fun (p:unit * nat) => (star, S (S p.2))"),
                       numeral(3)});
    EXPECT_EQ(normalize_term({}, run), parse_term("(star, S(S(S(S(S(S 0))))))"));
}

// --- realizer sort law -------------------------------------------------------

TEST(ExtractLaw, RealizerHasRealizerSort) {
    gen::Rng rng(7);
    gen::DerivationGen g(rng);
    Context ctx = gen::DerivationGen::context();
    ExtractionEnv env;
    Context tctx;
    int i = 0;
    for (const auto& [h, f] : ctx.hyps) env.bind(h, "w" + std::to_string(i++), f, tctx);
    std::map<std::string, int> rules;
    for (int n = 0; n < 200; ++n) {
        Formula goal = g.goal(3);
        Proof p = g.prove(ctx, goal, 5);
        CheckReport rep = check_proof(gen::DerivationGen::signature(), ctx, Annotation::Plain, p, goal);
        ASSERT_TRUE(rep.accepted) << to_string(p) << " : " << to_string(goal) << "\n"
                                  << rep.error->path << " " << to_string(rep.error->kind);
        std::vector<const Derivation*> stack{&*rep.derivation};
        while (!stack.empty()) {
            const Derivation* d = stack.back();
            stack.pop_back();
            ++rules[d->rule];
            for (const auto& q : d->premises) stack.push_back(&q);
        }
        Term r = extract_mr(*rep.derivation, env);
        ASSERT_EQ(infer_term_type(tctx, r), mr_type(goal)) << to_string(p) << "\n" << to_string(r);
        // Extraction output stays well-sorted through normalization.
        EXPECT_EQ(infer_term_type(tctx, normalize_term(tctx, r)), mr_type(goal));
    }
    for (const char* rule : {"Ax", "AndI", "AndE1", "OrI1", "OrI2", "OrE", "ImpI", "ImpE", "ImpE-redex", "AllI",
                             "AllE", "ExI", "ExE", "BotE", "Ascribe"})
        EXPECT_GT(rules[rule], 0) << rule;
}

} // namespace
} // namespace dnsk
