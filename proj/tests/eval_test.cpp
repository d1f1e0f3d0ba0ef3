// Copyright (c) 2026 The dnsk Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include <gtest/gtest.h>

#include "dnsk/eval.hpp"
#include "dnsk/parser.hpp"
#include "dnsk/printer.hpp"
#include "dnsk/subst.hpp"
#include "gen.hpp"

namespace dnsk {
namespace {

Term nf(const std::string& s) { return normalize_term({}, parse_term(s)); }

// --- System T -------------------------------------------------------------------

TEST(Normalize, TwoPlusTwo) {
    EXPECT_EQ(nf("rec[nat](S(S 0); S(S 0); fun (n:nat) => fun (r:nat) => S r)"), numeral(4));
}

TEST(Normalize, Beta) { EXPECT_EQ(nf("(fun (x:nat) => x) 0"), zero()); }

TEST(Normalize, Projection) { EXPECT_EQ(nf("(0, star).2"), star()); }

TEST(Normalize, UnderBinders) {
    EXPECT_EQ(to_string(nf("fun (f:nat -> nat) => (fun (x:nat) => f x) (S 0)")), "fun (f:nat -> nat) => f (S 0)");
}

TEST(Normalize, StuckRecursorOnVariable) {
    Context ctx;
    ctx.declare("n", Type::nat());
    Term t = parse_term("rec[nat](S n; 0; fun (m:nat) => fun (r:nat) => S r)");
    EXPECT_EQ(to_string(normalize_term(ctx, t)), "S rec[nat](n; 0; fun (m:nat) => fun (r:nat) => S r)");
}

TEST(Normalize, RefusesIllSorted) {
    try {
        nf("(0, star) 0");
        FAIL();
    } catch (const EvalError& e) {
        EXPECT_EQ(e.kind(), EvalError::Kind::IllSorted);
    }
}

TEST(Normalize, HigherTypeIteration) {
    // Iterated composition: rec builds fun x => S (S (S x)).
    Term t = parse_term(
        "rec[nat -> nat](3; fun (x:nat) => x; fun (n:nat) => fun (g:nat -> nat) => fun (x:nat) => S (g x)) 2");
    EXPECT_EQ(normalize_term({}, t), numeral(5));
}

TEST(NormalizeLaw, RandomReductionOrdersAgree) {
    gen::Rng rng(21);
    int nontrivial = 0;
    for (int i = 0; i < 300; ++i) {
        gen::Env env;
        Type ty = gen::type(rng, 1);
        Term t = gen::typed_term(rng, env, ty, 4);
        ASSERT_EQ(infer_term_type({}, t), ty) << to_string(t);
        Term want = normalize_term({}, t);
        Term cur = t;
        int steps = 0;
        for (auto rs = term_redexes(cur); !rs.empty() && steps < 5000; rs = term_redexes(cur), ++steps)
            cur = contract_term_at(cur, gen::pick(rng, rs));
        ASSERT_TRUE(term_redexes(cur).empty()) << to_string(t);
        EXPECT_TRUE(alpha_equal(cur, want)) << to_string(t) << "\n  " << to_string(cur) << "\n  " << to_string(want);
        if (steps > 0) ++nontrivial;
    }
    EXPECT_GT(nontrivial, 100);
}

// --- proof machine ----------------------------------------------------------------

NormalizeResult run(const std::string& p, std::size_t fuel = 100) {
    return normalize_proof(parse_proof(p), fuel, true);
}

TEST(Machine, Capture) {
    auto r = run("reset (f (shift k => k a))");
    ASSERT_EQ(r.status, NormalizeResult::Status::Done);
    ASSERT_EQ(r.steps, 4u);
    EXPECT_TRUE(alpha_equal(r.trace[0], parse_proof("reset ((fun x => reset (f x)) a)")));
    EXPECT_TRUE(alpha_equal(r.trace[1], parse_proof("reset (reset (f a))")));
    EXPECT_TRUE(alpha_equal(r.trace[2], parse_proof("reset (f a)")));
    EXPECT_TRUE(alpha_equal(r.result, parse_proof("f a")));
}

TEST(Machine, DiscardContinuation) {
    auto r = run("reset (shift k => a)");
    ASSERT_EQ(r.status, NormalizeResult::Status::Done);
    EXPECT_EQ(r.steps, 2u);
    EXPECT_TRUE(alpha_equal(r.trace[0], parse_proof("reset a")));
    EXPECT_EQ(r.result, hyp("a"));
}

TEST(Machine, ResetOfValue) {
    auto r = run("reset (fun b => b)");
    ASSERT_EQ(r.status, NormalizeResult::Status::Done);
    EXPECT_EQ(r.steps, 1u);
    EXPECT_EQ(r.result, parse_proof("fun b => b"));
}

TEST(Machine, Projections) {
    EXPECT_EQ(run("fst (p, q)").result, hyp("p"));
    EXPECT_EQ(run("snd (p, q)").result, hyp("q"));
}

TEST(Machine, Beta) { EXPECT_EQ(run("(fun a => a) q").result, hyp("q")); }

TEST(Machine, CaseOnInjection) {
    EXPECT_EQ(run("case (inl p) of a => a | b => b").result, hyp("p"));
    EXPECT_EQ(run("case (inr p) of a => f a | b => g b").result, parse_proof("g p"));
}

TEST(Machine, DestOnWitnessPair) {
    EXPECT_EQ(run("dest [S 0, p] as [x, a] in h @ x a").result, parse_proof("h @ (S 0) p"));
}

TEST(Machine, TermTwentyHalts) {
    auto r = run("(fun h => fun k => reset (k (tfun x => shift k' => (h @ x) k'))) h k");
    ASSERT_EQ(r.status, NormalizeResult::Status::Done);
    EXPECT_EQ(r.steps, 2u);
    EXPECT_TRUE(alpha_equal(r.result, parse_proof("reset (k (tfun x => shift k' => (h @ x) k'))")));
}

TEST(Machine, AscriptionsPersistThroughBeta) {
    auto r = run("(fun a => a : A -> A) q");
    EXPECT_EQ(r.result, parse_proof("((q : A) : A)"));
}

TEST(Machine, UndelimitedShiftIsStuck) {
    auto r = run("f (shift k => k a)");
    EXPECT_EQ(r.status, NormalizeResult::Status::Stuck);
    EXPECT_EQ(r.reason, "shift without an enclosing reset");
}

TEST(Machine, IllTypedEliminationIsStuck) {
    EXPECT_EQ(run("fst (fun a => a)").status, NormalizeResult::Status::Stuck);
}

TEST(Machine, FuelExhaustion) {
    // Self-application loops.
    auto r = run("(fun w => w w) (fun w => w w)", 25);
    EXPECT_EQ(r.status, NormalizeResult::Status::FuelExhausted);
    EXPECT_EQ(r.steps, 25u);
}

TEST(Machine, NestedResetDelimitsCapture) {
    // The inner reset bounds the continuation; g stays outside it.
    auto r = run("reset (g (reset (f (shift k => a))))");
    ASSERT_EQ(r.status, NormalizeResult::Status::Done);
    EXPECT_EQ(r.result, parse_proof("g a"));
}

TEST(Machine, PlugInvertsDecomposition) {
    Proof p = parse_proof("reset (g (reset (f (shift k => k (fst (a, b))))))");
    MachineConfig cfg = load(p);
    while (true) {
        StepResult s = step_proof(cfg);
        if (s.status != StepResult::Status::Stepped) break;
        // The focus is the contractum, sitting inside its frames.
        EXPECT_EQ(plug(MachineConfig{s.next.focus, s.next.frames}), plug(s.next));
        cfg = s.next;
    }
    EXPECT_TRUE(is_value(plug(cfg)));
}

TEST(MachineLaw, SubjectReductionOnGeneratedDerivations) {
    gen::Rng rng(11);
    gen::DerivationGen g(rng);
    Context ctx = gen::DerivationGen::context();
    Signature sig = gen::DerivationGen::signature();
    std::size_t steps = 0;
    for (int n = 0; n < 150; ++n) {
        Formula goal = g.goal(3);
        Proof p = g.prove(ctx, goal, 5);
        ASSERT_TRUE(check_proof(sig, ctx, Annotation::Plain, p, goal).accepted);
        NormalizeResult r = normalize_proof(p, 500, true);
        ASSERT_EQ(r.status, NormalizeResult::Status::Done) << to_string(p) << "\n" << r.reason;
        steps += r.steps;
        for (const auto& q : r.trace) {
            CheckReport c = check_proof(sig, ctx, Annotation::Plain, q, goal);
            ASSERT_TRUE(c.accepted) << to_string(p) << "\n  ->  " << to_string(q) << "\n"
                                    << c.error->path << " " << to_string(c.error->kind);
        }
    }
    EXPECT_GT(steps, 50u);
}

// --- bounded formulas ---------------------------------------------------------------

Signature sig() {
    Signature s;
    s.declare("P", {Type::nat()});
    s.declare("Q", {Type::nat(), Type::nat()});
    return s;
}

TEST(Bounded, Reflexivity) {
    EXPECT_TRUE(eval_formula_bounded(sig(), parse_formula("forall x:nat. x = x"), 2, {}));
}

TEST(Bounded, ExistsAgainstKurodaShape) {
    PredTables tables{{"P", {{1}}}};
    EXPECT_TRUE(eval_formula_bounded(sig(), parse_formula("exists x:nat. P(x)"), 3, tables));
    EXPECT_TRUE(eval_formula_bounded(sig(), parse_formula("~~exists x:nat. P(x)"), 3, tables));
}

TEST(Bounded, Lpo) {
    // f is the constant-zero function, written inline.
    Formula lpo = parse_formula("(exists n:nat. (fun (m:nat) => 0) n = 1) \\/ forall n:nat. (fun (m:nat) => 0) n = 0");
    EXPECT_TRUE(eval_formula_bounded(sig(), lpo, 3, {}));
}

TEST(Bounded, OutOfRangeClamp) {
    PredTables tables{{"P", {{0}, {1}, {2}}}};
    EXPECT_FALSE(eval_formula_bounded(sig(), parse_formula("P(3)"), 3, tables));
    EXPECT_FALSE(eval_formula_bounded(sig(), parse_formula("3 = 3"), 3, tables));
    EXPECT_TRUE(eval_formula_bounded(sig(), parse_formula("~forall x:nat. P(S x)"), 3, tables));
}

TEST(Bounded, Errors) {
    try {
        eval_formula_bounded(sig(), parse_formula("forall f:nat -> nat. f 0 = 0"), 2, {});
        FAIL();
    } catch (const EvalError& e) {
        EXPECT_EQ(e.kind(), EvalError::Kind::HigherSortQuantifier);
    }
    try {
        eval_formula_bounded(sig(), parse_formula("P(0)"), 2, {});
        FAIL();
    } catch (const EvalError& e) {
        EXPECT_EQ(e.kind(), EvalError::Kind::MissingPredTable);
    }
}

} // namespace
} // namespace dnsk
