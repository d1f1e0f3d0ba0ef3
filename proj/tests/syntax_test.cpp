// Copyright (c) 2026 The dnsk Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include <gtest/gtest.h>

#include "dnsk/parser.hpp"
#include "dnsk/printer.hpp"
#include "dnsk/subst.hpp"
#include "gen.hpp"

namespace dnsk {
namespace {

// --- substitution -------------------------------------------------------------

TEST(Subst, RenamesBinderToAvoidCapture) {
    Term body = parse_term("fun (y:nat) => x");
    Term got = subst_term(body, "x", var("y"));
    EXPECT_EQ(to_string(got), "fun (y':nat) => y");
}

TEST(Subst, ReplacesVariable) { EXPECT_EQ(subst_term(var("x"), "x", succ(zero())), succ(zero())); }

TEST(Subst, IsHomomorphic) {
    Term body = parse_term("(x, x.1)");
    Term r = pair(zero(), star());
    EXPECT_EQ(subst_term(body, "x", r), pair(r, proj1(r)));
}

TEST(Subst, FormulaInstance) {
    EXPECT_EQ(subst_formula(parse_formula("P(x)"), "x", zero()), parse_formula("P(0)"));
}

TEST(Subst, BoundOccurrenceUntouched) {
    Formula a = parse_formula("forall x:nat. P(x)");
    EXPECT_EQ(subst_formula(a, "x", var("t")), a);
}

TEST(Subst, FormulaRenamesQuantifier) {
    Formula got = subst_formula(parse_formula("exists y:nat. y = x"), "x", succ(var("y")));
    EXPECT_EQ(to_string(got), "exists y':nat. y' = S y");
}

TEST(Subst, HypothesisSubstitutionAvoidsCapture) {
    // Substituting b for a under a binder named b must rename that binder.
    Proof p = parse_proof("fun b => a b");
    Proof got = subst_hyp(p, "a", hyp("b"));
    EXPECT_EQ(to_string(got), "fun b' => b b'");
}

TEST(Subst, TermSubstitutionInProofAvoidsTfunCapture) {
    Proof p = parse_proof("tfun y => h @ x");
    Proof got = subst_term_in_proof(p, "x", var("y"));
    EXPECT_EQ(to_string(got), "tfun y' => h @ y");
}

TEST(Alpha, BindersCompareUpToRenaming) {
    EXPECT_TRUE(alpha_equal(parse_term("fun (x:nat) => x"), parse_term("fun (y:nat) => y")));
    EXPECT_FALSE(alpha_equal(parse_term("fun (x:nat) => y"), parse_term("fun (y:nat) => y")));
    EXPECT_TRUE(alpha_equal(parse_formula("forall x:nat. exists y:nat. Q(x, y)"),
                            parse_formula("forall u:nat. exists v:nat. Q(u, v)")));
    EXPECT_TRUE(alpha_equal(parse_proof("fun a => dest a as [x, e] in e"),
                            parse_proof("fun b => dest b as [z, f] in f")));
    EXPECT_FALSE(alpha_equal(parse_proof("fun a => fun b => a"), parse_proof("fun a => fun b => b")));
}

// --- parser -------------------------------------------------------------------

TEST(Parse, ArrowType) { EXPECT_EQ(parse_type("nat -> nat"), Type::arrow(Type::nat(), Type::nat())); }

TEST(Parse, TypePrecedence) {
    EXPECT_EQ(parse_type("nat * unit -> nat -> nat"),
              Type::arrow(Type::prod(Type::nat(), Type::unit()), Type::arrow(Type::nat(), Type::nat())));
}

TEST(Parse, NegationSugar) {
    Formula want = forall("x", Type::nat(), imp(imp(pred("P", {var("x")}), bot()), bot()));
    EXPECT_EQ(parse_formula("forall x:nat. ~~P(x)"), want);
}

TEST(Parse, ShiftBody) {
    Proof want = shift("k", papp(tapp(hyp("h"), var("x")), hyp("k")));
    EXPECT_EQ(parse_proof("shift k => h @ x k"), want);
}

TEST(Parse, NumeralsAreSuccessorChains) { EXPECT_EQ(parse_term("2"), succ(succ(zero()))); }

TEST(Parse, RejectsHigherSortEquality) {
    EXPECT_THROW(parse_formula("(fun (x:nat) => x) = 0"), ParseError);
    EXPECT_THROW(parse_formula("star = star"), ParseError);
    EXPECT_THROW(parse_formula("(0, 0) = 0"), ParseError);
}

TEST(Parse, ReportsLineAndColumn) {
    try {
        parse_formula("P(x) /\\\n  )");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2);
        EXPECT_EQ(e.column(), 3);
    }
}

TEST(Parse, UnknownPredicateIsNotAParseError) { EXPECT_NO_THROW(parse_formula("Undeclared(0)")); }

TEST(Parse, TermTwentyShape) {
    Proof p = parse_proof("fun h => fun k => reset (k (tfun x => shift k' => (h @ x) k'))");
    ASSERT_TRUE(p.is(Proof::Kind::Lam));
    const Proof& r = p.child(0).child(0);
    ASSERT_TRUE(r.is(Proof::Kind::Reset));
    EXPECT_TRUE(r.child(0).is(Proof::Kind::App));
    EXPECT_TRUE(r.child(0).child(1).is(Proof::Kind::TLam));
}

TEST(Parse, DispatchByCategory) {
    EXPECT_TRUE(std::holds_alternative<Type>(parse("unit", Category::Type)));
    EXPECT_TRUE(std::holds_alternative<Proof>(parse("efq a", Category::Proof)));
    EXPECT_THROW(parse("nat nat", Category::Type), ParseError);
}

// --- printer ------------------------------------------------------------------

TEST(Print, Bot) { EXPECT_EQ(to_string(bot()), "bot"); }

TEST(Print, NegationSugar) { EXPECT_EQ(to_string(neg(pred("P"))), "~P"); }

TEST(Print, NestedProjections) { EXPECT_EQ(to_string(proj1(proj1(var("t")))), "t.1.1"); }

TEST(Print, Canonical) {
    const char* samples[] = {
        "(forall x:nat. ~~P(x)) -> ~~forall x:nat. P(x)",
        "fun h => fun k => reset (k (tfun x => shift k' => h @ x k'))",
        "rec[nat](S (S 0); S (S 0); fun (n:nat) => fun (r:nat) => S r)",
        "case a of b => inl b | c => inr c",
    };
    for (const char* s : samples) {
        std::string once;
        if (std::string_view(s).starts_with("(forall"))
            once = to_string(parse_formula(s));
        else if (std::string_view(s).starts_with("rec"))
            once = to_string(parse_term(s));
        else
            once = to_string(parse_proof(s));
        EXPECT_EQ(once, s);
    }
}

// --- properties ---------------------------------------------------------------

TEST(RoundTrip, Types) {
    gen::Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        Type t = gen::type(rng, 4);
        EXPECT_EQ(parse_type(to_string(t)), t) << to_string(t);
    }
}

TEST(RoundTrip, Terms) {
    gen::Rng rng(12);
    for (int i = 0; i < 500; ++i) {
        Term t = gen::any_term(rng, 5);
        EXPECT_TRUE(alpha_equal(parse_term(to_string(t)), t)) << to_string(t);
    }
}

TEST(RoundTrip, Formulas) {
    gen::Rng rng(13);
    for (int i = 0; i < 500; ++i) {
        Formula a = gen::any_formula(rng, 5);
        EXPECT_TRUE(alpha_equal(parse_formula(to_string(a)), a)) << to_string(a);
    }
}

TEST(RoundTrip, Proofs) {
    gen::Rng rng(14);
    for (int i = 0; i < 500; ++i) {
        Proof p = gen::any_proof(rng, 5);
        EXPECT_TRUE(alpha_equal(parse_proof(to_string(p)), p)) << to_string(p);
    }
}

TEST(SubstLaw, IdentitySubstitution) {
    gen::Rng rng(15);
    for (int i = 0; i < 300; ++i) {
        Formula a = gen::any_formula(rng, 4);
        EXPECT_TRUE(alpha_equal(subst_formula(a, "x", var("x")), a)) << to_string(a);
    }
}

TEST(SubstLaw, SubstitutionsCommute) {
    gen::Rng rng(16);
    int checked = 0;
    while (checked < 300) {
        Formula a = gen::any_formula(rng, 4);
        Term s = gen::any_term(rng, 2);
        Term t = gen::any_term(rng, 2);
        if (free_vars(t).count("x")) continue;
        Formula lhs = subst_formula(subst_formula(a, "x", s), "y", t);
        Formula rhs = subst_formula(subst_formula(a, "y", t), "x", subst_term(s, "y", t));
        EXPECT_TRUE(alpha_equal(lhs, rhs)) << to_string(a) << " / " << to_string(s) << " / " << to_string(t);
        ++checked;
    }
}

TEST(FreshNames, DeterministicAndAvoiding) {
    FreshNames a({"x0"});
    EXPECT_EQ(a.next("x"), "x1");
    EXPECT_EQ(a.next("x"), "x2");
    FreshNames b({"x0"});
    EXPECT_EQ(b.next("x"), "x1");
    EXPECT_EQ(prime_fresh("y", {"y", "y'"}), "y''");
}

} // namespace
} // namespace dnsk
