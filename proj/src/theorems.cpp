// Copyright (c) 2026 The dnsk Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "dnsk/theorems.hpp"

#include <array>

#include "dnsk/parser.hpp"
#include "dnsk/printer.hpp"
#include "dnsk/subst.hpp"
#include "dnsk/translate.hpp"

namespace dnsk {

namespace {

constexpr std::array<std::pair<Schema, std::string_view>, 8> kSchemaNames{{
    {Schema::DNS, "DNS"},
    {Schema::AC, "AC"},
    {Schema::IND, "IND"},
    {Schema::REFL, "REFL"},
    {Schema::SYM, "SYM"},
    {Schema::TRANS, "TRANS"},
    {Schema::SUCC_INJ, "SUCC_INJ"},
    {Schema::ZERO_NE_SUCC, "ZERO_NE_SUCC"},
}};

void need(Schema s, const SchemaArgs& a, std::size_t sorts, bool body, std::size_t vars, std::size_t terms) {
    if (a.sorts.size() != sorts || a.body.has_value() != body || a.vars.size() != vars || a.terms.size() != terms)
        throw SchemaError(std::string(to_string(s)) + ": expected " + std::to_string(sorts) + " sort(s), " +
                          (body ? "a" : "no") + " body, " + std::to_string(vars) + " variable(s), " +
                          std::to_string(terms) + " term(s)");
}

Formula nn(Formula a) { return neg(neg(std::move(a))); }

Formula instance(Schema s, const SchemaArgs& a) {
    switch (s) {
    case Schema::DNS: {
        need(s, a, 1, true, 1, 0);
        const Name& x = a.vars[0];
        const Type& rho = a.sorts[0];
        return imp(forall(x, rho, nn(*a.body)), nn(forall(x, rho, *a.body)));
    }
    case Schema::AC: {
        need(s, a, 2, true, 3, 0);
        const Name &x = a.vars[0], &y = a.vars[1], &f = a.vars[2];
        const Type &rho = a.sorts[0], &sigma = a.sorts[1];
        if (free_vars(*a.body).count(f)) throw SchemaError("AC: choice function " + f + " occurs free in the body");
        Formula chosen = subst_formula(*a.body, y, app(var(f), var(x)));
        return imp(forall(x, rho, exists(y, sigma, *a.body)),
                   exists(f, Type::arrow(rho, sigma), forall(x, rho, chosen)));
    }
    case Schema::IND: {
        need(s, a, 0, true, 1, 0);
        const Name& n = a.vars[0];
        const Formula& b = *a.body;
        return imp(subst_formula(b, n, zero()),
                   imp(forall(n, Type::nat(), imp(b, subst_formula(b, n, succ(var(n))))), forall(n, Type::nat(), b)));
    }
    case Schema::REFL:
        need(s, a, 0, false, 0, 1);
        return eq(a.terms[0], a.terms[0]);
    case Schema::SYM:
        need(s, a, 0, false, 0, 2);
        return imp(eq(a.terms[0], a.terms[1]), eq(a.terms[1], a.terms[0]));
    case Schema::TRANS:
        need(s, a, 0, false, 0, 3);
        return imp(eq(a.terms[0], a.terms[1]), imp(eq(a.terms[1], a.terms[2]), eq(a.terms[0], a.terms[2])));
    case Schema::SUCC_INJ:
        need(s, a, 0, false, 0, 2);
        return imp(eq(succ(a.terms[0]), succ(a.terms[1])), eq(a.terms[0], a.terms[1]));
    case Schema::ZERO_NE_SUCC:
        need(s, a, 0, false, 0, 1);
        return neg(eq(zero(), succ(a.terms[0])));
    }
    throw SchemaError("unknown schema");
}

} // namespace

std::string_view to_string(Schema s) {
    for (const auto& [k, n] : kSchemaNames)
        if (k == s) return n;
    return "?";
}

std::optional<Schema> schema_from_string(std::string_view s) {
    for (const auto& [k, n] : kSchemaNames)
        if (n == s) return k;
    return std::nullopt;
}

Formula axiom_instance(const Signature& sig, const Context& ctx, Schema s, const SchemaArgs& args) {
    Formula f = instance(s, args);
    check_formula(sig, ctx, f);
    return f;
}

std::optional<Term> axiom_realizer(Schema s, const SchemaArgs& a) {
    Type u = Type::unit();
    switch (s) {
    case Schema::DNS:
        return std::nullopt;
    case Schema::AC:
        need(s, a, 2, true, 3, 0);
        return ac_realizer(a.sorts[0], a.sorts[1], *a.body);
    case Schema::IND:
        need(s, a, 0, true, 1, 0);
        return induction_realizer(*a.body, a.vars[0]);
    case Schema::REFL:
        return star();
    case Schema::SYM:
    case Schema::SUCC_INJ:
        return lam("u", u, var("u"));
    case Schema::TRANS:
        return lam("u", u, lam("v", u, star()));
    case Schema::ZERO_NE_SUCC:
        return lam("u", u, star());
    }
    return std::nullopt;
}

// --- library ---------------------------------------------------------------------------

Signature library_signature() {
    Signature s;
    s.declare("P", {Type::nat()});
    s.declare("Q", {Type::nat(), Type::nat()});
    s.declare("T", {Type::nat(), Type::nat(), Type::nat()});
    s.declare("CT", {});
    return s;
}

namespace {

constexpr const char* kDnsArrow = "fun h => fun k => reset (k (tfun x => shift k' => (h @ x) k'))";
constexpr const char* kDnsContra = "fun k => fun h => reset (k (tfun x => shift k' => (h @ x) k'))";
constexpr const char* kDnsLem = "fun k => reset (k (tfun x => shift k' => k' (inr (fun a => k' (inl a)))))";
constexpr const char* kDnsConj = "fun h => reset ((snd h) (tfun x => shift k => ((fst h) @ x) k))";
constexpr const char* kAcBot =
    "fun a => fun k => d (tfun x => fun k' => (a @ x) (fun a' => dest a' as [x', e] in k' [x', fun j => j e])) "
    "(fun b => k (c b))";
constexpr const char* kMrDnsCore = "fun y => fun q => d y (fun v => q (c v))";
constexpr const char* kRefute =
    "fun p => reset (r p (tfun x => shift k' => k' (inr (fun a => k' (inl a)))))";
constexpr const char* kNnLpo = "fun k => reset (k (shift k' => k' (inr (fun a => k' (inl a)))))";
constexpr const char* kHp = "forall x:nat. (exists y:nat. T(x, x, y)) \\/ ~exists y:nat. T(x, x, y)";

TheoremEntry entry(std::string name, std::string description, const char* proof, const std::string& goal,
                   Context ctx = {}, std::vector<AxiomUse> axioms = {}) {
    Signature sig = library_signature();
    for (const auto& ax : axioms) ctx.assume(ax.hyp, axiom_instance(sig, ctx, ax.schema, ax.args));
    return TheoremEntry{std::move(name),     std::move(description), std::move(ctx),      std::move(axioms),
                        Annotation::Plain,   parse_proof(proof),     parse_formula(goal)};
}

// (∀n ¬¬A) unfolded by mr at y, and (¬¬∀n A) unfolded at a realizer s,
// bridged to their simplified readings; A(n) := ∃y. Q(n, y).
Formula dns_parameter() { return parse_formula("exists y:nat. Q(n, y)"); }

std::vector<TheoremEntry> mr_bridges() {
    Signature sig = library_signature();
    Formula a = dns_parameter();
    Formula premise = forall("n", Type::nat(), neg(neg(a)));
    Formula conclusion = neg(neg(forall("n", Type::nat(), a)));
    Context cy;
    cy.declare("y", mr_type(premise));
    Context cs;
    cs.declare("s", mr_type(conclusion));
    Formula mr_premise = mr_formula(sig, cy, var("y"), premise);
    Formula mr_conclusion = mr_formula(sig, cs, var("s"), conclusion);
    Formula simple_premise = parse_formula("forall n:nat. ~~exists u:unit * nat. Q(n, u.2)");
    Formula simple_conclusion = parse_formula("~~exists r:nat -> unit * nat. forall n:nat. Q(n, (r n).2)");

    Type neg_a = mr_type(neg(a));
    Type neg_all = mr_type(neg(forall("n", Type::nat(), a)));
    std::string dz = "fun (w:" + to_string(neg_a.left()) + ") => star";
    std::string dq = "fun (w:" + to_string(neg_all.left()) + ") => star";

    std::vector<TheoremEntry> out;
    auto add = [&](std::string name, std::string desc, const std::string& proof, Formula goal, Context ctx) {
        out.push_back(TheoremEntry{std::move(name), std::move(desc), std::move(ctx), {}, Annotation::Plain,
                                   parse_proof(proof), std::move(goal)});
    };
    add("mr_premise_to_simplified", "mr-unfolded DNS premise implies its simplified reading",
        "fun h => tfun n => fun k => (h @ n @ (" + dz + ")) (tfun u => fun p => k [u, p])", imp(mr_premise, simple_premise),
        cy);
    add("mr_simplified_to_premise", "simplified DNS premise implies its mr-unfolding",
        "fun h => tfun n => tfun z => fun g => (h @ n) (fun e => dest e as [u, p] in (g @ u) p)",
        imp(simple_premise, mr_premise), cy);
    add("mr_conclusion_to_simplified", "mr-unfolded DNS conclusion implies its simplified reading",
        "fun h => fun k => (h @ (" + dq + ")) (tfun r => fun p => k [r, p])", imp(mr_conclusion, simple_conclusion), cs);
    add("mr_simplified_to_conclusion", "simplified DNS conclusion implies its mr-unfolding",
        "fun h => tfun q => fun g => h (fun e => dest e as [r, p] in (g @ r) p)", imp(simple_conclusion, mr_conclusion), cs);
    return out;
}

} // namespace

std::vector<TheoremEntry> build_library() {
    std::vector<TheoremEntry> lib;
    lib.push_back(entry("dns_arrow", "double-negation shift, implicational form", kDnsArrow,
                        "(forall x:nat. ~~P(x)) -> ~~forall x:nat. P(x)"));
    lib.push_back(entry("dns_arrow_higher", "double-negation shift at a function sort", kDnsArrow,
                        "(forall x:nat -> nat. ~~P(x 0)) -> ~~forall x:nat -> nat. P(x 0)"));
    lib.push_back(entry("dns_contra", "double-negation shift, contrapositive form", kDnsContra,
                        "~(forall x:nat. P(x)) -> ~forall x:nat. ~~P(x)"));
    lib.push_back(entry("dns_lem", "double-negation shift, pointwise excluded middle form", kDnsLem,
                        "~~forall x:nat. P(x) \\/ ~P(x)"));
    lib.push_back(entry("dns_conj", "double-negation shift, negated conjunction form", kDnsConj,
                        "~((forall x:nat. ~~P(x)) /\\ ~forall x:nat. P(x))"));

    {
        SchemaArgs dns{{Type::nat()}, parse_formula("exists y:nat. ~~Q(x, y)"), {"x"}, {}};
        SchemaArgs ac{{Type::nat(), Type::nat()}, parse_formula("~~Q(x, y)"), {"x", "y", "f"}, {}};
        lib.push_back(entry("ac_bot", "choice for the inner double-negation translation", kAcBot,
                            "(forall x:nat. ~~exists y:nat. Q(x, y)) -> ~~exists f:nat -> nat. forall x:nat. "
                            "~~Q(x, f x)",
                            {}, {{"d", Schema::DNS, dns}, {"c", Schema::AC, ac}}));
    }
    {
        Type u = parse_type("unit * nat");
        SchemaArgs dns{{Type::nat()}, parse_formula("exists u:unit * nat. Q(n, u.2)"), {"n"}, {}};
        SchemaArgs ac{{Type::nat(), u}, parse_formula("Q(n, u.2)"), {"n", "u", "r"}, {}};
        lib.push_back(entry("mr_dns_core", "realizability of double-negation shift, pivotal implication",
                            kMrDnsCore,
                            "(forall n:nat. ~~exists u:unit * nat. Q(n, u.2)) -> "
                            "~~exists r:nat -> unit * nat. forall n:nat. Q(n, (r n).2)",
                            {}, {{"d", Schema::DNS, dns}, {"c", Schema::AC, ac}}));
    }
    lib.push_back(entry("nn_hp", "double negation of the halting problem's decidability", kDnsLem,
                        std::string("~~") + kHp));
    {
        Context ctx;
        ctx.declare("f", parse_type("nat -> nat"));
        lib.push_back(entry("nn_lpo", "double negation of the limited principle of omniscience", kNnLpo,
                            "~~((exists n:nat. f n = 1) \\/ ~exists n:nat. f n = 1)", ctx));
    }
    {
        Context ctx;
        ctx.assume("r", parse_formula(std::string("CT -> ~") + kHp));
        lib.push_back(entry("refute_via_hp", "refutation of any property implying the halting problem's undecidability",
                            kRefute, "~CT", ctx));
    }
    for (auto& e : mr_bridges()) lib.push_back(std::move(e));
    return lib;
}

const TheoremEntry* find_entry(const std::vector<TheoremEntry>& lib, std::string_view name) {
    for (const auto& e : lib)
        if (e.name == name) return &e;
    return nullptr;
}

CheckReport check_entry(const TheoremEntry& e) {
    return check_proof(library_signature(), e.context, e.annotation, e.proof, e.goal);
}

namespace {

NameSet entry_names(const TheoremEntry& e) {
    NameSet used;
    collect_names(e.proof, used);
    collect_names(e.goal, used);
    for (const auto& [x, _] : e.context.term_vars) used.insert(x);
    for (const auto& [h, f] : e.context.hyps) {
        used.insert(h);
        collect_names(f, used);
    }
    return used;
}

ExtractionEnv make_env(const TheoremEntry& e, Context& rctx, bool opaque) {
    ExtractionEnv env;
    FreshNames fresh(entry_names(e));
    for (const auto& [x, t] : e.context.term_vars) rctx.declare(x, t);
    for (const auto& [h, f] : e.context.hyps) {
        const AxiomUse* ax = nullptr;
        for (const auto& a : e.axioms)
            if (a.hyp == h) ax = &a;
        if (ax && !opaque) {
            if (auto r = axiom_realizer(ax->schema, ax->args))
                env.axiom_realizers.emplace(h, *r);
            else
                env.unrealizable.insert(h);
            continue;
        }
        env.bind(h, fresh.next("w"), f, rctx);
    }
    return env;
}

} // namespace

ExtractionEnv extraction_env(const TheoremEntry& e, Context& realizer_ctx) { return make_env(e, realizer_ctx, false); }

ExtractionEnv opaque_env(const TheoremEntry& e, Context& realizer_ctx) { return make_env(e, realizer_ctx, true); }

Saturated saturate(const TheoremEntry& e) {
    FreshNames fresh(entry_names(e));
    Saturated s{e.context, e.proof, e.goal};
    for (;;) {
        if (s.goal.is(Formula::Kind::Imp)) {
            Name h = fresh.next("i");
            s.context.assume(h, s.goal.lhs());
            s.proof = papp(ascribe(s.proof, s.goal), hyp(h));
            s.goal = s.goal.rhs();
        } else if (s.goal.is(Formula::Kind::Forall)) {
            Name x = fresh.next("v");
            s.context.declare(x, s.goal.sort());
            s.proof = tapp(ascribe(s.proof, s.goal), var(x));
            s.goal = subst_formula(s.goal.body(), s.goal.name(), var(x));
        } else {
            return s;
        }
    }
}

// --- mutants -------------------------------------------------------------------------

std::vector<Mutant> build_mutants() {
    using K = CheckErrorKind;
    auto m = [](std::string name, std::string base, std::string change, const std::string& proof, K k) {
        return Mutant{std::move(name), std::move(base), std::move(change), parse_proof(proof), k};
    };
    return {
        m("dns_lem_swap_injections", "dns_lem", "swap inl and inr",
          "fun k => reset (k (tfun x => shift k' => k' (inl (fun a => k' (inr a)))))", K::FormulaMismatch),
        m("dns_arrow_no_reset", "dns_arrow", "delete the reset",
          "fun h => fun k => k (tfun x => shift k' => (h @ x) k')", K::AnnotationViolation),
        m("dns_arrow_shift_outside", "dns_arrow", "move the shift outside every reset",
          "fun h => fun k => shift k' => reset (k (tfun x => (h @ x) k'))", K::AnnotationViolation),
        m("dns_arrow_wrong_continuation", "dns_arrow", "pass k instead of k'",
          "fun h => fun k => reset (k (tfun x => shift k' => (h @ x) k))", K::FormulaMismatch),
        m("dns_arrow_no_instantiation", "dns_arrow", "drop the instantiation at x",
          "fun h => fun k => reset (k (tfun x => shift k' => h k'))", K::FormulaMismatch),
        m("dns_arrow_reset_too_early", "dns_arrow", "reset around a non-bot goal",
          "fun h => reset (fun k => k (tfun x => shift k' => (h @ x) k'))", K::ResetGoalNotBot),
        m("dns_contra_no_reset", "dns_contra", "delete the reset",
          "fun k => fun h => k (tfun x => shift k' => (h @ x) k')", K::AnnotationViolation),
        m("dns_lem_no_reset", "dns_lem", "delete the reset",
          "fun k => k (tfun x => shift k' => k' (inr (fun a => k' (inl a))))", K::AnnotationViolation),
        m("dns_conj_swap_projections", "dns_conj", "swap fst and snd",
          "fun h => reset ((fst h) (tfun x => shift k => ((snd h) @ x) k))", K::FormulaMismatch),
        m("dns_conj_no_reset", "dns_conj", "delete the reset",
          "fun h => (snd h) (tfun x => shift k => ((fst h) @ x) k)", K::AnnotationViolation),
        m("ac_bot_shadowed_binder", "ac_bot", "rebind x inside dest, as displayed",
          "fun a => fun k => d (tfun x => fun k' => (a @ x) (fun a' => dest a' as [x, e] in k' [x, fun j => j e])) "
          "(fun b => k (c b))",
          K::FreshnessViolation),
        m("ac_bot_bad_witness", "ac_bot", "use star as the witness",
          "fun a => fun k => d (tfun x => fun k' => (a @ x) (fun a' => dest a' as [x', e] in k' [star, fun j => j e])) "
          "(fun b => k (c b))",
          K::SortMismatch),
        m("mr_dns_core_swap_axioms", "mr_dns_core", "use d where c is needed", "fun y => fun q => d y (fun v => q (d v))",
          K::FormulaMismatch),
        m("nn_hp_unbound_continuation", "nn_hp", "refer to an unbound continuation",
          "fun k => reset (k (tfun x => shift k' => k'' (inr (fun a => k' (inl a)))))", K::UnboundHypothesis),
        m("refute_via_hp_unapplied", "refute_via_hp", "omit the argument p of r, as displayed",
          "fun p => reset (r (tfun x => shift k' => k' (inr (fun a => k' (inl a)))))", K::FormulaMismatch),
    };
}

} // namespace dnsk
