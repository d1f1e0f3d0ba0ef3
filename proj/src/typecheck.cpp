// Copyright (c) 2026 The dnsk Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "dnsk/typecheck.hpp"

#include <algorithm>

#include "dnsk/printer.hpp"

namespace dnsk {

using TK = Term::Kind;
using FK = Formula::Kind;
using PK = Proof::Kind;

std::string_view to_string(Annotation a) { return a == Annotation::Plain ? "plain" : "bot"; }

// --- Context ------------------------------------------------------------------

Context& Context::declare(const Name& x, Type sort) {
    term_vars.insert_or_assign(x, std::move(sort));
    return *this;
}

Context& Context::assume(const Name& a, Formula f) {
    std::erase_if(hyps, [&](const auto& h) { return h.first == a; });
    hyps.emplace_back(a, std::move(f));
    return *this;
}

const Type* Context::find_var(const Name& x) const {
    auto it = term_vars.find(x);
    return it == term_vars.end() ? nullptr : &it->second;
}

const Formula* Context::find_hyp(const Name& a) const {
    for (auto it = hyps.rbegin(); it != hyps.rend(); ++it)
        if (it->first == a) return &it->second;
    return nullptr;
}

NameSet Context::hyp_free_vars() const {
    NameSet out;
    for (const auto& [_, f] : hyps) {
        NameSet fv = free_vars(f);
        out.insert(fv.begin(), fv.end());
    }
    return out;
}

// --- sorts ----------------------------------------------------------------------

SortError::SortError(Kind kind, std::string expected, std::string got, std::string location)
    : std::runtime_error(std::string(dnsk::to_string(kind)) + " in " + location + ": expected " + expected +
                         ", got " + got),
      kind_(kind), expected_(std::move(expected)), got_(std::move(got)), location_(std::move(location)) {}

std::string_view to_string(SortError::Kind k) {
    switch (k) {
    case SortError::Kind::UnboundVar:
        return "UnboundVar";
    case SortError::Kind::SortMismatch:
        return "SortMismatch";
    case SortError::Kind::UnknownPredicate:
        return "UnknownPredicate";
    case SortError::Kind::ArityMismatch:
        return "ArityMismatch";
    }
    return "?";
}

namespace {

using SortEnv = std::vector<std::pair<Name, Type>>;

const Type* lookup(const SortEnv& env, const Context& ctx, const Name& x) {
    for (auto it = env.rbegin(); it != env.rend(); ++it)
        if (it->first == x) return &it->second;
    return ctx.find_var(x);
}

Type infer(const Context& ctx, SortEnv& env, const Term& t) {
    auto mismatch = [&](const std::string& expected, const Type& got) -> SortError {
        return SortError(SortError::Kind::SortMismatch, expected, to_string(got), to_string(t));
    };
    switch (t.kind()) {
    case TK::Var: {
        const Type* ty = lookup(env, ctx, t.name());
        if (!ty) throw SortError(SortError::Kind::UnboundVar, "a declared variable", t.name(), to_string(t));
        return *ty;
    }
    case TK::Lam: {
        env.emplace_back(t.name(), t.type());
        Type body = infer(ctx, env, t.body());
        env.pop_back();
        return Type::arrow(t.type(), body);
    }
    case TK::App: {
        Type f = infer(ctx, env, t.fn());
        if (!f.is_arrow()) throw mismatch("an arrow sort", f);
        Type a = infer(ctx, env, t.arg());
        if (a != f.left()) throw mismatch(to_string(f.left()), a);
        return f.right();
    }
    case TK::Pair: {
        Type a = infer(ctx, env, t.first());
        return Type::prod(a, infer(ctx, env, t.second()));
    }
    case TK::Proj1:
    case TK::Proj2: {
        Type p = infer(ctx, env, t.operand());
        if (!p.is_prod()) throw mismatch("a product sort", p);
        return t.is(TK::Proj1) ? p.left() : p.right();
    }
    case TK::Star:
        return Type::unit();
    case TK::Zero:
        return Type::nat();
    case TK::Succ: {
        Type n = infer(ctx, env, t.operand());
        if (!n.is_nat()) throw mismatch("nat", n);
        return n;
    }
    case TK::Rec: {
        const Type& res = t.type();
        Type n = infer(ctx, env, t.scrutinee());
        if (!n.is_nat()) throw mismatch("nat", n);
        Type b = infer(ctx, env, t.base());
        if (b != res) throw mismatch(to_string(res), b);
        Type s = infer(ctx, env, t.step());
        Type want = Type::arrow(Type::nat(), Type::arrow(res, res));
        if (s != want) throw mismatch(to_string(want), s);
        return res;
    }
    }
    throw std::logic_error("unhandled term kind");
}

void check_formula_env(const Signature& sig, const Context& ctx, SortEnv& env, const Formula& a) {
    switch (a.kind()) {
    case FK::Bot:
        return;
    case FK::Eq:
        for (const auto& t : a.terms()) {
            Type ty = infer(ctx, env, t);
            if (!ty.is_nat()) throw SortError(SortError::Kind::SortMismatch, "nat", to_string(ty), to_string(a));
        }
        return;
    case FK::Pred: {
        const auto* sorts = sig.find(a.name());
        if (!sorts) throw SortError(SortError::Kind::UnknownPredicate, "a declared predicate", a.name(), to_string(a));
        if (sorts->size() != a.terms().size())
            throw SortError(SortError::Kind::ArityMismatch, std::to_string(sorts->size()) + " arguments",
                            std::to_string(a.terms().size()), to_string(a));
        for (std::size_t i = 0; i < sorts->size(); ++i) {
            Type ty = infer(ctx, env, a.terms()[i]);
            if (ty != (*sorts)[i])
                throw SortError(SortError::Kind::SortMismatch, to_string((*sorts)[i]), to_string(ty), to_string(a));
        }
        return;
    }
    case FK::Forall:
    case FK::Exists:
        env.emplace_back(a.name(), a.sort());
        check_formula_env(sig, ctx, env, a.body());
        env.pop_back();
        return;
    default:
        for (std::size_t i = 0; i < a.arity(); ++i) check_formula_env(sig, ctx, env, a.sub(i));
    }
}

} // namespace

Type infer_term_type(const Context& ctx, const Term& t) {
    SortEnv env;
    return infer(ctx, env, t);
}

void check_formula(const Signature& sig, const Context& ctx, const Formula& a) {
    SortEnv env;
    check_formula_env(sig, ctx, env, a);
}

// --- proofs ---------------------------------------------------------------------

std::string_view to_string(CheckErrorKind k) {
    switch (k) {
    case CheckErrorKind::AnnotationViolation:
        return "AnnotationViolation";
    case CheckErrorKind::NotSynthesizable:
        return "NotSynthesizable";
    case CheckErrorKind::FreshnessViolation:
        return "FreshnessViolation";
    case CheckErrorKind::FormulaMismatch:
        return "FormulaMismatch";
    case CheckErrorKind::ScrutineeNotSum:
        return "ScrutineeNotSum";
    case CheckErrorKind::ScrutineeNotExists:
        return "ScrutineeNotExists";
    case CheckErrorKind::ResetGoalNotBot:
        return "ResetGoalNotBot";
    case CheckErrorKind::UnboundHypothesis:
        return "UnboundHypothesis";
    case CheckErrorKind::UnboundVar:
        return "UnboundVar";
    case CheckErrorKind::SortMismatch:
        return "SortMismatch";
    case CheckErrorKind::UnknownPredicate:
        return "UnknownPredicate";
    case CheckErrorKind::ArityMismatch:
        return "ArityMismatch";
    }
    return "?";
}

namespace {

CheckErrorKind from_sort_error(SortError::Kind k) {
    switch (k) {
    case SortError::Kind::UnboundVar:
        return CheckErrorKind::UnboundVar;
    case SortError::Kind::SortMismatch:
        return CheckErrorKind::SortMismatch;
    case SortError::Kind::UnknownPredicate:
        return CheckErrorKind::UnknownPredicate;
    case SortError::Kind::ArityMismatch:
        return CheckErrorKind::ArityMismatch;
    }
    return CheckErrorKind::SortMismatch;
}

struct Failure {
    CheckError error;
};

std::string_view kind_name(const Proof& p) {
    switch (p.kind()) {
    case PK::Hyp: return "hypothesis";
    case PK::Pair: return "pair";
    case PK::Fst: return "fst";
    case PK::Snd: return "snd";
    case PK::Inl: return "inl";
    case PK::Inr: return "inr";
    case PK::Case: return "case";
    case PK::Lam: return "fun";
    case PK::App: return "application";
    case PK::TLam: return "tfun";
    case PK::TApp: return "instantiation";
    case PK::ExPair: return "witness pair";
    case PK::Dest: return "dest";
    case PK::Efq: return "efq";
    case PK::Reset: return "reset";
    case PK::Shift: return "shift";
    case PK::Ascribe: return "ascription";
    }
    return "?";
}

class Checker {
public:
    explicit Checker(const Signature& sig) : sig_(sig) {}

    Derivation check(const Context& ctx, Annotation ann, const Proof& p, const Formula& goal) {
        switch (p.kind()) {
        case PK::Pair: {
            if (!goal.is(FK::And)) fail(CheckErrorKind::FormulaMismatch, "a conjunction", to_string(goal));
            auto d1 = premise("AndI[0]", [&] { return check(ctx, ann, p.child(0), goal.lhs()); });
            auto d2 = premise("AndI[1]", [&] { return check(ctx, ann, p.child(1), goal.rhs()); });
            return node("AndI", ann, p, goal, {std::move(d1), std::move(d2)});
        }
        case PK::Inl:
        case PK::Inr: {
            bool left = p.is(PK::Inl);
            const char* rule = left ? "OrI1" : "OrI2";
            if (!goal.is(FK::Or)) fail(CheckErrorKind::FormulaMismatch, "a disjunction", to_string(goal));
            auto d = premise(rule, [&] { return check(ctx, ann, p.child(0), left ? goal.lhs() : goal.rhs()); });
            return node(rule, ann, p, goal, {std::move(d)});
        }
        case PK::Lam: {
            if (!goal.is(FK::Imp)) fail(CheckErrorKind::FormulaMismatch, "an implication", to_string(goal));
            Context inner = ctx;
            inner.assume(p.name(), goal.lhs());
            auto d = premise("ImpI", [&] { return check(inner, ann, p.child(0), goal.rhs()); });
            return node("ImpI", ann, p, goal, {std::move(d)});
        }
        case PK::TLam: {
            if (!goal.is(FK::Forall)) fail(CheckErrorKind::FormulaMismatch, "a universal formula", to_string(goal));
            require_fresh(ctx, p.name(), goal);
            Context inner = ctx;
            inner.declare(p.name(), goal.sort());
            Formula body = subst_formula(goal.body(), goal.name(), var(p.name()));
            auto d = premise("AllI", [&] { return check(inner, ann, p.child(0), body); });
            return node("AllI", ann, p, goal, {std::move(d)});
        }
        case PK::ExPair: {
            if (!goal.is(FK::Exists)) fail(CheckErrorKind::FormulaMismatch, "an existential formula", to_string(goal));
            Type ty = sort_of(ctx, p.term());
            if (ty != goal.sort()) fail(CheckErrorKind::SortMismatch, to_string(goal.sort()), to_string(ty));
            Formula body = subst_formula(goal.body(), goal.name(), p.term());
            auto d = premise("ExI", [&] { return check(ctx, ann, p.child(0), body); });
            return node("ExI", ann, p, goal, {std::move(d)});
        }
        case PK::Case: {
            auto ds = premise("OrE[0]", [&] { return synth(ctx, ann, p.child(0)); });
            if (!ds.formula.is(FK::Or))
                fail(CheckErrorKind::ScrutineeNotSum, "a disjunction", to_string(ds.formula));
            Context c1 = ctx;
            c1.assume(p.name(), ds.formula.lhs());
            Context c2 = ctx;
            c2.assume(p.name2(), ds.formula.rhs());
            auto d1 = premise("OrE[1]", [&] { return check(c1, ann, p.child(1), goal); });
            auto d2 = premise("OrE[2]", [&] { return check(c2, ann, p.child(2), goal); });
            return node("OrE", ann, p, goal, {std::move(ds), std::move(d1), std::move(d2)});
        }
        case PK::Dest: {
            auto ds = premise("ExE[0]", [&] { return synth(ctx, ann, p.child(0)); });
            if (!ds.formula.is(FK::Exists))
                fail(CheckErrorKind::ScrutineeNotExists, "an existential formula", to_string(ds.formula));
            require_fresh(ctx, p.name(), goal);
            Context inner = ctx;
            inner.declare(p.name(), ds.formula.sort());
            inner.assume(p.name2(), subst_formula(ds.formula.body(), ds.formula.name(), var(p.name())));
            auto d = premise("ExE[1]", [&] { return check(inner, ann, p.child(1), goal); });
            return node("ExE", ann, p, goal, {std::move(ds), std::move(d)});
        }
        case PK::Efq: {
            auto d = premise("BotE", [&] { return check(ctx, ann, p.child(0), bot()); });
            return node("BotE", ann, p, goal, {std::move(d)});
        }
        case PK::Reset: {
            if (!goal.is(FK::Bot)) fail(CheckErrorKind::ResetGoalNotBot, "bot", to_string(goal));
            auto d = premise("Reset", [&] { return check(ctx, Annotation::Bot, p.child(0), bot()); });
            return node("Reset", ann, p, goal, {std::move(d)});
        }
        case PK::Shift: {
            if (ann != Annotation::Bot)
                fail(CheckErrorKind::AnnotationViolation, "the bot annotation", std::string(to_string(ann)));
            Context inner = ctx;
            inner.assume(p.name(), neg(goal));
            auto d = premise("Shift", [&] { return check(inner, Annotation::Bot, p.child(0), bot()); });
            return node("Shift", ann, p, goal, {std::move(d)});
        }
        case PK::App:
            if (p.child(0).is(PK::Lam)) {
                // (fun a => q) r: r synthesizes the binder's formula.
                const Proof& fn = p.child(0);
                auto da = premise("ImpE-redex[1]", [&] { return synth(ctx, ann, p.child(1)); });
                Context inner = ctx;
                inner.assume(fn.name(), da.formula);
                auto db = premise("ImpE-redex[0]", [&] { return check(inner, ann, fn.child(0), goal); });
                return node("ImpE-redex", ann, p, goal, {std::move(db), std::move(da)});
            }
            [[fallthrough]];
        default: {
            Derivation d = synth(ctx, ann, p);
            if (!alpha_equal(d.formula, goal))
                fail(CheckErrorKind::FormulaMismatch, to_string(goal), to_string(d.formula));
            return d;
        }
        }
    }

    Derivation synth(const Context& ctx, Annotation ann, const Proof& p) {
        switch (p.kind()) {
        case PK::Hyp: {
            const Formula* f = ctx.find_hyp(p.name());
            if (!f) fail(CheckErrorKind::UnboundHypothesis, "a hypothesis in scope", p.name());
            return node("Ax", ann, p, *f, {});
        }
        case PK::Fst:
        case PK::Snd: {
            bool first = p.is(PK::Fst);
            const char* rule = first ? "AndE1" : "AndE2";
            auto d = premise(rule, [&] { return synth(ctx, ann, p.child(0)); });
            if (!d.formula.is(FK::And)) fail(CheckErrorKind::FormulaMismatch, "a conjunction", to_string(d.formula));
            Formula f = first ? d.formula.lhs() : d.formula.rhs();
            return node(rule, ann, p, f, {std::move(d)});
        }
        case PK::App: {
            auto df = premise("ImpE[0]", [&] { return synth(ctx, ann, p.child(0)); });
            if (!df.formula.is(FK::Imp))
                fail(CheckErrorKind::FormulaMismatch, "an implication", to_string(df.formula));
            auto da = premise("ImpE[1]", [&] { return check(ctx, ann, p.child(1), df.formula.lhs()); });
            Formula f = df.formula.rhs();
            return node("ImpE", ann, p, f, {std::move(df), std::move(da)});
        }
        case PK::TApp: {
            auto d = premise("AllE", [&] { return synth(ctx, ann, p.child(0)); });
            if (!d.formula.is(FK::Forall))
                fail(CheckErrorKind::FormulaMismatch, "a universal formula", to_string(d.formula));
            Type ty = sort_of(ctx, p.term());
            if (ty != d.formula.sort()) fail(CheckErrorKind::SortMismatch, to_string(d.formula.sort()), to_string(ty));
            Formula f = subst_formula(d.formula.body(), d.formula.name(), p.term());
            return node("AllE", ann, p, f, {std::move(d)});
        }
        case PK::Ascribe: {
            well_sorted(ctx, p.formula());
            auto d = premise("Ascribe", [&] { return check(ctx, ann, p.child(0), p.formula()); });
            return node("Ascribe", ann, p, p.formula(), {std::move(d)});
        }
        default:
            fail(CheckErrorKind::NotSynthesizable, "a synthesizing form or an ascription",
                 std::string(kind_name(p)));
        }
    }

    void well_sorted(const Context& ctx, const Formula& a) {
        try {
            check_formula(sig_, ctx, a);
        } catch (const SortError& e) {
            fail(from_sort_error(e.kind()), e.expected(), e.got());
        }
    }

    std::vector<std::string> path;

private:
    Type sort_of(const Context& ctx, const Term& t) {
        try {
            return infer_term_type(ctx, t);
        } catch (const SortError& e) {
            fail(from_sort_error(e.kind()), e.expected(), e.got());
        }
    }

    void require_fresh(const Context& ctx, const Name& x, const Formula& goal) {
        if (ctx.find_var(x)) fail(CheckErrorKind::FreshnessViolation, x + " fresh", x + " is declared in the context");
        if (ctx.hyp_free_vars().count(x))
            fail(CheckErrorKind::FreshnessViolation, x + " fresh", x + " occurs free in a hypothesis");
        if (free_vars(goal).count(x))
            fail(CheckErrorKind::FreshnessViolation, x + " fresh", x + " occurs free in the goal");
    }

    template <class F>
    Derivation premise(const std::string& label, F&& f) {
        path.push_back(label);
        Derivation d = f();
        path.pop_back();
        return d;
    }

    static Derivation node(std::string rule, Annotation ann, const Proof& p, Formula f,
                           std::vector<Derivation> premises) {
        return Derivation{std::move(rule), ann, p, std::move(f), std::move(premises)};
    }

    [[noreturn]] void fail(CheckErrorKind kind, std::string expected, std::string got) const {
        std::string joined;
        for (const auto& seg : path) {
            if (!joined.empty()) joined += "/";
            joined += seg;
        }
        if (joined.empty()) joined = "root";
        throw Failure{CheckError{kind, joined, std::move(expected), std::move(got)}};
    }

    const Signature& sig_;
};

} // namespace

CheckReport check_proof(const Signature& sig, const Context& ctx, Annotation ann, const Proof& p,
                        const Formula& goal) {
    Checker checker(sig);
    CheckReport report;
    try {
        for (const auto& [name, f] : ctx.hyps) {
            checker.path = {"context:" + name};
            checker.well_sorted(ctx, f);
        }
        checker.path = {"goal"};
        checker.well_sorted(ctx, goal);
        checker.path.clear();
        report.derivation = checker.check(ctx, ann, p, goal);
        report.accepted = true;
    } catch (const Failure& f) {
        report.error = f.error;
    }
    return report;
}

namespace {

bool guarded(const Derivation& d, bool under_reset) {
    if (d.rule == "Shift" && !under_reset) return false;
    bool inner = under_reset || d.rule == "Reset";
    return std::all_of(d.premises.begin(), d.premises.end(), [&](const Derivation& c) { return guarded(c, inner); });
}

} // namespace

bool shifts_guarded_by_reset(const Derivation& d) { return guarded(d, false); }

} // namespace dnsk
