// Copyright (c) 2026 The dnsk Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "dnsk/translate.hpp"

#include "dnsk/printer.hpp"
#include "dnsk/subst.hpp"

namespace dnsk {

using FK = Formula::Kind;

TranslateError::TranslateError(Kind kind, std::string expected, std::string got)
    : std::runtime_error(std::string(dnsk::to_string(kind)) + ": expected " + expected + ", got " + got),
      kind_(kind), expected_(std::move(expected)), got_(std::move(got)) {}

std::string_view to_string(TranslateError::Kind k) {
    switch (k) {
    case TranslateError::Kind::RealizerTypeMismatch:
        return "RealizerTypeMismatch";
    case TranslateError::Kind::WitnessTypeMismatch:
        return "WitnessTypeMismatch";
    case TranslateError::Kind::ChallengeTypeMismatch:
        return "ChallengeTypeMismatch";
    }
    return "?";
}

// --- Kuroda ---------------------------------------------------------------------

Formula kuroda_inner(const Formula& a) {
    switch (a.kind()) {
    case FK::Bot:
    case FK::Eq:
    case FK::Pred:
        return a;
    case FK::And:
        return conj(kuroda_inner(a.lhs()), kuroda_inner(a.rhs()));
    case FK::Or:
        return disj(kuroda_inner(a.lhs()), kuroda_inner(a.rhs()));
    case FK::Imp:
        return imp(kuroda_inner(a.lhs()), kuroda(a.rhs()));
    case FK::Forall:
        return forall(a.name(), a.sort(), kuroda(a.body()));
    case FK::Exists:
        return exists(a.name(), a.sort(), kuroda_inner(a.body()));
    }
    throw std::logic_error("unhandled formula kind");
}

Formula kuroda(const Formula& a) { return neg(neg(kuroda_inner(a))); }

// --- modified realizability -------------------------------------------------------

Type mr_type(const Formula& a) {
    switch (a.kind()) {
    case FK::Bot:
    case FK::Eq:
    case FK::Pred:
        return Type::unit();
    case FK::And:
        return Type::prod(mr_type(a.lhs()), mr_type(a.rhs()));
    case FK::Or:
        return Type::prod(Type::prod(mr_type(a.lhs()), mr_type(a.rhs())), Type::nat());
    case FK::Imp:
        return Type::arrow(mr_type(a.lhs()), mr_type(a.rhs()));
    case FK::Exists:
        return Type::prod(mr_type(a.body()), a.sort());
    case FK::Forall:
        return Type::arrow(a.sort(), mr_type(a.body()));
    }
    throw std::logic_error("unhandled formula kind");
}

namespace {

class Realizability {
public:
    Realizability(bool with_truth, NameSet used) : truth_(with_truth), fresh_(std::move(used)) {}

    Formula run(const Term& t, const Formula& a) {
        switch (a.kind()) {
        case FK::Bot:
        case FK::Eq:
        case FK::Pred:
            return a;
        case FK::And:
            return conj(run(proj1(t), a.lhs()), run(proj2(t), a.rhs()));
        case FK::Or: {
            Formula flag = eq(proj2(t), zero());
            return conj(imp(flag, run(proj1(proj1(t)), a.lhs())), imp(neg(flag), run(proj2(proj1(t)), a.rhs())));
        }
        case FK::Imp: {
            Name x = fresh_.next("x");
            Formula clause =
                forall(x, mr_type(a.lhs()), imp(run(var(x), a.lhs()), run(app(t, var(x)), a.rhs())));
            return truth_ ? conj(clause, a) : clause;
        }
        case FK::Exists:
            return run(proj1(t), subst_formula(a.body(), a.name(), proj2(t)));
        case FK::Forall: {
            Name y = a.name();
            Formula body = a.body();
            if (free_vars(t).count(y)) {
                Name y2 = fresh_.next(y);
                body = subst_formula(body, y, var(y2));
                y = y2;
            }
            fresh_.reserve(y);
            return forall(y, a.sort(), run(app(t, var(y)), body));
        }
        }
        throw std::logic_error("unhandled formula kind");
    }

private:
    bool truth_;
    FreshNames fresh_;
};

NameSet names_in_scope(const Context& ctx, const Term& t, const Formula& a) {
    NameSet used;
    for (const auto& [x, _] : ctx.term_vars) used.insert(x);
    collect_names(t, used);
    collect_names(a, used);
    return used;
}

Formula realize(const Signature& sig, const Context& ctx, const Term& t, const Formula& a, bool truth) {
    check_formula(sig, ctx, a);
    Type want = mr_type(a);
    Type got = infer_term_type(ctx, t);
    if (got != want)
        throw TranslateError(TranslateError::Kind::RealizerTypeMismatch, to_string(want), to_string(got));
    return Realizability(truth, names_in_scope(ctx, t, a)).run(t, a);
}

} // namespace

Formula mr_formula(const Signature& sig, const Context& ctx, const Term& t, const Formula& a) {
    return realize(sig, ctx, t, a, false);
}

Formula mrt_formula(const Signature& sig, const Context& ctx, const Term& t, const Formula& a) {
    return realize(sig, ctx, t, a, true);
}

Formula mr_simplify(const Formula& a) {
    switch (a.kind()) {
    case FK::Bot:
    case FK::Eq:
    case FK::Pred:
        return a;
    case FK::And:
        return conj(mr_simplify(a.lhs()), mr_simplify(a.rhs()));
    case FK::Or:
        return disj(mr_simplify(a.lhs()), mr_simplify(a.rhs()));
    case FK::Imp: {
        Formula l = mr_simplify(a.lhs());
        Formula r = mr_simplify(a.rhs());
        if (r.is(FK::Bot) && l.is(FK::Forall) && l.body().is(FK::Imp) && l.body().rhs().is(FK::Bot))
            return neg(neg(exists(l.name(), l.sort(), l.body().lhs())));
        return imp(l, r);
    }
    case FK::Forall:
    case FK::Exists: {
        Formula b = mr_simplify(a.body());
        if (!free_vars(b).count(a.name())) return b;
        return a.is(FK::Forall) ? forall(a.name(), a.sort(), b) : exists(a.name(), a.sort(), b);
    }
    }
    return a;
}

// --- Dialectica ---------------------------------------------------------------------

DiaTypes dia_types(const Formula& a) {
    switch (a.kind()) {
    case FK::Bot:
    case FK::Eq:
    case FK::Pred:
        return {Type::unit(), Type::unit()};
    case FK::And: {
        DiaTypes l = dia_types(a.lhs()), r = dia_types(a.rhs());
        return {Type::prod(l.witness, r.witness), Type::prod(l.challenge, r.challenge)};
    }
    case FK::Or: {
        DiaTypes l = dia_types(a.lhs()), r = dia_types(a.rhs());
        return {Type::prod(Type::prod(l.witness, r.witness), Type::nat()), Type::prod(l.challenge, r.challenge)};
    }
    case FK::Imp: {
        DiaTypes l = dia_types(a.lhs()), r = dia_types(a.rhs());
        Type w = Type::prod(Type::arrow(l.witness, r.witness),
                            Type::arrow(l.witness, Type::arrow(r.challenge, l.challenge)));
        return {w, Type::prod(l.witness, r.challenge)};
    }
    case FK::Exists: {
        DiaTypes b = dia_types(a.body());
        return {Type::prod(b.witness, a.sort()), b.challenge};
    }
    case FK::Forall: {
        DiaTypes b = dia_types(a.body());
        return {Type::arrow(a.sort(), b.witness), Type::prod(b.challenge, a.sort())};
    }
    }
    throw std::logic_error("unhandled formula kind");
}

namespace {

Formula dia(const Term& t, const Term& s, const Formula& a) {
    switch (a.kind()) {
    case FK::Bot:
    case FK::Eq:
    case FK::Pred:
        return a;
    case FK::And:
        return conj(dia(proj1(t), proj1(s), a.lhs()), dia(proj2(t), proj2(s), a.rhs()));
    case FK::Or: {
        Formula flag = eq(proj2(t), zero());
        return conj(imp(flag, dia(proj1(proj1(t)), proj1(s), a.lhs())),
                    imp(neg(flag), dia(proj2(proj1(t)), proj2(s), a.rhs())));
    }
    case FK::Imp:
        return imp(dia(proj1(s), app(app(proj2(t), proj1(s)), proj2(s)), a.lhs()),
                   dia(app(proj1(t), proj1(s)), proj2(s), a.rhs()));
    case FK::Exists:
        return dia(proj1(t), s, subst_formula(a.body(), a.name(), proj2(t)));
    case FK::Forall:
        return dia(app(t, proj2(s)), proj1(s), subst_formula(a.body(), a.name(), proj2(s)));
    }
    throw std::logic_error("unhandled formula kind");
}

void require_sorts(const Signature& sig, const Context& ctx, const Term& t, const Term& s, const Formula& a) {
    check_formula(sig, ctx, a);
    DiaTypes want = dia_types(a);
    Type tw = infer_term_type(ctx, t);
    if (tw != want.witness)
        throw TranslateError(TranslateError::Kind::WitnessTypeMismatch, to_string(want.witness), to_string(tw));
    Type sc = infer_term_type(ctx, s);
    if (sc != want.challenge)
        throw TranslateError(TranslateError::Kind::ChallengeTypeMismatch, to_string(want.challenge), to_string(sc));
}

Formula nn_simplified(const Formula& a, const Term& t, const Term& s) {
    Term c = app(app(proj2(t), proj1(s)), proj2(s));
    Term w = proj1(c);
    Term ch = app(app(proj2(proj1(s)), w), proj2(c));
    return dia(w, ch, a);
}

} // namespace

Formula dia_formula(const Signature& sig, const Context& ctx, const Term& t, const Term& s, const Formula& a) {
    require_sorts(sig, ctx, t, s, a);
    return dia(t, s, a);
}

Formula dia_nn_simplify(const Signature& sig, const Context& ctx, const Formula& a, const Term& t,
                        const Term& s) {
    require_sorts(sig, ctx, t, s, neg(neg(a)));
    return nn_simplified(a, t, s);
}

Formula spector_target(const Formula& a, const Name& t) {
    NameSet used;
    collect_names(a, used);
    used.insert(t);
    Name y = prime_fresh("y", used);
    Type cy = dia_types(neg(neg(a))).challenge;
    return forall(y, cy, nn_simplified(a, var(t), var(y)));
}

} // namespace dnsk
