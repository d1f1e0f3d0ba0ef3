// Copyright (c) 2026 The dnsk Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "dnsk/subst.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dnsk {

using TK = Term::Kind;
using FK = Formula::Kind;
using PK = Proof::Kind;

namespace {

void term_fv(const Term& t, NameSet& bound, NameSet& out) {
    switch (t.kind()) {
    case TK::Var:
        if (!bound.count(t.name())) out.insert(t.name());
        return;
    case TK::Lam: {
        bool fresh = bound.insert(t.name()).second;
        term_fv(t.body(), bound, out);
        if (fresh) bound.erase(t.name());
        return;
    }
    default:
        for (std::size_t i = 0; i < t.arity(); ++i) term_fv(t.child(i), bound, out);
    }
}

void formula_fv(const Formula& a, NameSet& bound, NameSet& out) {
    for (const auto& t : a.terms()) term_fv(t, bound, out);
    if (a.is_quantifier()) {
        bool fresh = bound.insert(a.name()).second;
        formula_fv(a.body(), bound, out);
        if (fresh) bound.erase(a.name());
        return;
    }
    for (std::size_t i = 0; i < a.arity(); ++i) formula_fv(a.sub(i), bound, out);
}

void proof_fv_terms(const Proof& p, NameSet& bound, NameSet& out) {
    if (p.is(PK::TApp) || p.is(PK::ExPair)) term_fv(p.term(), bound, out);
    if (p.is(PK::Ascribe)) formula_fv(p.formula(), bound, out);
    if (p.is(PK::TLam)) {
        bool fresh = bound.insert(p.name()).second;
        proof_fv_terms(p.child(0), bound, out);
        if (fresh) bound.erase(p.name());
        return;
    }
    if (p.is(PK::Dest)) {
        proof_fv_terms(p.child(0), bound, out);
        bool fresh = bound.insert(p.name()).second;
        proof_fv_terms(p.child(1), bound, out);
        if (fresh) bound.erase(p.name());
        return;
    }
    for (std::size_t i = 0; i < p.arity(); ++i) proof_fv_terms(p.child(i), bound, out);
}

void with_bound(NameSet& bound, const Name& n, const auto& f) {
    bool fresh = bound.insert(n).second;
    f();
    if (fresh) bound.erase(n);
}

void proof_fv_hyps(const Proof& p, NameSet& bound, NameSet& out) {
    switch (p.kind()) {
    case PK::Hyp:
        if (!bound.count(p.name())) out.insert(p.name());
        return;
    case PK::Lam:
    case PK::Shift:
        with_bound(bound, p.name(), [&] { proof_fv_hyps(p.child(0), bound, out); });
        return;
    case PK::Case:
        proof_fv_hyps(p.child(0), bound, out);
        with_bound(bound, p.name(), [&] { proof_fv_hyps(p.child(1), bound, out); });
        with_bound(bound, p.name2(), [&] { proof_fv_hyps(p.child(2), bound, out); });
        return;
    case PK::Dest:
        proof_fv_hyps(p.child(0), bound, out);
        with_bound(bound, p.name2(), [&] { proof_fv_hyps(p.child(1), bound, out); });
        return;
    default:
        for (std::size_t i = 0; i < p.arity(); ++i) proof_fv_hyps(p.child(i), bound, out);
    }
}

} // namespace

NameSet free_vars(const Term& t) {
    NameSet bound, out;
    term_fv(t, bound, out);
    return out;
}

NameSet free_vars(const Formula& a) {
    NameSet bound, out;
    formula_fv(a, bound, out);
    return out;
}

NameSet free_term_vars(const Proof& p) {
    NameSet bound, out;
    proof_fv_terms(p, bound, out);
    return out;
}

NameSet free_hyps(const Proof& p) {
    NameSet bound, out;
    proof_fv_hyps(p, bound, out);
    return out;
}

void collect_names(const Term& t, NameSet& out) {
    if (t.is(TK::Var) || t.is(TK::Lam)) out.insert(t.name());
    for (std::size_t i = 0; i < t.arity(); ++i) collect_names(t.child(i), out);
}

void collect_names(const Formula& a, NameSet& out) {
    if (a.is_quantifier()) out.insert(a.name());
    for (const auto& t : a.terms()) collect_names(t, out);
    for (std::size_t i = 0; i < a.arity(); ++i) collect_names(a.sub(i), out);
}

void collect_names(const Proof& p, NameSet& out) {
    for (const auto& n : p.node().names) out.insert(n);
    if (p.node().term) collect_names(*p.node().term, out);
    if (p.node().formula) collect_names(*p.node().formula, out);
    for (std::size_t i = 0; i < p.arity(); ++i) collect_names(p.child(i), out);
}

Name prime_fresh(const Name& base, const NameSet& avoid) {
    Name n = base;
    while (avoid.count(n)) n += "'";
    return n;
}

Name FreshNames::next(const Name& prefix) {
    unsigned& c = counters_[prefix];
    for (;;) {
        Name n = prefix + std::to_string(c++);
        if (used_.insert(n).second) return n;
    }
}

// --- substitution -------------------------------------------------------------

namespace {

Term subst_term_impl(const Term& body, const Name& x, const Term& r, const NameSet& fvr) {
    switch (body.kind()) {
    case TK::Var:
        return body.name() == x ? r : body;
    case TK::Lam: {
        if (body.name() == x) return body;
        NameSet fvb = free_vars(body.body());
        if (!fvb.count(x)) return body;
        if (fvr.count(body.name())) {
            NameSet avoid = fvr;
            avoid.insert(fvb.begin(), fvb.end());
            avoid.insert(x);
            Name y = prime_fresh(body.name(), avoid);
            Term renamed = subst_term_impl(body.body(), body.name(), var(y), {y});
            return lam(y, body.type(), subst_term_impl(renamed, x, r, fvr));
        }
        return lam(body.name(), body.type(), subst_term_impl(body.body(), x, r, fvr));
    }
    case TK::Star:
    case TK::Zero:
        return body;
    default: {
        std::vector<Term> cs;
        cs.reserve(body.arity());
        bool changed = false;
        for (std::size_t i = 0; i < body.arity(); ++i) {
            cs.push_back(subst_term_impl(body.child(i), x, r, fvr));
            changed = changed || !(cs.back() == body.child(i));
        }
        if (!changed) return body;
        std::optional<Type> ty;
        if (body.is(TK::Rec)) ty = body.type();
        return Term::make(body.kind(), {}, ty, std::move(cs));
    }
    }
}

Formula subst_formula_impl(const Formula& body, const Name& x, const Term& r, const NameSet& fvr) {
    if (body.is_quantifier()) {
        if (body.name() == x) return body;
        NameSet fvb = free_vars(body.body());
        if (!fvb.count(x)) return body;
        Name y = body.name();
        Formula inner = body.body();
        if (fvr.count(y)) {
            NameSet avoid = fvr;
            avoid.insert(fvb.begin(), fvb.end());
            avoid.insert(x);
            y = prime_fresh(body.name(), avoid);
            inner = subst_formula_impl(inner, body.name(), var(y), {y});
        }
        return Formula::make(body.kind(), y, body.sort(), {}, {subst_formula_impl(inner, x, r, fvr)});
    }
    std::vector<Term> ts;
    for (const auto& t : body.terms()) ts.push_back(subst_term_impl(t, x, r, fvr));
    std::vector<Formula> cs;
    for (std::size_t i = 0; i < body.arity(); ++i) cs.push_back(subst_formula_impl(body.sub(i), x, r, fvr));
    return Formula::make(body.kind(), body.name(), std::nullopt, std::move(ts), std::move(cs));
}

Proof rebuild(const Proof& p, std::vector<Name> names, std::optional<Term> term,
              std::optional<Formula> formula, std::vector<Proof> children) {
    return Proof::make(p.kind(), std::move(names), std::move(term), std::move(formula), std::move(children));
}

Proof subst_tp_impl(const Proof& p, const Name& x, const Term& r, const NameSet& fvr);

// Binder `y` over `body`: rename if it would capture r's free variables.
std::pair<Name, Proof> under_term_binder(const Name& y, const Proof& body, const Name& x, const Term& r,
                                         const NameSet& fvr) {
    if (y == x) return {y, body};
    NameSet fvb = free_term_vars(body);
    if (!fvb.count(x)) return {y, body};
    if (fvr.count(y)) {
        NameSet avoid = fvr;
        avoid.insert(fvb.begin(), fvb.end());
        avoid.insert(x);
        Name y2 = prime_fresh(y, avoid);
        Proof renamed = subst_tp_impl(body, y, var(y2), {y2});
        return {y2, subst_tp_impl(renamed, x, r, fvr)};
    }
    return {y, subst_tp_impl(body, x, r, fvr)};
}

Proof subst_tp_impl(const Proof& p, const Name& x, const Term& r, const NameSet& fvr) {
    const auto& n = p.node();
    switch (p.kind()) {
    case PK::Hyp:
        return p;
    case PK::TLam: {
        auto [y, b] = under_term_binder(p.name(), p.child(0), x, r, fvr);
        return tlam(y, b);
    }
    case PK::Dest: {
        Proof scrut = subst_tp_impl(p.child(0), x, r, fvr);
        auto [y, b] = under_term_binder(p.name(), p.child(1), x, r, fvr);
        return dest(scrut, y, p.name2(), b);
    }
    default: {
        std::optional<Term> term = n.term;
        if (term) term = subst_term_impl(*term, x, r, fvr);
        std::optional<Formula> formula = n.formula;
        if (formula) formula = subst_formula_impl(*formula, x, r, fvr);
        std::vector<Proof> cs;
        for (const auto& c : n.children) cs.push_back(subst_tp_impl(c, x, r, fvr));
        return rebuild(p, n.names, std::move(term), std::move(formula), std::move(cs));
    }
    }
}

struct HypSubst {
    const Name& a;
    const Proof& q;
    NameSet fvh;  // free hyps of q
    NameSet fvt;  // free term vars of q

    // Hypothesis binder `b` over `body`.
    std::pair<Name, Proof> hyp_binder(const Name& b, const Proof& body) const {
        if (b == a) return {b, body};
        NameSet fb = free_hyps(body);
        if (!fb.count(a)) return {b, body};
        if (fvh.count(b)) {
            NameSet avoid = fvh;
            avoid.insert(fb.begin(), fb.end());
            avoid.insert(a);
            Name b2 = prime_fresh(b, avoid);
            Proof renamed = subst_hyp(body, b, hyp(b2));
            return {b2, run(renamed)};
        }
        return {b, run(body)};
    }

    // Individual-variable binder `y` over `body` (the substitute may mention y).
    std::pair<Name, Proof> term_binder(const Name& y, const Proof& body) const {
        if (!fvt.count(y) || !free_hyps(body).count(a)) return {y, body};
        NameSet avoid = fvt;
        NameSet fb = free_term_vars(body);
        avoid.insert(fb.begin(), fb.end());
        Name y2 = prime_fresh(y, avoid);
        return {y2, subst_term_in_proof(body, y, var(y2))};
    }

    Proof run(const Proof& p) const {
        const auto& n = p.node();
        switch (p.kind()) {
        case PK::Hyp:
            return p.name() == a ? q : p;
        case PK::Lam: {
            auto [b, body] = hyp_binder(p.name(), p.child(0));
            return plam(b, body);
        }
        case PK::Shift: {
            auto [b, body] = hyp_binder(p.name(), p.child(0));
            return shift(b, body);
        }
        case PK::Case: {
            Proof scrut = run(p.child(0));
            auto [b1, q1] = hyp_binder(p.name(), p.child(1));
            auto [b2, q2] = hyp_binder(p.name2(), p.child(2));
            return case_of(scrut, b1, q1, b2, q2);
        }
        case PK::Dest: {
            Proof scrut = run(p.child(0));
            if (p.name2() == a) return dest(scrut, p.name(), p.name2(), p.child(1));
            auto [y, body1] = term_binder(p.name(), p.child(1));
            auto [b, body2] = hyp_binder(p.name2(), body1);
            return dest(scrut, y, b, body2);
        }
        case PK::TLam: {
            auto [y, body1] = term_binder(p.name(), p.child(0));
            return tlam(y, run(body1));
        }
        default: {
            std::vector<Proof> cs;
            for (const auto& c : n.children) cs.push_back(run(c));
            return rebuild(p, n.names, n.term, n.formula, std::move(cs));
        }
        }
    }
};

} // namespace

Term subst_term(const Term& body, const Name& x, const Term& r) {
    return subst_term_impl(body, x, r, free_vars(r));
}

Formula subst_formula(const Formula& body, const Name& x, const Term& r) {
    return subst_formula_impl(body, x, r, free_vars(r));
}

Proof subst_term_in_proof(const Proof& p, const Name& x, const Term& r) {
    return subst_tp_impl(p, x, r, free_vars(r));
}

Proof subst_hyp(const Proof& p, const Name& a, const Proof& q) {
    HypSubst s{a, q, free_hyps(q), free_term_vars(q)};
    return s.run(p);
}

// --- alpha equivalence ----------------------------------------------------------

namespace {

using Env = std::vector<std::pair<Name, Name>>;

bool same_var(const Env& env, const Name& x, const Name& y) {
    for (auto it = env.rbegin(); it != env.rend(); ++it) {
        bool lx = it->first == x;
        bool ly = it->second == y;
        if (lx || ly) return lx && ly;
    }
    return x == y;
}

bool aeq(const Term& a, const Term& b, Env& env) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case TK::Var:
        return same_var(env, a.name(), b.name());
    case TK::Lam: {
        if (a.type() != b.type()) return false;
        env.emplace_back(a.name(), b.name());
        bool r = aeq(a.body(), b.body(), env);
        env.pop_back();
        return r;
    }
    case TK::Rec:
        if (a.type() != b.type()) return false;
        [[fallthrough]];
    default:
        for (std::size_t i = 0; i < a.arity(); ++i)
            if (!aeq(a.child(i), b.child(i), env)) return false;
        return true;
    }
}

bool aeq(const Formula& a, const Formula& b, Env& env) {
    if (a.kind() != b.kind()) return false;
    if (a.is(FK::Pred) && (a.name() != b.name() || a.terms().size() != b.terms().size())) return false;
    for (std::size_t i = 0; i < a.terms().size(); ++i)
        if (!aeq(a.terms()[i], b.terms()[i], env)) return false;
    if (a.is_quantifier()) {
        if (a.sort() != b.sort()) return false;
        env.emplace_back(a.name(), b.name());
        bool r = aeq(a.body(), b.body(), env);
        env.pop_back();
        return r;
    }
    for (std::size_t i = 0; i < a.arity(); ++i)
        if (!aeq(a.sub(i), b.sub(i), env)) return false;
    return true;
}

struct ProofAeq {
    Env terms;
    Env hyps;

    bool under_hyp(const Name& x, const Name& y, const Proof& p, const Proof& q) {
        hyps.emplace_back(x, y);
        bool r = run(p, q);
        hyps.pop_back();
        return r;
    }

    bool run(const Proof& a, const Proof& b) {
        if (a.kind() != b.kind()) return false;
        switch (a.kind()) {
        case PK::Hyp:
            return same_var(hyps, a.name(), b.name());
        case PK::Lam:
        case PK::Shift:
            return under_hyp(a.name(), b.name(), a.child(0), b.child(0));
        case PK::Case:
            return run(a.child(0), b.child(0)) && under_hyp(a.name(), b.name(), a.child(1), b.child(1)) &&
                   under_hyp(a.name2(), b.name2(), a.child(2), b.child(2));
        case PK::TLam: {
            terms.emplace_back(a.name(), b.name());
            bool r = run(a.child(0), b.child(0));
            terms.pop_back();
            return r;
        }
        case PK::Dest: {
            if (!run(a.child(0), b.child(0))) return false;
            terms.emplace_back(a.name(), b.name());
            bool r = under_hyp(a.name2(), b.name2(), a.child(1), b.child(1));
            terms.pop_back();
            return r;
        }
        case PK::TApp:
        case PK::ExPair:
            return aeq(a.term(), b.term(), terms) && run(a.child(0), b.child(0));
        case PK::Ascribe:
            return aeq(a.formula(), b.formula(), terms) && run(a.child(0), b.child(0));
        default:
            for (std::size_t i = 0; i < a.arity(); ++i)
                if (!run(a.child(i), b.child(i))) return false;
            return true;
        }
    }
};

} // namespace

bool alpha_equal(const Term& a, const Term& b) {
    Env env;
    return aeq(a, b, env);
}

bool alpha_equal(const Formula& a, const Formula& b) {
    Env env;
    return aeq(a, b, env);
}

bool alpha_equal(const Proof& a, const Proof& b) {
    ProofAeq s;
    return s.run(a, b);
}

} // namespace dnsk
