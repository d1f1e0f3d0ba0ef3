// Copyright (c) 2026 The dnsk Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

// Seeded random generators shared by the property tests.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dnsk/subst.hpp"
#include "dnsk/syntax.hpp"
#include "dnsk/typecheck.hpp"

namespace dnsk::gen {

using Rng = std::mt19937;

inline int pick(Rng& rng, int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

template <class T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(pick(rng, static_cast<int>(xs.size())))];
}

inline Type type(Rng& rng, int depth) {
    int k = depth <= 0 ? pick(rng, 2) : pick(rng, 4);
    switch (k) {
    case 0:
        return Type::nat();
    case 1:
        return Type::unit();
    case 2:
        return Type::arrow(type(rng, depth - 1), type(rng, depth - 1));
    default:
        return Type::prod(type(rng, depth - 1), type(rng, depth - 1));
    }
}

// --- untyped shapes, for the codec ------------------------------------------

inline const std::vector<Name>& var_pool() {
    static const std::vector<Name> pool{"x", "y", "z", "f", "n", "x'"};
    return pool;
}

inline Term any_term(Rng& rng, int depth) {
    int k = depth <= 0 ? pick(rng, 3) : pick(rng, 10);
    switch (k) {
    case 0:
        return var(pick(rng, var_pool()));
    case 1:
        return zero();
    case 2:
        return star();
    case 3:
        return lam(pick(rng, var_pool()), type(rng, 2), any_term(rng, depth - 1));
    case 4:
        return app(any_term(rng, depth - 1), any_term(rng, depth - 1));
    case 5:
        return pair(any_term(rng, depth - 1), any_term(rng, depth - 1));
    case 6:
        return proj1(any_term(rng, depth - 1));
    case 7:
        return proj2(any_term(rng, depth - 1));
    case 8:
        return succ(any_term(rng, depth - 1));
    default:
        return rec(type(rng, 1), any_term(rng, depth - 1), any_term(rng, depth - 1), any_term(rng, depth - 1));
    }
}

/// A term that may stand beside `=`.
inline Term eq_side(Rng& rng, int depth) {
    for (;;) {
        Term t = any_term(rng, depth);
        if (!t.is(Term::Kind::Lam) && !t.is(Term::Kind::Pair) && !t.is(Term::Kind::Star)) return t;
    }
}

inline Formula any_formula(Rng& rng, int depth) {
    static const std::vector<Name> preds{"P", "Q", "R"};
    int k = depth <= 0 ? pick(rng, 3) : pick(rng, 8);
    switch (k) {
    case 0:
        return bot();
    case 1:
        return eq(eq_side(rng, 2), eq_side(rng, 2));
    case 2: {
        std::vector<Term> args;
        for (int i = pick(rng, 3); i > 0; --i) args.push_back(any_term(rng, 2));
        return pred(pick(rng, preds), std::move(args));
    }
    case 3:
        return conj(any_formula(rng, depth - 1), any_formula(rng, depth - 1));
    case 4:
        return disj(any_formula(rng, depth - 1), any_formula(rng, depth - 1));
    case 5:
        return imp(any_formula(rng, depth - 1), any_formula(rng, depth - 1));
    case 6:
        return forall(pick(rng, var_pool()), type(rng, 1), any_formula(rng, depth - 1));
    default:
        return exists(pick(rng, var_pool()), type(rng, 1), any_formula(rng, depth - 1));
    }
}

inline Proof any_proof(Rng& rng, int depth) {
    static const std::vector<Name> hyps{"a", "b", "h", "k", "k'"};
    auto sub = [&] { return any_proof(rng, depth - 1); };
    if (depth <= 0) return hyp(pick(rng, hyps));
    switch (pick(rng, 17)) {
    case 0:
        return hyp(pick(rng, hyps));
    case 1:
        return ppair(sub(), sub());
    case 2:
        return pfst(sub());
    case 3:
        return psnd(sub());
    case 4:
        return inl(sub());
    case 5:
        return inr(sub());
    case 6:
        return case_of(sub(), pick(rng, hyps), sub(), pick(rng, hyps), sub());
    case 7:
        return plam(pick(rng, hyps), sub());
    case 8:
        return papp(sub(), sub());
    case 9:
        return tlam(pick(rng, var_pool()), sub());
    case 10:
        return tapp(sub(), any_term(rng, 2));
    case 11:
        return ex_pair(any_term(rng, 2), sub());
    case 12:
        return dest(sub(), pick(rng, var_pool()), pick(rng, hyps), sub());
    case 13:
        return efq(sub());
    case 14:
        return reset(sub());
    case 15:
        return shift(pick(rng, hyps), sub());
    default:
        return ascribe(sub(), any_formula(rng, 2));
    }
}

// --- well-sorted System T terms --------------------------------------------

using Env = std::vector<std::pair<Name, Type>>;

inline Term typed_term(Rng& rng, Env& env, const Type& target, int depth);

inline Term canonical(Rng& rng, Env& env, const Type& target, int depth) {
    switch (target.kind()) {
    case Type::Kind::Nat:
        return depth > 0 && pick(rng, 2) ? succ(typed_term(rng, env, target, depth - 1)) : zero();
    case Type::Kind::Unit:
        return star();
    case Type::Kind::Arrow: {
        Name x = "v" + std::to_string(env.size());
        env.emplace_back(x, target.left());
        Term body = typed_term(rng, env, target.right(), depth - 1);
        env.pop_back();
        return lam(x, target.left(), body);
    }
    case Type::Kind::Prod:
        return pair(typed_term(rng, env, target.left(), depth - 1), typed_term(rng, env, target.right(), depth - 1));
    }
    return star();
}

/// A closed-under-env term of the target sort, rich in redexes.
inline Term typed_term(Rng& rng, Env& env, const Type& target, int depth) {
    std::vector<Term> vars;
    for (const auto& [x, t] : env)
        if (t == target) vars.push_back(var(x));
    if (depth <= 0) return !vars.empty() && pick(rng, 2) ? pick(rng, vars) : canonical(rng, env, target, 0);
    switch (pick(rng, 6)) {
    case 0:
        if (!vars.empty()) return pick(rng, vars);
        [[fallthrough]];
    case 1:
        return canonical(rng, env, target, depth);
    case 2: {
        Type s = type(rng, 1);
        Term f = typed_term(rng, env, Type::arrow(s, target), depth - 1);
        return app(f, typed_term(rng, env, s, depth - 1));
    }
    case 3: {
        Type s = type(rng, 0);
        return proj1(typed_term(rng, env, Type::prod(target, s), depth - 1));
    }
    case 4: {
        Type s = type(rng, 0);
        return proj2(typed_term(rng, env, Type::prod(s, target), depth - 1));
    }
    default: {
        Term n = numeral(static_cast<unsigned>(pick(rng, 3)));
        Term b = typed_term(rng, env, target, depth - 1);
        Term s = typed_term(rng, env, Type::arrow(Type::nat(), Type::arrow(target, target)), depth - 1);
        return rec(target, n, b, s);
    }
    }
}

// --- bounded arithmetical formulas -------------------------------------------

/// Over P:(nat), Q:(nat,nat), with nat-sorted quantifiers only.
inline Formula bounded_formula(Rng& rng, std::vector<Name>& scope, int depth) {
    auto term_at = [&]() -> Term {
        int k = pick(rng, 4);
        if (!scope.empty() && k < 2) return var(pick(rng, scope));
        if (!scope.empty() && k == 2) return succ(var(pick(rng, scope)));
        return numeral(static_cast<unsigned>(pick(rng, 3)));
    };
    int k = depth <= 0 ? pick(rng, 4) : 4 + pick(rng, 6);
    switch (k) {
    case 0:
        return pick(rng, 8) == 0 ? bot() : pred("P", {term_at()});
    case 1:
        return eq(term_at(), term_at());
    case 2:
        return pred("Q", {term_at(), term_at()});
    case 3:
        return pred("P", {term_at()});
    case 4:
        return conj(bounded_formula(rng, scope, depth - 1), bounded_formula(rng, scope, depth - 1));
    case 5:
        return disj(bounded_formula(rng, scope, depth - 1), bounded_formula(rng, scope, depth - 1));
    case 6:
        return imp(bounded_formula(rng, scope, depth - 1), bounded_formula(rng, scope, depth - 1));
    case 7:
        return neg(bounded_formula(rng, scope, depth - 1));
    default: {
        Name x = "x" + std::to_string(scope.size());
        scope.push_back(x);
        Formula body = bounded_formula(rng, scope, depth - 1);
        scope.pop_back();
        return k == 8 ? forall(x, Type::nat(), body) : exists(x, Type::nat(), body);
    }
    }
}

inline Formula bounded_formula(Rng& rng, int depth) {
    std::vector<Name> scope;
    return bounded_formula(rng, scope, depth);
}


// --- intuitionistic derivations ---------------------------------------------

/// Goal-directed generator of shift-free proof terms. Every generated proof
/// checks at Plain against its goal in `context()`; detours exercise each
/// elimination rule.
class DerivationGen {
public:
    explicit DerivationGen(Rng& rng) : rng_(rng) {}

    static Signature signature() {
        Signature s;
        s.declare("P", {Type::nat()});
        s.declare("Q", {Type::nat(), Type::nat()});
        return s;
    }

    static Context context() {
        Context c;
        c.assume("hP", forall("x0", Type::nat(), pred("P", {var("x0")})));
        c.assume("hQ", forall("x0", Type::nat(), forall("x1", Type::nat(), pred("Q", {var("x0"), var("x1")}))));
        c.assume("hE", forall("x0", Type::nat(), eq(var("x0"), var("x0"))));
        c.assume("hd", disj(pred("P", {zero()}), pred("Q", {zero(), succ(zero())})));
        c.assume("he", exists("x0", Type::nat(), pred("P", {var("x0")})));
        c.assume("hb", bot());
        return c;
    }

    Formula goal(int depth) {
        std::vector<Name> scope;
        return goal(scope, depth);
    }

    Proof prove(const Context& ctx, const Formula& g, int depth) {
        if (depth > 0 && pick(rng_, 4) == 0) return detour(ctx, g, depth - 1);
        switch (g.kind()) {
        case Formula::Kind::And:
            return ppair(prove(ctx, g.lhs(), depth - 1), prove(ctx, g.rhs(), depth - 1));
        case Formula::Kind::Or:
            return pick(rng_, 2) ? inl(prove(ctx, g.lhs(), depth - 1)) : inr(prove(ctx, g.rhs(), depth - 1));
        case Formula::Kind::Imp: {
            Name a = fresh("a");
            Context inner = ctx;
            inner.assume(a, g.lhs());
            if (alpha_equal(g.lhs(), g.rhs()) && pick(rng_, 2)) return plam(a, hyp(a));
            return plam(a, prove(inner, g.rhs(), depth - 1));
        }
        case Formula::Kind::Forall: {
            Name u = fresh("u");
            Context inner = ctx;
            inner.declare(u, g.sort());
            return tlam(u, prove(inner, subst_formula(g.body(), g.name(), var(u)), depth - 1));
        }
        case Formula::Kind::Exists: {
            Term t = nat_term(ctx);
            return ex_pair(t, prove(ctx, subst_formula(g.body(), g.name(), t), depth - 1));
        }
        case Formula::Kind::Pred:
            if (g.name() == "P") return tapp(hyp("hP"), g.terms()[0]);
            return tapp(tapp(hyp("hQ"), g.terms()[0]), g.terms()[1]);
        case Formula::Kind::Eq:
            return tapp(hyp("hE"), g.terms()[0]);
        default:
            return efq(hyp("hb"));
        }
    }

private:
    Proof detour(const Context& ctx, const Formula& g, int depth) {
        switch (pick(rng_, 7)) {
        case 0: {
            Formula b = goal_in(ctx, 1);
            return pfst(ascribe(ppair(prove(ctx, g, depth), prove(ctx, b, depth)), conj(g, b)));
        }
        case 1: {
            Formula b = goal_in(ctx, 1);
            Name a = fresh("a");
            Context inner = ctx;
            inner.assume(a, b);
            return papp(ascribe(plam(a, prove(inner, g, depth)), imp(b, g)), prove(ctx, b, depth));
        }
        case 2: {
            Name a = fresh("a");
            Context inner = ctx;
            inner.assume(a, *ctx.find_hyp("hP"));
            return papp(plam(a, prove(inner, g, depth)), hyp("hP"));
        }
        case 3: {
            Name a1 = fresh("a"), a2 = fresh("a");
            const Formula& d = *ctx.find_hyp("hd");
            Context c1 = ctx, c2 = ctx;
            c1.assume(a1, d.lhs());
            c2.assume(a2, d.rhs());
            return case_of(hyp("hd"), a1, prove(c1, g, depth), a2, prove(c2, g, depth));
        }
        case 4: {
            Name x = fresh("u"), e = fresh("a");
            const Formula& ex = *ctx.find_hyp("he");
            Context inner = ctx;
            inner.declare(x, ex.sort());
            inner.assume(e, subst_formula(ex.body(), ex.name(), var(x)));
            return dest(hyp("he"), x, e, prove(inner, g, depth));
        }
        case 5: {
            Name u = fresh("u");
            Context inner = ctx;
            inner.declare(u, Type::nat());
            return tapp(ascribe(tlam(u, prove(inner, g, depth)), forall(u, Type::nat(), g)), nat_term(ctx));
        }
        default:
            return efq(hyp("hb"));
        }
    }

    Name fresh(const char* prefix) { return prefix + std::to_string(counter_++); }

    std::vector<Name> scope_of(const Context& ctx) const {
        std::vector<Name> out;
        for (const auto& [x, t] : ctx.term_vars)
            if (t == Type::nat()) out.push_back(x);
        return out;
    }

    Term nat_term(const Context& ctx) {
        std::vector<Name> scope = scope_of(ctx);
        int k = pick(rng_, 3);
        if (!scope.empty() && k == 0) return var(pick(rng_, scope));
        if (!scope.empty() && k == 1) return succ(var(pick(rng_, scope)));
        return numeral(static_cast<unsigned>(pick(rng_, 3)));
    }

    Formula goal_in(const Context& ctx, int depth) {
        std::vector<Name> scope = scope_of(ctx);
        return goal(scope, depth);
    }

    Formula goal(std::vector<Name>& scope, int depth) {
        auto term_at = [&]() -> Term {
            int k = pick(rng_, 3);
            if (!scope.empty() && k == 0) return var(pick(rng_, scope));
            if (!scope.empty() && k == 1) return succ(var(pick(rng_, scope)));
            return numeral(static_cast<unsigned>(pick(rng_, 3)));
        };
        int k = depth <= 0 ? pick(rng_, 3) : 3 + pick(rng_, 5);
        switch (k) {
        case 0:
            return pred("P", {term_at()});
        case 1:
            return pred("Q", {term_at(), term_at()});
        case 2: {
            Term t = term_at();
            return eq(t, t);
        }
        case 3:
            return conj(goal(scope, depth - 1), goal(scope, depth - 1));
        case 4:
            return disj(goal(scope, depth - 1), goal(scope, depth - 1));
        case 5:
            return imp(goal(scope, depth - 1), goal(scope, depth - 1));
        default: {
            Name x = "x" + std::to_string(scope.size());
            scope.push_back(x);
            Formula body = goal(scope, depth - 1);
            scope.pop_back();
            return k == 6 ? forall(x, Type::nat(), body) : exists(x, Type::nat(), body);
        }
        }
    }

    Rng& rng_;
    int counter_ = 0;
};

} // namespace dnsk::gen
