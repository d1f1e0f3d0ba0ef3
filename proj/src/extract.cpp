// Copyright (c) 2026 The dnsk Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "dnsk/extract.hpp"

#include "dnsk/subst.hpp"
#include "dnsk/translate.hpp"

namespace dnsk {

ExtractError::ExtractError(Kind kind, const std::string& detail)
    : std::runtime_error(std::string(dnsk::to_string(kind)) + ": " + detail), kind_(kind) {}

std::string_view to_string(ExtractError::Kind k) {
    switch (k) {
    case ExtractError::Kind::ControlNodePresent:
        return "ControlNodePresent";
    case ExtractError::Kind::UnmappedHypothesis:
        return "UnmappedHypothesis";
    case ExtractError::Kind::UnrealizableAxiom:
        return "UnrealizableAxiom";
    }
    return "?";
}

void ExtractionEnv::bind(const Name& hyp, const Name& v, const Formula& f, Context& ctx) {
    hyp_realizers.insert_or_assign(hyp, var(v));
    ctx.declare(v, mr_type(f));
}

Term dummy(const Type& t) {
    switch (t.kind()) {
    case Type::Kind::Nat:
        return zero();
    case Type::Kind::Unit:
        return star();
    case Type::Kind::Arrow:
        return lam("x", t.left(), dummy(t.right()));
    case Type::Kind::Prod:
        return pair(dummy(t.left()), dummy(t.right()));
    }
    return star();
}

namespace {

void collect_derivation_names(const Derivation& d, NameSet& out) {
    collect_names(d.proof, out);
    collect_names(d.formula, out);
    for (const auto& p : d.premises) collect_derivation_names(p, out);
}

class Extractor {
public:
    Extractor(const ExtractionEnv& env, NameSet used) : env_(env), fresh_(std::move(used)) {}

    using Scope = std::map<Name, Term>;

    Term run(const Derivation& d, const Scope& scope) {
        const std::string& r = d.rule;
        const Proof& p = d.proof;
        auto sub = [&](std::size_t i) { return run(d.premises.at(i), scope); };

        if (r == "Reset" || r == "Shift") throw ExtractError(ExtractError::Kind::ControlNodePresent, r);
        if (r == "Ax") return lookup(p.name(), scope);
        if (r == "AndI") return pair(sub(0), sub(1));
        if (r == "AndE1") return proj1(sub(0));
        if (r == "AndE2") return proj2(sub(0));
        if (r == "OrI1") return pair(pair(sub(0), dummy(mr_type(d.formula.rhs()))), zero());
        if (r == "OrI2") return pair(pair(dummy(mr_type(d.formula.lhs())), sub(0)), succ(zero()));
        if (r == "OrE") {
            Term e = sub(0);
            Term left = branch(d.premises[1], p.name(), scope, proj1(proj1(e)));
            Term right = branch(d.premises[2], p.name2(), scope, proj2(proj1(e)));
            Type tc = mr_type(d.formula);
            Name n = fresh_.next("n"), acc = fresh_.next("r");
            return rec(tc, proj2(e), left, lam(n, Type::nat(), lam(acc, tc, right)));
        }
        if (r == "ImpI") {
            Name u = fresh_.next(p.name());
            Scope inner = scope;
            inner.insert_or_assign(p.name(), var(u));
            return lam(u, mr_type(d.formula.lhs()), run(d.premises[0], inner));
        }
        if (r == "ImpE") return app(sub(0), sub(1));
        if (r == "ImpE-redex") {
            const Proof& fn = p.child(0);
            Name u = fresh_.next(fn.name());
            Scope inner = scope;
            inner.insert_or_assign(fn.name(), var(u));
            Term body = run(d.premises[0], inner);
            return app(lam(u, mr_type(d.premises[1].formula), body), sub(1));
        }
        if (r == "AllI") return lam(p.name(), d.formula.sort(), sub(0));
        if (r == "AllE") return app(sub(0), p.term());
        if (r == "ExI") return pair(sub(0), p.term());
        if (r == "ExE") {
            Term e = sub(0);
            Name u = fresh_.next(p.name2());
            Scope inner = scope;
            inner.insert_or_assign(p.name2(), var(u));
            Term body = run(d.premises[1], inner);
            body = subst_term(body, p.name(), proj2(e));
            return subst_term(body, u, proj1(e));
        }
        if (r == "BotE") return dummy(mr_type(d.formula));
        if (r == "Ascribe") return sub(0);
        throw std::logic_error("unknown rule " + r);
    }

private:
    Term branch(const Derivation& d, const Name& hyp, const Scope& scope, const Term& payload) {
        Name u = fresh_.next(hyp);
        Scope inner = scope;
        inner.insert_or_assign(hyp, var(u));
        return subst_term(run(d, inner), u, payload);
    }

    Term lookup(const Name& a, const Scope& scope) const {
        if (auto it = scope.find(a); it != scope.end()) return it->second;
        if (auto it = env_.axiom_realizers.find(a); it != env_.axiom_realizers.end()) return it->second;
        if (env_.unrealizable.count(a)) throw ExtractError(ExtractError::Kind::UnrealizableAxiom, a);
        if (auto it = env_.hyp_realizers.find(a); it != env_.hyp_realizers.end()) return it->second;
        throw ExtractError(ExtractError::Kind::UnmappedHypothesis, a);
    }

    const ExtractionEnv& env_;
    FreshNames fresh_;
};

} // namespace

Term extract_mr(const Derivation& d, const ExtractionEnv& env) {
    NameSet used;
    collect_derivation_names(d, used);
    for (const auto& [_, t] : env.hyp_realizers) collect_names(t, used);
    for (const auto& [_, t] : env.axiom_realizers) collect_names(t, used);
    return Extractor(env, std::move(used)).run(d, {});
}

Term ac_realizer(const Type& rho, const Type& sigma, const Formula& a) {
    Type ta = mr_type(a);
    Type arg = Type::arrow(rho, Type::prod(ta, sigma));
    NameSet used;
    collect_names(a, used);
    Name fa = prime_fresh("a", used);
    used.insert(fa);
    Name x = prime_fresh("x", used);
    Term ax = app(var(fa), var(x));
    return lam(fa, arg, pair(lam(x, rho, proj1(ax)), lam(x, rho, proj2(ax))));
}

Term induction_realizer(const Formula& a, const Name& n) {
    Type ta = mr_type(a);
    NameSet used;
    collect_names(a, used);
    used.insert(n);
    Name b = prime_fresh("b", used);
    used.insert(b);
    Name s = prime_fresh("s", used);
    Type step = Type::arrow(Type::nat(), Type::arrow(ta, ta));
    return lam(b, ta, lam(s, step, lam(n, Type::nat(), rec(ta, var(n), var(b), var(s)))));
}

} // namespace dnsk
